//! Command-line front end: term parsing, comparison, enumeration, descent
//! probes, array ingestion, and the witness searches, with one structured
//! report line per query.
//!
//! Report format: `cmd="<echo>" digest=<hex> status=<outcome>
//! witness="<payload>" verified=<bool> elapsed_ms=<n>`. The echo and digest
//! identify the query (the digest also covers file contents and the seed);
//! everything except `elapsed_ms` is byte-stable for fixed input and seed.
//!
//! Exit codes: 0 found, 1 none, 2 input error, 3 window exhausted.

use std::cmp::Ordering;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use sha2::{Digest, Sha256};

use ordlab::{
    base_descent, cofinite_homogeneous_search, embeds, finite_suborder_check, fraisse_pair,
    good_pair_search, omega_compare, omega_descend_lift, omega_enumerate, parse_base_order,
    parse_omega_term, parse_order_term, parse_theta_term, theta_compare, theta_descend_search,
    three_antichain_good_pair, verify_homogeneous, ArrayError, QuasiOrder, StabilizingArray,
};

#[derive(Parser)]
#[command(name = "ordlab", version, about = "Ordinal notations, good-pair searches, and linear-order embeddability")]
struct Cli {
    /// Seed for randomized kernels; folded into the input digest.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Parallelism hint for search kernels. Witnesses and output bytes do
    /// not depend on it.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,

    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compare two exponent-sequence terms over a base order.
    CompareOmega {
        /// Base order: `fin:N`, `omega`, `omega*`, `lex(X,Y)`.
        #[arg(long)]
        base: String,
        left: String,
        right: String,
    },
    /// Compare two collapsing-system terms over a base order.
    CompareTheta {
        #[arg(long)]
        base: String,
        left: String,
        right: String,
    },
    /// List the first terms of the exponent-sequence system in ascending order.
    EnumerateOmega {
        #[arg(long)]
        base: String,
        /// How many terms to list.
        #[arg(long, default_value_t = 10)]
        target: usize,
    },
    /// Probe the well-ordering principle: lift a descending sequence of the
    /// base order into the chosen notation system, or report none.
    Descend {
        #[arg(long)]
        base: String,
        /// Which notation system to probe: `omega` or `theta`.
        #[arg(long, default_value = "theta")]
        notation: String,
        /// Requested chain length.
        #[arg(long, default_value_t = 100)]
        budget: usize,
    },
    /// Decide whether the first order term embeds into the second.
    Embed { source: String, target: String },
    /// Find the least pair i < j with terms[i] embeddable into terms[j].
    Fraisse {
        #[arg(required = true)]
        terms: Vec<String>,
    },
    /// Search a stabilizing array for a good pair. With three colours the
    /// antichain extraction runs; otherwise the plain antichain search.
    GoodPair {
        #[arg(long)]
        file: PathBuf,
        /// Expected colour count; cross-checked against the file header.
        #[arg(long)]
        colors: Option<usize>,
        /// Homogeneous-set size for the extraction's first step.
        #[arg(long)]
        target: Option<usize>,
        #[arg(long)]
        window: Option<u32>,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long)]
        guard: Option<usize>,
    },
    /// Search for a set on which the limit is constant across cofinite
    /// subsets, and report it with its colour.
    Ramsey {
        #[arg(long)]
        file: PathBuf,
        /// Size of the homogeneous set to search for.
        #[arg(long)]
        target: usize,
        #[arg(long)]
        colors: Option<usize>,
        #[arg(long)]
        window: Option<u32>,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long)]
        guard: Option<usize>,
    },
    /// Check an array file: shape, totality, and the guard certificate.
    VerifyArray {
        #[arg(long)]
        file: PathBuf,
        #[arg(long)]
        colors: Option<usize>,
        #[arg(long)]
        window: Option<u32>,
        #[arg(long)]
        depth: Option<usize>,
        #[arg(long)]
        guard: Option<usize>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Status {
    Found,
    None,
    InputError,
    WindowExhausted,
}

impl Status {
    fn label(self) -> &'static str {
        match self {
            Status::Found => "found",
            Status::None => "none",
            Status::InputError => "input-error",
            Status::WindowExhausted => "window-exhausted",
        }
    }

    fn exit(self) -> u8 {
        match self {
            Status::Found => 0,
            Status::None => 1,
            Status::InputError => 2,
            Status::WindowExhausted => 3,
        }
    }
}

struct Report {
    status: Status,
    witness: String,
    verified: bool,
}

impl Report {
    fn found(witness: impl Into<String>, verified: bool) -> Self {
        Report {
            status: Status::Found,
            witness: witness.into(),
            verified,
        }
    }

    fn none(witness: impl Into<String>, verified: bool) -> Self {
        Report {
            status: Status::None,
            witness: witness.into(),
            verified,
        }
    }

    fn input_error(msg: impl Into<String>) -> Self {
        Report {
            status: Status::InputError,
            witness: msg.into(),
            verified: false,
        }
    }

    fn exhausted(msg: impl Into<String>) -> Self {
        Report {
            status: Status::WindowExhausted,
            witness: msg.into(),
            verified: false,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if cli.jobs == 0 {
        eprintln!("--jobs must be at least 1");
        return ExitCode::from(2);
    }
    let started = Instant::now();
    let (echo, digest_input) = describe(&cli.cmd);
    let mut hasher = Sha256::new();
    hasher.update(digest_input.as_bytes());
    hasher.update(cli.seed.to_le_bytes());
    let digest = hex::encode(&hasher.finalize()[..8]);
    let report = run(&cli.cmd);
    let elapsed_ms = started.elapsed().as_millis();
    println!(
        "cmd=\"{echo}\" digest={digest} status={status} witness=\"{witness}\" verified={verified} elapsed_ms={elapsed_ms}",
        status = report.status.label(),
        witness = report.witness,
        verified = report.verified,
    );
    ExitCode::from(report.status.exit())
}

// Canonical echo (excluding the global flags) and the digest preimage,
// which additionally covers referenced file contents.
fn describe(cmd: &Cmd) -> (String, String) {
    let mut echo = String::new();
    let mut digest = String::new();
    match cmd {
        Cmd::CompareOmega { base, left, right } => {
            let _ = write!(echo, "compare-omega --base {base} {left} {right}");
        }
        Cmd::CompareTheta { base, left, right } => {
            let _ = write!(echo, "compare-theta --base {base} {left} {right}");
        }
        Cmd::EnumerateOmega { base, target } => {
            let _ = write!(echo, "enumerate-omega --base {base} --target {target}");
        }
        Cmd::Descend {
            base,
            notation,
            budget,
        } => {
            let _ = write!(echo, "descend --base {base} --notation {notation} --budget {budget}");
        }
        Cmd::Embed { source, target } => {
            let _ = write!(echo, "embed {source} {target}");
        }
        Cmd::Fraisse { terms } => {
            let _ = write!(echo, "fraisse {}", terms.join(" "));
        }
        Cmd::GoodPair {
            file,
            colors,
            target,
            ..
        } => {
            let _ = write!(echo, "good-pair --file {}", file.display());
            if let Some(c) = colors {
                let _ = write!(echo, " --colors {c}");
            }
            if let Some(t) = target {
                let _ = write!(echo, " --target {t}");
            }
            digest.push_str(&std::fs::read_to_string(file).unwrap_or_default());
        }
        Cmd::Ramsey { file, target, .. } => {
            let _ = write!(echo, "ramsey --file {} --target {target}", file.display());
            digest.push_str(&std::fs::read_to_string(file).unwrap_or_default());
        }
        Cmd::VerifyArray { file, .. } => {
            let _ = write!(echo, "verify-array --file {}", file.display());
            digest.push_str(&std::fs::read_to_string(file).unwrap_or_default());
        }
    }
    digest.push('\x1f');
    digest.push_str(&echo);
    (echo, digest)
}

fn run(cmd: &Cmd) -> Report {
    match cmd {
        Cmd::CompareOmega { base, left, right } => compare_omega(base, left, right),
        Cmd::CompareTheta { base, left, right } => compare_theta(base, left, right),
        Cmd::EnumerateOmega { base, target } => enumerate_omega(base, *target),
        Cmd::Descend {
            base,
            notation,
            budget,
        } => descend(base, notation, *budget),
        Cmd::Embed { source, target } => embed(source, target),
        Cmd::Fraisse { terms } => fraisse(terms),
        Cmd::GoodPair {
            file,
            colors,
            target,
            window,
            depth,
            guard,
        } => match load_array(file, *window, *depth, *guard, *colors) {
            Ok(a) => good_pair(&a, *colors, *target),
            Err(r) => r,
        },
        Cmd::Ramsey {
            file,
            target,
            colors,
            window,
            depth,
            guard,
        } => match load_array(file, *window, *depth, *guard, *colors) {
            Ok(a) => ramsey(&a, *target),
            Err(r) => r,
        },
        Cmd::VerifyArray {
            file,
            colors,
            window,
            depth,
            guard,
        } => match load_array(file, *window, *depth, *guard, *colors) {
            Ok(a) => {
                let verified = a.validate().is_ok();
                Report::found(
                    format!(
                        "array window={} depth={} guard={} colors={} entries certified",
                        a.window(),
                        a.depth(),
                        a.guard(),
                        a.colors()
                    ),
                    verified,
                )
            }
            Err(r) => r,
        },
    }
}

fn ordering_name(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "LT",
        Ordering::Equal => "EQ",
        Ordering::Greater => "GT",
    }
}

fn compare_omega(base: &str, left: &str, right: &str) -> Report {
    let x = match parse_base_order(base) {
        Ok(x) => x,
        Err(e) => return Report::input_error(format!("base order: {e}")),
    };
    let s = match parse_omega_term(left) {
        Ok(t) => t,
        Err(e) => return Report::input_error(format!("left term: {e}")),
    };
    let t = match parse_omega_term(right) {
        Ok(t) => t,
        Err(e) => return Report::input_error(format!("right term: {e}")),
    };
    match omega_compare(&x, &s, &t) {
        Ok(o) => {
            let verified = omega_compare(&x, &t, &s).map(|r| r == o.reverse()).unwrap_or(false);
            Report::found(ordering_name(o), verified)
        }
        Err(e) => Report::input_error(e.to_string()),
    }
}

fn compare_theta(base: &str, left: &str, right: &str) -> Report {
    let x = match parse_base_order(base) {
        Ok(x) => x,
        Err(e) => return Report::input_error(format!("base order: {e}")),
    };
    let s = match parse_theta_term(left) {
        Ok(t) => t,
        Err(e) => return Report::input_error(format!("left term: {e}")),
    };
    let t = match parse_theta_term(right) {
        Ok(t) => t,
        Err(e) => return Report::input_error(format!("right term: {e}")),
    };
    match theta_compare(&x, &s, &t) {
        Ok(o) => {
            let verified = theta_compare(&x, &t, &s).map(|r| r == o.reverse()).unwrap_or(false);
            Report::found(ordering_name(o), verified)
        }
        Err(e) => Report::input_error(e.to_string()),
    }
}

fn enumerate_omega(base: &str, target: usize) -> Report {
    let x = match parse_base_order(base) {
        Ok(x) => x,
        Err(e) => return Report::input_error(format!("base order: {e}")),
    };
    match omega_enumerate(&x, target) {
        Ok(terms) => {
            let verified = terms.windows(2).all(|w| {
                omega_compare(&x, &w[0], &w[1]).map(|o| o == Ordering::Less).unwrap_or(false)
            });
            let listing: Vec<String> = terms.iter().map(|t| t.to_string()).collect();
            Report::found(listing.join(", "), verified)
        }
        Err(e) => Report::input_error(e.to_string()),
    }
}

fn descend(base: &str, notation: &str, budget: usize) -> Report {
    let x = match parse_base_order(base) {
        Ok(x) => x,
        Err(e) => return Report::input_error(format!("base order: {e}")),
    };
    if budget == 0 {
        return Report::input_error("--budget must be at least 1");
    }
    match notation {
        "omega" => match base_descent(&x) {
            Some(d) => {
                let lifted = omega_descend_lift(&x, &d);
                let chain = lifted.prefix(budget);
                let verified = chain.windows(2).all(|w| {
                    omega_compare(&x, &w[1], &w[0]).map(|o| o == Ordering::Less).unwrap_or(false)
                });
                let rendered: Vec<String> = chain.iter().map(|t| t.to_string()).collect();
                Report::found(rendered.join(" > "), verified)
            }
            None => Report::none("no descending sequence found within the budget", true),
        },
        "theta" => match theta_descend_search(&x, budget) {
            Some(chain) => {
                let verified = chain.windows(2).all(|w| {
                    theta_compare(&x, &w[1], &w[0]).map(|o| o == Ordering::Less).unwrap_or(false)
                });
                let rendered: Vec<String> = chain.iter().map(|t| t.to_string()).collect();
                Report::found(rendered.join(" > "), verified)
            }
            None => Report::none("no descending sequence found within the budget", true),
        },
        other => Report::input_error(format!("unknown notation `{other}`, expected omega or theta")),
    }
}

fn embed(source: &str, target: &str) -> Report {
    let t = match parse_order_term(source) {
        Ok(t) => t,
        Err(e) => return Report::input_error(format!("source term: {e}")),
    };
    let s = match parse_order_term(target) {
        Ok(t) => t,
        Err(e) => return Report::input_error(format!("target term: {e}")),
    };
    if embeds(&t, &s) {
        // a positive verdict must not be contradicted by the refuter
        Report::found("yes", finite_suborder_check(&t, &s, 6))
    } else {
        Report::none("no", true)
    }
}

fn fraisse(terms: &[String]) -> Report {
    let mut parsed = Vec::with_capacity(terms.len());
    for (i, raw) in terms.iter().enumerate() {
        match parse_order_term(raw) {
            Ok(t) => parsed.push(t),
            Err(e) => return Report::input_error(format!("term {i}: {e}")),
        }
    }
    match fraisse_pair(&parsed) {
        Some((i, j)) => {
            let verified = embeds(&parsed[i], &parsed[j]);
            Report::found(format!("({i},{j})"), verified)
        }
        None => Report::none("no embeddable pair in the sequence", true),
    }
}

fn load_array(
    file: &PathBuf,
    window: Option<u32>,
    depth: Option<usize>,
    guard: Option<usize>,
    colors: Option<usize>,
) -> Result<StabilizingArray, Report> {
    let text = std::fs::read_to_string(file)
        .map_err(|e| Report::input_error(format!("{}: {e}", file.display())))?;
    let a = StabilizingArray::parse(&text).map_err(|e| Report::input_error(e.to_string()))?;
    let checks = [
        ("window", window.map(|w| w as usize), a.window() as usize),
        ("depth", depth, a.depth()),
        ("guard", guard, a.guard()),
        ("colors", colors, a.colors()),
    ];
    for (name, expected, actual) in checks {
        if let Some(want) = expected {
            if want != actual {
                return Err(Report::input_error(format!(
                    "--{name} {want} does not match the file header ({actual})"
                )));
            }
        }
    }
    Ok(a)
}

fn good_pair(a: &StabilizingArray, colors: Option<usize>, target: Option<usize>) -> Report {
    let colors = colors.unwrap_or_else(|| a.colors());
    if colors == 3 {
        match three_antichain_good_pair(a, target) {
            Ok(x) => {
                let vx = a.fbar(&x);
                let vt = a.fbar(&x.drop_min());
                let verified = matches!((&vx, &vt), (Ok(p), Ok(q)) if p == q);
                Report::found(format!("{x} value={}", vx.map(|v| v.to_string()).unwrap_or_default()), verified)
            }
            Err(ArrayError::WindowExhausted) => {
                Report::exhausted("window exhausted before the extraction completed")
            }
            Err(e) => Report::input_error(e.to_string()),
        }
    } else {
        match good_pair_search(a, &QuasiOrder::antichain(colors)) {
            Some(x) => {
                let vx = a.fbar(&x);
                let vt = a.fbar(&x.drop_min());
                let verified = matches!((&vx, &vt), (Ok(p), Ok(q)) if p == q);
                Report::found(format!("{x} value={}", vx.map(|v| v.to_string()).unwrap_or_default()), verified)
            }
            None => Report::none("no good pair within the window", true),
        }
    }
}

fn ramsey(a: &StabilizingArray, target: usize) -> Report {
    if target < a.effective_depth() {
        return Report::input_error(format!(
            "--target {target} is below the value depth {}",
            a.effective_depth()
        ));
    }
    match cofinite_homogeneous_search(a, target) {
        Some((x, color)) => {
            let verified = verify_homogeneous(a, &x, a.effective_depth());
            Report::found(format!("{x} color={color}"), verified)
        }
        None => Report::none("no homogeneous set of the requested size", true),
    }
}
