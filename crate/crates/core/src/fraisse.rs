//! A decidable term algebra of countable linear orders: finite sums of the
//! atoms `1`, `w` (the naturals), `w*` (the reversed naturals) and `q` (the
//! rationals), with an embeddability decision procedure and the least-pair
//! search over finite sequences of such orders.
//!
//! # Why the chunking recursion decides embeddability
//!
//! Any embedding of a finite sum into a finite sum can be normalized so that
//! each source atom lands inside a single target atom:
//!
//! * a `1` atom is a point;
//! * a `w` atom has a cofinal ascending tail inside the last target atom it
//!   meets, and that atom must then absorb an ascending sequence, so it is a
//!   `w` or a `q` — either absorbs the finite initial part of the source
//!   atom as well, and nothing else sits between that part and the tail;
//! * dually for `w*`;
//! * a `q` atom, split into finitely many intervals, has a part containing a
//!   full copy of the rationals; only a `q` target can hold it, and that
//!   target absorbs the rest of the source atom.
//!
//! Consecutive source atoms sharing a target atom then form a chunk, and the
//! chunks that fit a single target atom are exactly:
//!
//! * into `1`: a single `1`;
//! * into `w`: a finite run of `1`s followed by at most one final `w`
//!   (order type at most the naturalsic; a `w` followed by anything more
//!   would need an element above a cofinal sequence);
//! * into `w*`: at most one leading `w*` followed by a run of `1`s;
//! * into `q`: anything (the rationals are universal for countable orders).
//!
//! The rows are exercised against the finite-suborder refuter and the
//! classical embeddability vectors in the test suite. The sum `w + w*`
//! against `w* + w` shows the tail analysis at work: an embedded copy of `w`
//! is cofinal in whichever `w`-type target block receives its tail, leaving
//! no room above it in that block for the subsequent `w*`, and the leading
//! `w*` target block bounds only finitely many ascending elements.

use std::fmt;

use thiserror::Error;

/// One atom of an order term. Runs of `1` are stored with their length, so
/// the canonical form never has two adjacent `Ones`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Atom {
    /// `k` consecutive singleton points, `k >= 1`.
    Ones(usize),
    /// An ascending copy of the naturals.
    Omega,
    /// A descending copy of the naturals.
    OmegaStar,
    /// A copy of the rationals.
    Eta,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrderTermError {
    #[error("the empty order is excluded")]
    Empty,
    #[error("a run of ones must have positive length")]
    EmptyRun,
}

/// A countable linear order presented as a nonempty finite sum of atoms, in
/// canonical form (maximal runs of `1` merged).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderTerm {
    atoms: Vec<Atom>,
}

impl OrderTerm {
    /// Builds a term, merging adjacent runs of ones into canonical form.
    pub fn new(atoms: Vec<Atom>) -> Result<Self, OrderTermError> {
        if atoms.is_empty() {
            return Err(OrderTermError::Empty);
        }
        let mut canonical: Vec<Atom> = Vec::with_capacity(atoms.len());
        for a in atoms {
            if let Atom::Ones(k) = a {
                if k == 0 {
                    return Err(OrderTermError::EmptyRun);
                }
                if let Some(Atom::Ones(prev)) = canonical.last_mut() {
                    *prev += k;
                    continue;
                }
            }
            canonical.push(a);
        }
        Ok(OrderTerm { atoms: canonical })
    }

    pub fn atom(a: Atom) -> Self {
        OrderTerm::new(vec![a]).expect("single atom is nonempty")
    }

    pub fn fin(k: usize) -> Result<Self, OrderTermError> {
        OrderTerm::new(vec![Atom::Ones(k)])
    }

    pub fn atoms(&self) -> &[Atom] {
        &self.atoms
    }

    /// The concatenation `self + other`.
    pub fn plus(&self, other: &OrderTerm) -> OrderTerm {
        let mut atoms = self.atoms.clone();
        atoms.extend_from_slice(&other.atoms);
        OrderTerm::new(atoms).expect("concatenation of nonempty terms")
    }

    fn expanded(&self) -> Vec<ExpAtom> {
        let mut out = Vec::new();
        for a in &self.atoms {
            match a {
                Atom::Ones(k) => out.extend(std::iter::repeat_n(ExpAtom::One, *k)),
                Atom::Omega => out.push(ExpAtom::Omega),
                Atom::OmegaStar => out.push(ExpAtom::OmegaStar),
                Atom::Eta => out.push(ExpAtom::Eta),
            }
        }
        out
    }

    /// True iff the denoted order has at least `k` elements.
    pub fn has_at_least(&self, k: usize) -> bool {
        let mut count = 0usize;
        for a in &self.atoms {
            match a {
                Atom::Ones(n) => count += n,
                _ => return true,
            }
            if count >= k {
                return true;
            }
        }
        count >= k
    }
}

impl fmt::Display for OrderTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.atoms.iter().enumerate() {
            if i > 0 {
                f.write_str("+")?;
            }
            match a {
                Atom::Ones(1) => f.write_str("1")?,
                Atom::Ones(k) => write!(f, "n:{k}")?,
                Atom::Omega => f.write_str("w")?,
                Atom::OmegaStar => f.write_str("w*")?,
                Atom::Eta => f.write_str("q")?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ExpAtom {
    One,
    Omega,
    OmegaStar,
    Eta,
}

/// Decides whether the order denoted by `t` embeds into the order denoted by
/// `s`, by memoized recursion over pairs of atom suffixes.
pub fn embeds(t: &OrderTerm, s: &OrderTerm) -> bool {
    let src = t.expanded();
    let dst = s.expanded();
    let mut memo = vec![vec![None; dst.len() + 1]; src.len() + 1];
    emb(&src, &dst, 0, 0, &mut memo)
}

fn emb(src: &[ExpAtom], dst: &[ExpAtom], i: usize, j: usize, memo: &mut [Vec<Option<bool>>]) -> bool {
    if i == src.len() {
        return true;
    }
    if j == dst.len() {
        return false;
    }
    if let Some(v) = memo[i][j] {
        return v;
    }
    let mut ok = emb(src, dst, i, j + 1, memo);
    if !ok {
        for k in chunk_lengths(src, i, dst[j]) {
            if emb(src, dst, i + k, j + 1, memo) {
                ok = true;
                break;
            }
        }
    }
    memo[i][j] = Some(ok);
    ok
}

// The lengths k such that src[i..i+k] fits into a single target atom.
fn chunk_lengths(src: &[ExpAtom], i: usize, target: ExpAtom) -> Vec<usize> {
    match target {
        ExpAtom::Eta => vec![src.len() - i],
        ExpAtom::One => {
            if src[i] == ExpAtom::One {
                vec![1]
            } else {
                Vec::new()
            }
        }
        ExpAtom::Omega => {
            // a run of ones, optionally closed by a single final omega
            let mut ks = Vec::new();
            let mut k = 0;
            while i + k < src.len() && src[i + k] == ExpAtom::One {
                k += 1;
                ks.push(k);
            }
            if i + k < src.len() && src[i + k] == ExpAtom::Omega {
                ks.push(k + 1);
            }
            ks
        }
        ExpAtom::OmegaStar => {
            // optionally opened by a single omega-star, then a run of ones
            let mut ks = Vec::new();
            let mut k = 0;
            if src[i] == ExpAtom::OmegaStar {
                k = 1;
                ks.push(1);
            }
            while i + k < src.len() && src[i + k] == ExpAtom::One {
                k += 1;
                ks.push(k);
            }
            ks
        }
    }
}

/// Sound refuter for [`embeds`]: checks that every finite suborder pattern
/// of at most `k` elements realizable in `t` is realizable in `s`. A
/// suborder of a linear order is a chain, so a pattern of `m` elements is
/// realizable exactly when the order has at least `m` elements; the check
/// reduces to comparing element counts against the atoms' combinatorics.
/// `false` implies that `t` does not embed into `s`.
pub fn finite_suborder_check(t: &OrderTerm, s: &OrderTerm, k: usize) -> bool {
    assert!(k <= 6, "pattern size bound is capped at 6");
    (1..=k).all(|m| !t.has_at_least(m) || s.has_at_least(m))
}

/// Every canonical term with at most `max_atoms` expanded atoms, deduplicated.
/// Substrate for the exhaustive law suites.
pub fn all_terms_up_to(max_atoms: usize) -> Vec<OrderTerm> {
    let atoms = [Atom::Ones(1), Atom::Omega, Atom::OmegaStar, Atom::Eta];
    let mut pool: Vec<OrderTerm> = Vec::new();
    let mut layer: Vec<Vec<Atom>> = vec![Vec::new()];
    for _ in 0..max_atoms {
        let mut next = Vec::new();
        for seq in &layer {
            for a in atoms {
                let mut s = seq.clone();
                s.push(a);
                next.push(s);
            }
        }
        for seq in &next {
            let t = OrderTerm::new(seq.clone()).unwrap();
            if !pool.contains(&t) {
                pool.push(t);
            }
        }
        layer = next;
    }
    pool
}

/// The lexicographically least pair `i < j` with `embeds(terms[i],
/// terms[j])`, if any. Finite sequences may be antichains, so absence is a
/// legitimate outcome.
pub fn fraisse_pair(terms: &[OrderTerm]) -> Option<(usize, usize)> {
    for i in 0..terms.len() {
        for j in (i + 1)..terms.len() {
            if embeds(&terms[i], &terms[j]) {
                return Some((i, j));
            }
        }
    }
    None
}
