//! Finite-window truncations of eventually constant functions.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use super::finset::FinSet;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArrayError {
    #[error("sequence is not strictly increasing: {seq}")]
    NotIncreasing { seq: String },
    #[error("cannot drop {asked} elements from a set of size {size}")]
    OutOfRange { asked: usize, size: usize },
    #[error("element {element} is outside the window of size {window}")]
    OutOfWindow { element: u32, window: u32 },
    #[error("set {set} determines only {got} elements, {need} are required")]
    TooFewElements { set: String, need: usize, got: usize },
    #[error("values along the prefix chain of {set} do not stabilize")]
    NotStabilized { set: String },
    #[error("no value recorded for {set}")]
    MissingValue { set: String },
    #[error("window exhausted: the truncation is too small to complete the search")]
    WindowExhausted,
    #[error("invalid quasi-order: {reason}")]
    BadQuasiOrder { reason: String },
    #[error("invalid array: {reason}")]
    Invalid { reason: String },
    #[error("array file, line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A total value table on the subsets of `{0..window-1}` of size at most
/// `depth`, certified to stabilize: along every maximal prefix chain the last
/// `guard + 1` values agree. The common value defines the limit function
/// computed by [`StabilizingArray::fbar`].
///
/// A uniform array additionally declares a depth `d` at which values on sets
/// with at least `d` elements depend only on the `d` smallest; its limit is
/// then exact on every set with `d` or more elements, and the table only
/// needs the size-`d` subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizingArray {
    window: u32,
    depth: usize,
    guard: usize,
    colors: usize,
    uniform: Option<usize>,
    values: BTreeMap<FinSet, usize>,
}

impl StabilizingArray {
    /// Builds and validates a general array. `values` must cover every
    /// subset of the window of size at most `depth`.
    pub fn new(
        window: u32,
        depth: usize,
        guard: usize,
        colors: usize,
        values: BTreeMap<FinSet, usize>,
    ) -> Result<Self, ArrayError> {
        let a = StabilizingArray {
            window,
            depth,
            guard,
            colors,
            uniform: None,
            values,
        };
        a.validate()?;
        Ok(a)
    }

    /// Builds and validates a uniform array of declared depth `d`. `table`
    /// must cover every size-`d` subset of the window; values on smaller sets
    /// may be listed and default to colour 0 otherwise.
    pub fn new_uniform(
        window: u32,
        depth: usize,
        guard: usize,
        colors: usize,
        d: usize,
        table: BTreeMap<FinSet, usize>,
    ) -> Result<Self, ArrayError> {
        let a = StabilizingArray {
            window,
            depth,
            guard,
            colors,
            uniform: Some(d),
            values: table,
        };
        a.validate()?;
        Ok(a)
    }

    /// Builds an array without running the certificate check. Intended for
    /// tests that need a deliberately broken truncation.
    pub fn new_unchecked(
        window: u32,
        depth: usize,
        guard: usize,
        colors: usize,
        uniform: Option<usize>,
        values: BTreeMap<FinSet, usize>,
    ) -> Self {
        StabilizingArray {
            window,
            depth,
            guard,
            colors,
            uniform,
            values,
        }
    }

    pub fn window(&self) -> u32 {
        self.window
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn guard(&self) -> usize {
        self.guard
    }

    pub fn colors(&self) -> usize {
        self.colors
    }

    pub fn uniform_depth(&self) -> Option<usize> {
        self.uniform
    }

    /// The table depth at which the limit is already determined: the declared
    /// uniform depth, or the full table depth for general arrays.
    pub fn effective_depth(&self) -> usize {
        self.uniform.unwrap_or(self.depth)
    }

    /// Checks the shape, totality and stabilization certificate.
    pub fn validate(&self) -> Result<(), ArrayError> {
        if self.guard < 1 {
            return Err(ArrayError::Invalid {
                reason: "guard must be at least 1".into(),
            });
        }
        if self.colors < 1 {
            return Err(ArrayError::Invalid {
                reason: "at least one colour is required".into(),
            });
        }
        if let Some(d) = self.uniform {
            if self.depth < d + self.guard {
                return Err(ArrayError::Invalid {
                    reason: format!(
                        "uniform depth {d} with guard {} needs table depth at least {}",
                        self.guard,
                        d + self.guard
                    ),
                });
            }
        } else if self.depth < self.guard {
            return Err(ArrayError::Invalid {
                reason: format!("table depth {} is below the guard {}", self.depth, self.guard),
            });
        }
        for (s, &v) in &self.values {
            if let Some(&e) = s.elements().iter().find(|&&e| e >= self.window) {
                return Err(ArrayError::OutOfWindow {
                    element: e,
                    window: self.window,
                });
            }
            if s.len() > self.depth {
                return Err(ArrayError::Invalid {
                    reason: format!("listed set {s} exceeds the table depth {}", self.depth),
                });
            }
            if v >= self.colors {
                return Err(ArrayError::Invalid {
                    reason: format!("value {v} on {s} exceeds the colour count {}", self.colors),
                });
            }
        }
        // totality at the depth the limit reads from
        let need = self.effective_depth();
        let universe: Vec<u32> = (0..self.window).collect();
        let mut missing: Option<FinSet> = None;
        for_each_k_subset(&universe, need, &mut |s| {
            if missing.is_none() && !self.values.contains_key(&FinSet::from_unsorted(s.to_vec())) {
                missing = Some(FinSet::from_unsorted(s.to_vec()));
            }
        });
        if let Some(s) = missing {
            return Err(ArrayError::MissingValue { set: s.to_string() });
        }
        if self.uniform.is_none() {
            // general arrays need every size up to the table depth,
            // and the guard certificate on every maximal chain
            for k in 0..self.depth {
                let mut missing: Option<FinSet> = None;
                for_each_k_subset(&universe, k, &mut |s| {
                    if missing.is_none()
                        && !self.values.contains_key(&FinSet::from_unsorted(s.to_vec()))
                    {
                        missing = Some(FinSet::from_unsorted(s.to_vec()));
                    }
                });
                if let Some(s) = missing {
                    return Err(ArrayError::MissingValue { set: s.to_string() });
                }
            }
            let mut bad: Option<FinSet> = None;
            for_each_k_subset(&universe, self.depth, &mut |s| {
                if bad.is_some() {
                    return;
                }
                let y = FinSet::from_unsorted(s.to_vec());
                let first = self.values[&y.prefix(self.depth - self.guard)];
                for k in (self.depth - self.guard + 1)..=self.depth {
                    if self.values[&y.prefix(k)] != first {
                        bad = Some(y.clone());
                        return;
                    }
                }
            });
            if let Some(y) = bad {
                return Err(ArrayError::NotStabilized { set: y.to_string() });
            }
        }
        Ok(())
    }

    /// The raw table value `f(s)`.
    pub fn value(&self, s: &FinSet) -> Result<usize, ArrayError> {
        if let Some(&e) = s.elements().iter().find(|&&e| e >= self.window) {
            return Err(ArrayError::OutOfWindow {
                element: e,
                window: self.window,
            });
        }
        if s.len() > self.depth {
            return Err(ArrayError::TooFewElements {
                set: s.to_string(),
                need: self.depth,
                got: s.len(),
            });
        }
        if let Some(d) = self.uniform {
            if s.len() >= d {
                let key = s.prefix(d);
                return self
                    .values
                    .get(&key)
                    .copied()
                    .ok_or(ArrayError::MissingValue { set: key.to_string() });
            }
            return Ok(self.values.get(s).copied().unwrap_or(0));
        }
        self.values
            .get(s)
            .copied()
            .ok_or(ArrayError::MissingValue { set: s.to_string() })
    }

    /// The stabilized value of `x`: the common table value along the tail of
    /// `x`'s prefix chain. For a uniform array this is exactly the value on
    /// the `d` smallest elements; for a general array the guard segment of
    /// the chain is re-checked and a disagreement rejects the array as a
    /// faithful truncation for this `x`.
    pub fn fbar(&self, x: &FinSet) -> Result<usize, ArrayError> {
        if let Some(&e) = x.elements().iter().find(|&&e| e >= self.window) {
            return Err(ArrayError::OutOfWindow {
                element: e,
                window: self.window,
            });
        }
        if let Some(d) = self.uniform {
            if x.len() < d {
                return Err(ArrayError::TooFewElements {
                    set: x.to_string(),
                    need: d,
                    got: x.len(),
                });
            }
            return self.value(&x.prefix(d));
        }
        if x.len() < self.depth {
            return Err(ArrayError::TooFewElements {
                set: x.to_string(),
                need: self.depth,
                got: x.len(),
            });
        }
        let stable = self.value(&x.prefix(self.depth - self.guard))?;
        for k in (self.depth - self.guard + 1)..=self.depth {
            if self.value(&x.prefix(k))? != stable {
                return Err(ArrayError::NotStabilized { set: x.to_string() });
            }
        }
        Ok(stable)
    }

    /// Derives the two-colour array distinguishing `top` from every other
    /// colour: the derived value is 1 exactly where the original value equals
    /// `top`. Certificates survive the recolouring.
    pub fn derive_two_coloring(&self, top: usize) -> StabilizingArray {
        let values = self
            .values
            .iter()
            .map(|(s, &v)| (s.clone(), usize::from(v == top)))
            .collect();
        StabilizingArray {
            window: self.window,
            depth: self.depth,
            guard: self.guard,
            colors: 2,
            uniform: self.uniform,
            values,
        }
    }

    /// Parses the array file format: a header `window M depth D guard g
    /// colors q`, an optional `uniform d` line, then one `subset value` line
    /// per table entry (the value last, the subset elements before it; a line
    /// with a single number is the empty-set entry).
    pub fn parse(text: &str) -> Result<StabilizingArray, ArrayError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(ArrayError::Parse {
            line: 1,
            msg: "empty file, expected header".into(),
        })?;
        let toks: Vec<&str> = header.split_whitespace().collect();
        if toks.len() != 8
            || toks[0] != "window"
            || toks[2] != "depth"
            || toks[4] != "guard"
            || toks[6] != "colors"
        {
            return Err(ArrayError::Parse {
                line: hline,
                msg: "expected `window M depth D guard g colors q`".into(),
            });
        }
        let num = |line: usize, t: &str| -> Result<usize, ArrayError> {
            t.parse().map_err(|_| ArrayError::Parse {
                line,
                msg: format!("expected a number, found `{t}`"),
            })
        };
        let window = num(hline, toks[1])? as u32;
        let depth = num(hline, toks[3])?;
        let guard = num(hline, toks[5])?;
        let colors = num(hline, toks[7])?;

        let mut uniform = None;
        let mut rest: Vec<(usize, &str)> = lines.collect();
        if let Some(&(uline, l)) = rest.first() {
            let t: Vec<&str> = l.split_whitespace().collect();
            if t.first() == Some(&"uniform") {
                if t.len() != 2 {
                    return Err(ArrayError::Parse {
                        line: uline,
                        msg: "expected `uniform d`".into(),
                    });
                }
                uniform = Some(num(uline, t[1])?);
                rest.remove(0);
            }
        }

        let mut values = BTreeMap::new();
        for (lno, l) in rest {
            let toks: Vec<&str> = l.split_whitespace().collect();
            let (subset, value) = toks.split_at(toks.len() - 1);
            let elems: Result<Vec<u32>, _> = subset
                .iter()
                .map(|t| {
                    t.parse::<u32>().map_err(|_| ArrayError::Parse {
                        line: lno,
                        msg: format!("expected a natural, found `{t}`"),
                    })
                })
                .collect();
            let set = FinSet::new(elems?).map_err(|e| ArrayError::Parse {
                line: lno,
                msg: e.to_string(),
            })?;
            let v = num(lno, value[0])?;
            if values.insert(set.clone(), v).is_some() {
                return Err(ArrayError::Parse {
                    line: lno,
                    msg: format!("duplicate entry for {set}"),
                });
            }
        }

        let a = StabilizingArray {
            window,
            depth,
            guard,
            colors,
            uniform,
            values,
        };
        a.validate()?;
        Ok(a)
    }

    /// Renders the array in the file format accepted by [`Self::parse`].
    pub fn to_file_string(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "window {} depth {} guard {} colors {}",
            self.window, self.depth, self.guard, self.colors
        );
        if let Some(d) = self.uniform {
            let _ = writeln!(out, "uniform {d}");
        }
        for (s, v) in &self.values {
            for e in s.iter() {
                let _ = write!(out, "{e} ");
            }
            let _ = writeln!(out, "{v}");
        }
        out
    }
}

/// Calls `f` on every `k`-subset of `universe`, in lexicographic order of the
/// increasing enumerations.
pub(crate) fn for_each_k_subset(universe: &[u32], k: usize, f: &mut dyn FnMut(&[u32])) {
    fn rec(universe: &[u32], k: usize, start: usize, acc: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
        if acc.len() == k {
            f(acc);
            return;
        }
        let remaining = k - acc.len();
        for i in start..=universe.len().saturating_sub(remaining) {
            acc.push(universe[i]);
            rec(universe, k, i + 1, acc, f);
            acc.pop();
        }
    }
    if k > universe.len() {
        return;
    }
    rec(universe, k, 0, &mut Vec::with_capacity(k), f);
}
