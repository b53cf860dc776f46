//! Finite sets of naturals in increasing enumeration, with the prefix, drop
//! and above operations the good-pair machinery is phrased in.

use std::fmt;

use super::array::ArrayError;

/// A finite set of naturals, stored as its strictly increasing enumeration.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FinSet(Vec<u32>);

impl FinSet {
    /// Builds a set from a strictly increasing sequence.
    pub fn new(elements: Vec<u32>) -> Result<Self, ArrayError> {
        if elements.windows(2).any(|w| w[0] >= w[1]) {
            return Err(ArrayError::NotIncreasing {
                seq: format!("{elements:?}"),
            });
        }
        Ok(FinSet(elements))
    }

    /// Builds a set from arbitrary elements by sorting and deduplicating.
    pub fn from_unsorted(mut elements: Vec<u32>) -> Self {
        elements.sort_unstable();
        elements.dedup();
        FinSet(elements)
    }

    pub fn empty() -> Self {
        FinSet(Vec::new())
    }

    /// The full window `{0, ..., m-1}`.
    pub fn window(m: u32) -> Self {
        FinSet((0..m).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn elements(&self) -> &[u32] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, n: u32) -> bool {
        self.0.binary_search(&n).is_ok()
    }

    pub fn max(&self) -> Option<u32> {
        self.0.last().copied()
    }

    /// The prefix `X[n]`: the `n` smallest elements.
    pub fn prefix(&self, n: usize) -> FinSet {
        FinSet(self.0[..n.min(self.0.len())].to_vec())
    }

    /// `X` without its minimum; the empty set stays empty.
    pub fn drop_min(&self) -> FinSet {
        FinSet(self.0.iter().skip(1).copied().collect())
    }

    /// `X^{-i}`: the set without its `i` smallest elements. `i` may not
    /// exceed the size.
    pub fn drop(&self, i: usize) -> Result<FinSet, ArrayError> {
        if i > self.0.len() {
            return Err(ArrayError::OutOfRange {
                asked: i,
                size: self.0.len(),
            });
        }
        Ok(FinSet(self.0[i..].to_vec()))
    }

    /// `Y/s`: the elements of `self` strictly above every element of `s`.
    pub fn above(&self, s: &FinSet) -> FinSet {
        match s.max() {
            None => self.clone(),
            Some(m) => FinSet(self.0.iter().copied().filter(|&n| n > m).collect()),
        }
    }

    /// True iff `self` is a *proper* initial segment of `t`, i.e. `self`
    /// equals `t[m]` for some `m < |t|`.
    pub fn is_initial_segment_of(&self, t: &FinSet) -> bool {
        self.0.len() < t.0.len() && self.0[..] == t.0[..self.0.len()]
    }

    /// Union of two sets where every element of `self` is below every
    /// element of `high`; the inputs must not interleave.
    pub fn join_above(&self, high: &FinSet) -> FinSet {
        if let (Some(m), Some(h)) = (self.max(), high.0.first()) {
            debug_assert!(m < *h, "join_above inputs interleave");
        }
        let mut v = self.0.clone();
        v.extend_from_slice(&high.0);
        FinSet(v)
    }
}

impl fmt::Display for FinSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, n) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{n}")?;
        }
        f.write_str("}")
    }
}

impl FromIterator<u32> for FinSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        FinSet::from_unsorted(iter.into_iter().collect())
    }
}
