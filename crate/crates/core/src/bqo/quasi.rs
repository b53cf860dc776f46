//! Finite quasi-orders given by an explicit relation table.

use super::array::ArrayError;

/// A reflexive transitive relation on `{0, ..., size-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuasiOrder {
    size: usize,
    leq: Vec<bool>,
}

impl QuasiOrder {
    /// Builds a quasi-order from a row-major `size * size` table, rejecting
    /// tables that are not reflexive and transitive.
    pub fn new(size: usize, leq: Vec<bool>) -> Result<Self, ArrayError> {
        if leq.len() != size * size {
            return Err(ArrayError::BadQuasiOrder {
                reason: format!("table has {} entries, need {}", leq.len(), size * size),
            });
        }
        let q = QuasiOrder { size, leq };
        for a in 0..size {
            if !q.leq(a, a) {
                return Err(ArrayError::BadQuasiOrder {
                    reason: format!("not reflexive at {a}"),
                });
            }
            for b in 0..size {
                for c in 0..size {
                    if q.leq(a, b) && q.leq(b, c) && !q.leq(a, c) {
                        return Err(ArrayError::BadQuasiOrder {
                            reason: format!("not transitive at {a} {b} {c}"),
                        });
                    }
                }
            }
        }
        Ok(q)
    }

    /// The antichain: only the reflexive pairs relate.
    pub fn antichain(size: usize) -> Self {
        let mut leq = vec![false; size * size];
        for a in 0..size {
            leq[a * size + a] = true;
        }
        QuasiOrder { size, leq }
    }

    /// The total order `0 <= 1 <= ... <= size-1`.
    pub fn chain(size: usize) -> Self {
        let mut leq = vec![false; size * size];
        for a in 0..size {
            for b in a..size {
                leq[a * size + b] = true;
            }
        }
        QuasiOrder { size, leq }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        assert!(a < self.size && b < self.size);
        self.leq[a * self.size + b]
    }
}
