//! Presented base orders: finite chains, `omega`, its reverse `omega*`, and
//! lexicographic pairs of those. These are the exponent/index orders that the
//! notation systems in [`crate::omega`] and [`crate::theta`] are built over.
//!
//! Elements are canonical codes: naturals for the atomic variants, nested
//! pairs for lexicographic products. Everything here is immutable and pure.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

/// Maximum nesting depth for lexicographic pairs accepted by [`BaseOrder::validate`].
pub const MAX_LEX_DEPTH: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum BaseOrder {
    /// Finite chain with elements `0 < 1 < ... < n-1`.
    Fin(usize),
    /// The naturals with their usual order.
    Omega,
    /// The naturals with the reversed order: `... < 2 < 1 < 0`.
    OmegaStar,
    /// Lexicographic product, left coordinate compared first.
    LexPair(Box<BaseOrder>, Box<BaseOrder>),
}

/// Canonical element code of a [`BaseOrder`]: a natural for the atomic
/// variants, a pair of codes for `LexPair`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Element {
    Nat(u64),
    Pair(Box<Element>, Box<Element>),
}

impl Element {
    pub fn nat(n: u64) -> Self {
        Element::Nat(n)
    }

    pub fn pair(left: Element, right: Element) -> Self {
        Element::Pair(Box::new(left), Box::new(right))
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Element::Nat(n) => write!(f, "{n}"),
            Element::Pair(l, r) => write!(f, "({l},{r})"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum BaseError {
    #[error("element {element} is not a member of {order}")]
    InvalidElement { order: String, element: String },
    #[error("lexicographic nesting deeper than {MAX_LEX_DEPTH}")]
    TooDeep,
}

impl BaseOrder {
    pub fn lex(left: BaseOrder, right: BaseOrder) -> Self {
        BaseOrder::LexPair(Box::new(left), Box::new(right))
    }

    fn lex_depth(&self) -> usize {
        match self {
            BaseOrder::LexPair(l, r) => 1 + l.lex_depth().max(r.lex_depth()),
            _ => 0,
        }
    }

    /// Checks the nesting cap on lexicographic products.
    pub fn validate(&self) -> Result<(), BaseError> {
        if self.lex_depth() > MAX_LEX_DEPTH {
            Err(BaseError::TooDeep)
        } else {
            Ok(())
        }
    }

    /// True when the order has no elements at all (a `Fin(0)` factor).
    pub fn is_empty(&self) -> bool {
        match self {
            BaseOrder::Fin(n) => *n == 0,
            BaseOrder::Omega | BaseOrder::OmegaStar => false,
            BaseOrder::LexPair(l, r) => l.is_empty() || r.is_empty(),
        }
    }

    /// True when `e` is a valid element code for this order.
    pub fn contains(&self, e: &Element) -> bool {
        match (self, e) {
            (BaseOrder::Fin(n), Element::Nat(k)) => (*k as u128) < (*n as u128),
            (BaseOrder::Omega, Element::Nat(_)) => true,
            (BaseOrder::OmegaStar, Element::Nat(_)) => true,
            (BaseOrder::LexPair(l, r), Element::Pair(a, b)) => l.contains(a) && r.contains(b),
            _ => false,
        }
    }

    fn check(&self, e: &Element) -> Result<(), BaseError> {
        if self.contains(e) {
            Ok(())
        } else {
            Err(BaseError::InvalidElement {
                order: self.to_string(),
                element: e.to_string(),
            })
        }
    }

    /// Enumerates `count` distinct valid elements, deterministically.
    ///
    /// For the atomic variants this is `0, 1, 2, ...` (truncated to `n` for a
    /// finite chain); for pairs it walks the diagonals of the product. The
    /// enumeration is *not* sorted by the order; it is a test substrate.
    pub fn enumerate(&self, count: usize) -> Vec<Element> {
        match self {
            BaseOrder::Fin(n) => (0..count.min(*n)).map(|k| Element::Nat(k as u64)).collect(),
            BaseOrder::Omega | BaseOrder::OmegaStar => {
                (0..count).map(|k| Element::Nat(k as u64)).collect()
            }
            BaseOrder::LexPair(l, r) => {
                if self.is_empty() {
                    return Vec::new();
                }
                let ls = l.enumerate(count);
                let rs = r.enumerate(count);
                let mut out = Vec::with_capacity(count);
                'diag: for d in 0..(ls.len() + rs.len()) {
                    for i in 0..=d {
                        let j = d - i;
                        if i < ls.len() && j < rs.len() {
                            out.push(Element::pair(ls[i].clone(), rs[j].clone()));
                            if out.len() == count {
                                break 'diag;
                            }
                        }
                    }
                }
                out
            }
        }
    }

    /// First element in the enumeration, if the order is nonempty.
    pub fn first_element(&self) -> Option<Element> {
        self.enumerate(1).into_iter().next()
    }
}

impl fmt::Display for BaseOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseOrder::Fin(n) => write!(f, "fin:{n}"),
            BaseOrder::Omega => write!(f, "omega"),
            BaseOrder::OmegaStar => write!(f, "omega*"),
            BaseOrder::LexPair(l, r) => write!(f, "lex({l},{r})"),
        }
    }
}

/// Strict total comparison of two element codes of `x`.
///
/// `OmegaStar` reverses the natural order on codes; `LexPair` compares the
/// left coordinate first.
pub fn base_compare(
    x: &BaseOrder,
    a: &Element,
    b: &Element,
) -> Result<std::cmp::Ordering, BaseError> {
    x.check(a)?;
    x.check(b)?;
    Ok(compare_unchecked(x, a, b))
}

pub(crate) fn compare_unchecked(x: &BaseOrder, a: &Element, b: &Element) -> std::cmp::Ordering {
    match (x, a, b) {
        (BaseOrder::Fin(_) | BaseOrder::Omega, Element::Nat(p), Element::Nat(q)) => p.cmp(q),
        (BaseOrder::OmegaStar, Element::Nat(p), Element::Nat(q)) => q.cmp(p),
        (BaseOrder::LexPair(l, r), Element::Pair(a1, a2), Element::Pair(b1, b2)) => {
            compare_unchecked(l, a1, b1).then_with(|| compare_unchecked(r, a2, b2))
        }
        _ => unreachable!("codes validated against the order shape"),
    }
}

/// A generator witnessing an infinite strictly descending sequence: the
/// contract is that `at(i+1) < at(i)` in the carrier order for every step
/// that a verifier cares to check.
#[derive(Clone)]
pub struct DescentScheme<T> {
    gen: Arc<dyn Fn(u64) -> T + Send + Sync>,
}

impl<T> DescentScheme<T> {
    pub fn new<F>(gen: F) -> Self
    where
        F: Fn(u64) -> T + Send + Sync + 'static,
    {
        DescentScheme { gen: Arc::new(gen) }
    }

    pub fn at(&self, i: u64) -> T {
        (self.gen)(i)
    }

    /// Checks strict descent for `steps` consecutive steps under `lt`.
    pub fn verify<F>(&self, steps: u64, mut lt: F) -> bool
    where
        F: FnMut(&T, &T) -> bool,
    {
        (0..steps).all(|i| lt(&self.at(i + 1), &self.at(i)))
    }

    /// The first `len` terms of the scheme.
    pub fn prefix(&self, len: usize) -> Vec<T> {
        (0..len as u64).map(|i| self.at(i)).collect()
    }
}

impl<T> fmt::Debug for DescentScheme<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("DescentScheme(..)")
    }
}

/// Returns a descent scheme exactly when `x` is ill-founded, i.e. when an
/// `OmegaStar` factor is reachable inside a nonempty product. Finite chains
/// and `omega` yield nothing.
pub fn base_descent(x: &BaseOrder) -> Option<DescentScheme<Element>> {
    if x.is_empty() {
        return None;
    }
    match x {
        BaseOrder::Fin(_) | BaseOrder::Omega => None,
        BaseOrder::OmegaStar => Some(DescentScheme::new(Element::Nat)),
        BaseOrder::LexPair(l, r) => {
            if let Some(dl) = base_descent(l) {
                let fixed = r.first_element().expect("nonempty product");
                Some(DescentScheme::new(move |i| {
                    Element::pair(dl.at(i), fixed.clone())
                }))
            } else if let Some(dr) = base_descent(r) {
                let fixed = l.first_element().expect("nonempty product");
                Some(DescentScheme::new(move |i| {
                    Element::pair(fixed.clone(), dr.at(i))
                }))
            } else {
                None
            }
        }
    }
}
