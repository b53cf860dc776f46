//! The term system `w(X)`: finite weakly decreasing exponent sequences over a
//! base order `X`, compared lexicographically. For a well-founded `X` this
//! order is well-founded; the module makes the contrapositive executable by
//! lifting descent schemes on `X` to descent schemes on `w(X)`.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::base::{base_compare, compare_unchecked, BaseOrder, DescentScheme, Element};

/// A term of `w(X)`: exponent sequence `x(0), ..., x(n-1)`, weakly decreasing
/// in `X`. The empty sequence is the least term.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OmegaTerm {
    exponents: Vec<Element>,
}

impl OmegaTerm {
    pub fn new(exponents: Vec<Element>) -> Self {
        OmegaTerm { exponents }
    }

    pub fn empty() -> Self {
        OmegaTerm { exponents: Vec::new() }
    }

    pub fn single(e: Element) -> Self {
        OmegaTerm { exponents: vec![e] }
    }

    pub fn exponents(&self) -> &[Element] {
        &self.exponents
    }

    pub fn len(&self) -> usize {
        self.exponents.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exponents.is_empty()
    }
}

impl fmt::Display for OmegaTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("w(")?;
        for (i, e) in self.exponents.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str(")")
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OmegaError {
    #[error("invalid term over {base}: {term}")]
    InvalidTerm { base: String, term: String },
    #[error("map is not strictly monotone on the exponents ({detail})")]
    NotMonotone { detail: String },
    #[error("enumeration requires a finite base order, got {0}")]
    InfiniteBase(String),
}

/// True iff every exponent is an element of `x` and the sequence is weakly
/// decreasing. Never fails; it reports.
pub fn omega_validate(x: &BaseOrder, t: &OmegaTerm) -> bool {
    if !t.exponents.iter().all(|e| x.contains(e)) {
        return false;
    }
    t.exponents
        .windows(2)
        .all(|w| compare_unchecked(x, &w[0], &w[1]) != Ordering::Less)
}

fn require_valid(x: &BaseOrder, t: &OmegaTerm) -> Result<(), OmegaError> {
    if omega_validate(x, t) {
        Ok(())
    } else {
        Err(OmegaError::InvalidTerm {
            base: x.to_string(),
            term: t.to_string(),
        })
    }
}

/// Lexicographic comparison of exponent sequences; a proper prefix sits
/// strictly below its extensions.
pub fn omega_compare(x: &BaseOrder, s: &OmegaTerm, t: &OmegaTerm) -> Result<Ordering, OmegaError> {
    require_valid(x, s)?;
    require_valid(x, t)?;
    Ok(compare_valid(x, s, t))
}

pub(crate) fn compare_valid(x: &BaseOrder, s: &OmegaTerm, t: &OmegaTerm) -> Ordering {
    for (a, b) in s.exponents.iter().zip(t.exponents.iter()) {
        match compare_unchecked(x, a, b) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    s.len().cmp(&t.len())
}

/// Exponentwise image of `t` under an embedding `h: X -> Y` given as a code
/// map. `h` must be strictly monotone on the exponents that actually occur;
/// a reversed or collapsed pair is rejected.
pub fn omega_lift<H>(
    x: &BaseOrder,
    y: &BaseOrder,
    h: H,
    t: &OmegaTerm,
) -> Result<OmegaTerm, OmegaError>
where
    H: Fn(&Element) -> Option<Element>,
{
    require_valid(x, t)?;
    let mut mapped = Vec::with_capacity(t.len());
    for e in &t.exponents {
        let img = h(e).ok_or_else(|| OmegaError::NotMonotone {
            detail: format!("no image for exponent {e}"),
        })?;
        if !y.contains(&img) {
            return Err(OmegaError::NotMonotone {
                detail: format!("image {img} of {e} is not an element of {y}"),
            });
        }
        mapped.push((e.clone(), img));
    }
    for i in 0..mapped.len() {
        for j in (i + 1)..mapped.len() {
            let src = base_compare(x, &mapped[i].0, &mapped[j].0).expect("validated");
            let dst = compare_unchecked(y, &mapped[i].1, &mapped[j].1);
            if src != dst {
                return Err(OmegaError::NotMonotone {
                    detail: format!(
                        "{} vs {} maps to {} vs {}",
                        mapped[i].0, mapped[j].0, mapped[i].1, mapped[j].1
                    ),
                });
            }
        }
    }
    let lifted = OmegaTerm::new(mapped.into_iter().map(|(_, img)| img).collect());
    debug_assert!(omega_validate(y, &lifted));
    Ok(lifted)
}

/// The first `count` terms of `w(X)` in ascending `omega_compare` order,
/// starting from the empty term. Requires a finite base.
///
/// The immediate successor of any term appends the least exponent, so the
/// ascending enumeration from the empty term is `w()`, `w(0)`, `w(0 0)`, ...
/// For `fin:0` only the empty term exists.
pub fn omega_enumerate(x: &BaseOrder, count: usize) -> Result<Vec<OmegaTerm>, OmegaError> {
    let n = match x {
        BaseOrder::Fin(n) => *n,
        other => return Err(OmegaError::InfiniteBase(other.to_string())),
    };
    let mut out = Vec::with_capacity(count);
    if count == 0 {
        return Ok(out);
    }
    out.push(OmegaTerm::empty());
    if n == 0 {
        return Ok(out);
    }
    let mut exps = Vec::new();
    while out.len() < count {
        exps.push(Element::nat(0));
        out.push(OmegaTerm::new(exps.clone()));
    }
    Ok(out)
}

/// All valid terms with at most `max_len` exponents over a finite base, in no
/// particular order. Test substrate for the exhaustive order-law suites.
pub fn omega_terms_up_to(x: &BaseOrder, max_len: usize) -> Result<Vec<OmegaTerm>, OmegaError> {
    let n = match x {
        BaseOrder::Fin(n) => *n,
        other => return Err(OmegaError::InfiniteBase(other.to_string())),
    };
    let mut out = vec![OmegaTerm::empty()];
    let mut layer: Vec<Vec<u64>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for seq in &layer {
            let bound = seq.last().copied().unwrap_or(n.saturating_sub(1) as u64);
            for e in 0..=bound {
                let mut ext = seq.clone();
                ext.push(e);
                next.push(ext);
            }
        }
        for seq in &next {
            out.push(OmegaTerm::new(seq.iter().copied().map(Element::nat).collect()));
        }
        layer = next;
    }
    Ok(out)
}

/// Lifts a descent scheme on `X` to one on `w(X)` via single-exponent terms.
pub fn omega_descend_lift(
    _x: &BaseOrder,
    d: &DescentScheme<Element>,
) -> DescentScheme<OmegaTerm> {
    let d = d.clone();
    DescentScheme::new(move |i| OmegaTerm::single(d.at(i)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fin(n: usize) -> BaseOrder {
        BaseOrder::Fin(n)
    }

    fn term(exps: &[u64]) -> OmegaTerm {
        OmegaTerm::new(exps.iter().copied().map(Element::nat).collect())
    }

    #[test]
    fn validate_examples() {
        assert!(omega_validate(&fin(3), &term(&[2, 2, 0])));
        assert!(!omega_validate(&fin(3), &term(&[0, 2])));
        assert!(omega_validate(&BaseOrder::Omega, &OmegaTerm::empty()));
        // out-of-range exponent
        assert!(!omega_validate(&fin(3), &term(&[3])));
    }

    #[test]
    fn compare_examples() {
        assert_eq!(
            omega_compare(&fin(2), &term(&[1]), &term(&[1, 0])).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            omega_compare(&fin(2), &term(&[1]), &term(&[0, 0, 0])).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            omega_compare(&fin(3), &term(&[2, 1]), &term(&[2, 1])).unwrap(),
            Ordering::Equal
        );
        assert!(omega_compare(&fin(3), &term(&[0, 2]), &term(&[0])).is_err());
    }

    #[test]
    fn lift_examples() {
        let h02 = |e: &Element| match e {
            Element::Nat(0) => Some(Element::nat(0)),
            Element::Nat(1) => Some(Element::nat(2)),
            _ => None,
        };
        let lifted = omega_lift(&fin(2), &fin(3), h02, &term(&[1, 0])).unwrap();
        assert_eq!(lifted, term(&[2, 0]));

        let id = |e: &Element| Some(e.clone());
        assert_eq!(
            omega_lift(&fin(3), &fin(3), id, &term(&[2, 2, 0])).unwrap(),
            term(&[2, 2, 0])
        );

        let swap = |e: &Element| match e {
            Element::Nat(0) => Some(Element::nat(1)),
            Element::Nat(1) => Some(Element::nat(0)),
            _ => None,
        };
        assert!(matches!(
            omega_lift(&fin(2), &fin(2), swap, &term(&[1, 0])),
            Err(OmegaError::NotMonotone { .. })
        ));

        // collapsing two exponents is rejected as well
        let collapse = |_: &Element| Some(Element::nat(0));
        assert!(omega_lift(&fin(2), &fin(2), collapse, &term(&[1, 0])).is_err());
    }

    #[test]
    fn enumerate_examples() {
        assert_eq!(
            omega_enumerate(&fin(1), 4).unwrap(),
            vec![OmegaTerm::empty(), term(&[0]), term(&[0, 0]), term(&[0, 0, 0])]
        );
        assert_eq!(
            omega_enumerate(&fin(2), 3).unwrap(),
            vec![OmegaTerm::empty(), term(&[0]), term(&[0, 0])]
        );
        assert_eq!(omega_enumerate(&fin(4), 0).unwrap(), Vec::<OmegaTerm>::new());
        assert_eq!(omega_enumerate(&fin(0), 5).unwrap(), vec![OmegaTerm::empty()]);
        assert!(omega_enumerate(&BaseOrder::Omega, 3).is_err());
    }

    #[test]
    fn enumeration_is_ascending_and_head_of_the_order() {
        // ascending, and nothing with <= 4 exponents falls strictly between
        // consecutive enumerated terms
        let x = fin(3);
        let enumerated = omega_enumerate(&x, 30).unwrap();
        for w in enumerated.windows(2) {
            assert_eq!(omega_compare(&x, &w[0], &w[1]).unwrap(), Ordering::Less);
        }
        let pool = omega_terms_up_to(&x, 4).unwrap();
        for w in enumerated.windows(2).take(3) {
            for t in &pool {
                let above = omega_compare(&x, &w[0], t).unwrap() == Ordering::Less;
                let below = omega_compare(&x, t, &w[1]).unwrap() == Ordering::Less;
                assert!(!(above && below), "{t} lies between {} and {}", w[0], w[1]);
            }
        }
    }

    #[test]
    fn descend_lift_examples() {
        let star = BaseOrder::OmegaStar;
        let d = crate::base::base_descent(&star).unwrap();
        let lifted = omega_descend_lift(&star, &d);
        assert_eq!(lifted.at(0), term(&[0]));
        assert!(lifted.verify(100, |a, b| {
            compare_valid(&star, a, b) == Ordering::Less
        }));

        let x = BaseOrder::lex(fin(2), BaseOrder::OmegaStar);
        let d = crate::base::base_descent(&x).unwrap();
        let lifted = omega_descend_lift(&x, &d);
        assert_eq!(
            lifted.at(1),
            OmegaTerm::single(Element::pair(Element::nat(0), Element::nat(1)))
        );
        assert!(lifted.verify(100, |a, b| compare_valid(&x, a, b) == Ordering::Less));
    }

    #[test]
    fn prefix_law() {
        let x = fin(3);
        let pool = omega_terms_up_to(&x, 3).unwrap();
        for s in &pool {
            for t in &pool {
                if t.len() > s.len() && t.exponents()[..s.len()] == *s.exponents() {
                    assert_eq!(omega_compare(&x, s, t).unwrap(), Ordering::Less);
                }
            }
        }
    }
}
