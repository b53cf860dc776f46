//! A relativized collapsing-function term system over a base order `X`.
//!
//! Terms denote ordinals built from `0`, a large parameter `W` (written `Ω`
//! in the literature), epsilon-style fixed points `e(x)` indexed by elements
//! of `X`, omega-powers `p(t)`, weakly decreasing sums `s(t1 t2 ...)`, and a
//! collapse `th(t)` that places arbitrarily large arguments strictly below
//! `W`. The comparison is a strict total order on normal-form terms pinned by
//! these clauses:
//!
//! * `0` is least; `th(a) < W < e(x)` for every `a` and `x`;
//! * `e` is monotone in its index under the base order;
//! * powers and sums compare by the usual normal-form recursion over
//!   additively principal parts;
//! * `th(a) < th(b)` iff `a < b` and every coefficient of `a` is below
//!   `th(b)`, or `th(a)` is at most some coefficient of `b`.
//!
//! Coefficients are the collapse subterms that survive the extraction of
//! [`theta_coefficients`]; they are exactly the below-`W` material that the
//! collapse comparison is allowed to consult.
//!
//! Normal form admits `p(0)` as the canonical term for one. A power applied
//! directly to a collapse is rejected: collapse values are treated as closed
//! under omega-powers, so such a term would duplicate its own body. `p(W)`
//! and `p(e(x))` are accepted as terms and ordered deterministically just
//! below the fixed-point atom they repeat; equality stays structural.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

use crate::base::{base_compare, compare_unchecked, BaseOrder, Element};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ThetaTerm {
    Zero,
    BigOmega,
    Eps(Element),
    /// `p(t)`: omega raised to `t`.
    Pow(Box<ThetaTerm>),
    /// `s(t1 t2 ...)`: at least two additively principal parts, weakly decreasing.
    SumOf(Vec<ThetaTerm>),
    /// `th(t)`: the collapse of `t`, always strictly below `BigOmega`.
    Collapse(Box<ThetaTerm>),
}

use ThetaTerm::*;

impl ThetaTerm {
    pub fn eps(e: Element) -> Self {
        Eps(e)
    }

    pub fn pow(t: ThetaTerm) -> Self {
        Pow(Box::new(t))
    }

    pub fn sum(parts: Vec<ThetaTerm>) -> Self {
        SumOf(parts)
    }

    pub fn collapse(t: ThetaTerm) -> Self {
        Collapse(Box::new(t))
    }

    /// The canonical term for one, `p(0)`.
    pub fn one() -> Self {
        ThetaTerm::pow(Zero)
    }

    /// Node count of the syntax tree.
    pub fn size(&self) -> usize {
        match self {
            Zero | BigOmega | Eps(_) => 1,
            Pow(t) | Collapse(t) => 1 + t.size(),
            SumOf(parts) => 1 + parts.iter().map(|p| p.size()).sum::<usize>(),
        }
    }

    fn is_principal(&self) -> bool {
        matches!(self, BigOmega | Eps(_) | Pow(_) | Collapse(_))
    }

    fn parts(&self) -> &[ThetaTerm] {
        match self {
            SumOf(ps) => ps,
            other => std::slice::from_ref(other),
        }
    }
}

impl fmt::Display for ThetaTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Zero => f.write_str("0"),
            BigOmega => f.write_str("W"),
            Eps(e) => write!(f, "e({e})"),
            Pow(t) => write!(f, "p({t})"),
            SumOf(parts) => {
                f.write_str("s(")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    write!(f, "{p}")?;
                }
                f.write_str(")")
            }
            Collapse(t) => write!(f, "th({t})"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ThetaError {
    #[error("invalid term over {base}: {term}")]
    InvalidTerm { base: String, term: String },
    #[error("map is not strictly monotone on the epsilon indices ({detail})")]
    NotMonotone { detail: String },
}

/// The finite set of collapse subterms the comparison may consult. All of
/// them sit strictly below `BigOmega`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CoefficientSet {
    elems: Vec<ThetaTerm>,
}

impl CoefficientSet {
    fn insert(&mut self, t: ThetaTerm) {
        if !self.elems.contains(&t) {
            self.elems.push(t);
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = &ThetaTerm> {
        self.elems.iter()
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, t: &ThetaTerm) -> bool {
        self.elems.contains(t)
    }
}

/// Coefficient extraction: `0`, `W` and `e(x)` contribute nothing, powers and
/// sums pass through, and a collapse contributes itself (without descending
/// into its body).
pub fn theta_coefficients(t: &ThetaTerm) -> CoefficientSet {
    let mut out = CoefficientSet::default();
    collect_coefficients(t, &mut out);
    out
}

fn collect_coefficients(t: &ThetaTerm, out: &mut CoefficientSet) {
    match t {
        Zero | BigOmega | Eps(_) => {}
        Pow(b) => collect_coefficients(b, out),
        SumOf(parts) => parts.iter().for_each(|p| collect_coefficients(p, out)),
        Collapse(_) => out.insert(t.clone()),
    }
}

/// True iff `t` is in normal form over `x`: epsilon indices are elements of
/// `x`, sums have at least two weakly decreasing principal parts with no
/// directly nested sum, and no power has a collapse body.
pub fn theta_validate(x: &BaseOrder, t: &ThetaTerm) -> bool {
    match t {
        Zero | BigOmega => true,
        Eps(e) => x.contains(e),
        Pow(b) => !matches!(**b, Collapse(_)) && theta_validate(x, b),
        Collapse(b) => theta_validate(x, b),
        SumOf(parts) => {
            parts.len() >= 2
                && parts.iter().all(|p| p.is_principal() && theta_validate(x, p))
                && parts
                    .windows(2)
                    .all(|w| compare_valid(x, &w[0], &w[1]) != Ordering::Less)
        }
    }
}

fn require_valid(x: &BaseOrder, t: &ThetaTerm) -> Result<(), ThetaError> {
    if theta_validate(x, t) {
        Ok(())
    } else {
        Err(ThetaError::InvalidTerm {
            base: x.to_string(),
            term: t.to_string(),
        })
    }
}

/// Strict total comparison of two valid terms.
pub fn theta_compare(
    x: &BaseOrder,
    s: &ThetaTerm,
    t: &ThetaTerm,
) -> Result<Ordering, ThetaError> {
    require_valid(x, s)?;
    require_valid(x, t)?;
    Ok(compare_valid(x, s, t))
}

pub(crate) fn compare_valid(x: &BaseOrder, s: &ThetaTerm, t: &ThetaTerm) -> Ordering {
    match (s, t) {
        (Zero, Zero) => Ordering::Equal,
        (Zero, _) => Ordering::Less,
        (_, Zero) => Ordering::Greater,
        (SumOf(_), _) | (_, SumOf(_)) => {
            let ps = s.parts();
            let qs = t.parts();
            for (p, q) in ps.iter().zip(qs.iter()) {
                match compare_valid(x, p, q) {
                    Ordering::Equal => continue,
                    o => return o,
                }
            }
            ps.len().cmp(&qs.len())
        }
        _ => compare_principal(x, s, t),
    }
}

// Both arguments additively principal and nonzero. A power compares through
// its exponent; the fixed-point atoms W, e(x) and th(a) count as their own
// exponents, with the power placed just below the atom on a tie.
fn compare_principal(x: &BaseOrder, s: &ThetaTerm, t: &ThetaTerm) -> Ordering {
    match (s, t) {
        (Pow(a), Pow(b)) => compare_valid(x, a, b),
        (Pow(a), _) => match compare_valid(x, a, t) {
            Ordering::Equal => Ordering::Less,
            o => o,
        },
        (_, Pow(b)) => match compare_valid(x, s, b) {
            Ordering::Equal => Ordering::Greater,
            o => o,
        },
        (BigOmega, BigOmega) => Ordering::Equal,
        (BigOmega, Eps(_)) => Ordering::Less,
        (Eps(_), BigOmega) => Ordering::Greater,
        (Eps(a), Eps(b)) => compare_unchecked(x, a, b),
        (Collapse(_), BigOmega | Eps(_)) => Ordering::Less,
        (BigOmega | Eps(_), Collapse(_)) => Ordering::Greater,
        (Collapse(a), Collapse(b)) => match compare_valid(x, a, b) {
            Ordering::Equal => Ordering::Equal,
            Ordering::Less => {
                if theta_coefficients(a)
                    .iter()
                    .all(|k| compare_valid(x, k, t) == Ordering::Less)
                {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
            Ordering::Greater => {
                if theta_coefficients(b)
                    .iter()
                    .all(|k| compare_valid(x, k, s) == Ordering::Less)
                {
                    Ordering::Greater
                } else {
                    Ordering::Less
                }
            }
        },
        _ => unreachable!("non-principal term in principal comparison"),
    }
}

/// Replaces every `e(x)` index through `h`, preserving validity and pairwise
/// order. `h` must be strictly monotone on the indices occurring in `t`.
pub fn theta_lift<H>(
    x: &BaseOrder,
    y: &BaseOrder,
    h: H,
    t: &ThetaTerm,
) -> Result<ThetaTerm, ThetaError>
where
    H: Fn(&Element) -> Option<Element>,
{
    require_valid(x, t)?;
    let mut indices = Vec::new();
    collect_eps_indices(t, &mut indices);
    let mut images = Vec::with_capacity(indices.len());
    for e in &indices {
        let img = h(e).ok_or_else(|| ThetaError::NotMonotone {
            detail: format!("no image for index {e}"),
        })?;
        if !y.contains(&img) {
            return Err(ThetaError::NotMonotone {
                detail: format!("image {img} of {e} is not an element of {y}"),
            });
        }
        images.push(img);
    }
    for i in 0..indices.len() {
        for j in (i + 1)..indices.len() {
            let src = base_compare(x, &indices[i], &indices[j]).expect("validated");
            let dst = compare_unchecked(y, &images[i], &images[j]);
            if src != dst {
                return Err(ThetaError::NotMonotone {
                    detail: format!(
                        "{} vs {} maps to {} vs {}",
                        indices[i], indices[j], images[i], images[j]
                    ),
                });
            }
        }
    }
    let lifted = rewrite_eps(t, &|e| h(e).expect("checked above"));
    debug_assert!(theta_validate(y, &lifted));
    Ok(lifted)
}

fn collect_eps_indices(t: &ThetaTerm, out: &mut Vec<Element>) {
    match t {
        Zero | BigOmega => {}
        Eps(e) => {
            if !out.contains(e) {
                out.push(e.clone());
            }
        }
        Pow(b) | Collapse(b) => collect_eps_indices(b, out),
        SumOf(parts) => parts.iter().for_each(|p| collect_eps_indices(p, out)),
    }
}

fn rewrite_eps(t: &ThetaTerm, h: &dyn Fn(&Element) -> Element) -> ThetaTerm {
    match t {
        Zero => Zero,
        BigOmega => BigOmega,
        Eps(e) => Eps(h(e)),
        Pow(b) => ThetaTerm::pow(rewrite_eps(b, h)),
        Collapse(b) => ThetaTerm::collapse(rewrite_eps(b, h)),
        SumOf(parts) => ThetaTerm::sum(parts.iter().map(|p| rewrite_eps(p, h)).collect()),
    }
}

/// Desk-scale probe of the well-ordering principle for `X -> theta terms`.
///
/// When the base order is ill-founded (an `OmegaStar` factor is reachable),
/// the base descent scheme lifts to a strictly descending chain of epsilon
/// terms of exactly `budget` length. Otherwise the probe walks single-step
/// descents from a frontier of small seed terms and reports `None` once every
/// walk has died out; walks from this frontier die within about eight steps
/// on the well-founded bases, so absence at budgets of ten or more is the
/// meaningful regime. Absence is evidence, never proof.
pub fn theta_descend_search(x: &BaseOrder, budget: usize) -> Option<Vec<ThetaTerm>> {
    assert!(budget >= 1, "budget must be at least 1");
    if let Some(d) = crate::base::base_descent(x) {
        let chain: Vec<ThetaTerm> = (0..budget as u64).map(|i| Eps(d.at(i))).collect();
        debug_assert!(chain
            .windows(2)
            .all(|w| compare_valid(x, &w[1], &w[0]) == Ordering::Less));
        return Some(chain);
    }
    let mut frontier: Vec<ThetaTerm> = x
        .enumerate(3)
        .into_iter()
        .map(ThetaTerm::eps)
        .collect();
    frontier.push(ThetaTerm::sum(vec![BigOmega, BigOmega]));
    frontier.push(ThetaTerm::pow(BigOmega));
    frontier.push(BigOmega);
    for seed in frontier {
        let mut chain = vec![seed];
        while chain.len() < budget {
            let current = chain.last().unwrap();
            let next = step_candidates(x, current)
                .into_iter()
                .find(|c| theta_validate(x, c) && compare_valid(x, c, current) == Ordering::Less);
            match next {
                Some(n) => chain.push(n),
                None => break,
            }
        }
        if chain.len() == budget {
            return Some(chain);
        }
    }
    None
}

// Strictly smaller candidates for the frontier walk; callers re-verify each
// one with the comparator before taking the step.
fn step_candidates(x: &BaseOrder, t: &ThetaTerm) -> Vec<ThetaTerm> {
    match t {
        Zero => Vec::new(),
        Pow(b) if **b == Zero => vec![Zero],
        Eps(e) => match element_step_down(x, e) {
            Some(e2) => vec![Eps(e2), BigOmega],
            None => vec![BigOmega],
        },
        BigOmega => vec![ThetaTerm::collapse(Zero)],
        Collapse(_) => vec![ThetaTerm::one()],
        Pow(b) => {
            let mut out: Vec<ThetaTerm> = step_candidates(x, b)
                .into_iter()
                .filter(|c| !matches!(c, Collapse(_)))
                .map(ThetaTerm::pow)
                .collect();
            out.push(ThetaTerm::one());
            out
        }
        SumOf(parts) => {
            let mut shorter = parts.clone();
            shorter.pop();
            if shorter.len() >= 2 {
                vec![ThetaTerm::sum(shorter)]
            } else {
                vec![shorter.into_iter().next().unwrap()]
            }
        }
    }
}

fn element_step_down(x: &BaseOrder, e: &Element) -> Option<Element> {
    match (x, e) {
        (BaseOrder::Fin(_) | BaseOrder::Omega, Element::Nat(k)) => {
            k.checked_sub(1).map(Element::Nat)
        }
        (BaseOrder::OmegaStar, Element::Nat(k)) => Some(Element::Nat(k + 1)),
        (BaseOrder::LexPair(l, r), Element::Pair(a, b)) => {
            if let Some(b2) = element_step_down(r, b) {
                Some(Element::pair((**a).clone(), b2))
            } else {
                element_step_down(l, a)
                    .map(|a2| Element::pair(a2, r.first_element().expect("nonempty factor")))
            }
        }
        _ => None,
    }
}

/// All valid terms of syntax-tree size at most `max_size`, with epsilon
/// indices drawn from the first `max_elems` enumerated elements of `x`.
/// Exhaustive substrate for the order-law suites.
pub fn theta_terms_up_to(x: &BaseOrder, max_size: usize, max_elems: usize) -> Vec<ThetaTerm> {
    let elems = x.enumerate(max_elems);
    let mut by_size: Vec<Vec<ThetaTerm>> = vec![Vec::new(); max_size + 1];
    if max_size >= 1 {
        by_size[1].push(Zero);
        by_size[1].push(BigOmega);
        by_size[1].extend(elems.into_iter().map(ThetaTerm::eps));
    }
    for n in 2..=max_size {
        let mut layer = Vec::new();
        for b in &by_size[n - 1] {
            layer.push(ThetaTerm::pow(b.clone()));
            layer.push(ThetaTerm::collapse(b.clone()));
        }
        let mut seqs: Vec<Vec<ThetaTerm>> = Vec::new();
        sum_sequences(&by_size, n - 1, &mut Vec::new(), &mut seqs);
        for parts in seqs {
            layer.push(ThetaTerm::sum(parts));
        }
        by_size[n] = layer;
    }
    by_size
        .into_iter()
        .flatten()
        .filter(|t| theta_validate(x, t))
        .collect()
}

fn sum_sequences(
    by_size: &[Vec<ThetaTerm>],
    budget: usize,
    acc: &mut Vec<ThetaTerm>,
    out: &mut Vec<Vec<ThetaTerm>>,
) {
    if budget == 0 {
        if acc.len() >= 2 {
            out.push(acc.clone());
        }
        return;
    }
    for size in 1..=budget {
        for part in &by_size[size] {
            if part.is_principal() {
                acc.push(part.clone());
                sum_sequences(by_size, budget - size, acc, out);
                acc.pop();
            }
        }
    }
}
