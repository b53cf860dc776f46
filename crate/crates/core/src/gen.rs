//! Deterministic and seeded generators for arrays and terms. These back the
//! randomized suites; fixed seeds make every run reproducible.

use std::collections::BTreeMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::base::{BaseOrder, Element};
use crate::bqo::{FinSet, StabilizingArray};
use crate::theta::ThetaTerm;

fn for_each_k_subset(universe: &[u32], k: usize, f: &mut dyn FnMut(&[u32])) {
    fn rec(u: &[u32], k: usize, start: usize, acc: &mut Vec<u32>, f: &mut dyn FnMut(&[u32])) {
        if acc.len() == k {
            f(acc);
            return;
        }
        let remaining = k - acc.len();
        for i in start..=u.len().saturating_sub(remaining) {
            acc.push(u[i]);
            rec(u, k, i + 1, acc, f);
            acc.pop();
        }
    }
    if k > universe.len() {
        return;
    }
    rec(universe, k, 0, &mut Vec::with_capacity(k), f);
}

/// Uniform array of declared depth `d` whose table is `f` on the size-`d`
/// subsets of the window; table depth is `d + guard`.
pub fn uniform_array_from_fn(
    window: u32,
    d: usize,
    guard: usize,
    colors: usize,
    f: impl Fn(&[u32]) -> usize,
) -> StabilizingArray {
    let universe: Vec<u32> = (0..window).collect();
    let mut table = BTreeMap::new();
    for_each_k_subset(&universe, d, &mut |s| {
        table.insert(FinSet::from_unsorted(s.to_vec()), f(s));
    });
    StabilizingArray::new_uniform(window, d + guard, guard, colors, d, table)
        .expect("generated uniform array validates")
}

/// General array with value `f` on every subset of size at most `depth`.
/// The caller must pick `f` so that the guard certificate holds.
pub fn general_array_from_fn(
    window: u32,
    depth: usize,
    guard: usize,
    colors: usize,
    f: impl Fn(&[u32]) -> usize,
) -> StabilizingArray {
    let universe: Vec<u32> = (0..window).collect();
    let mut values = BTreeMap::new();
    for k in 0..=depth {
        for_each_k_subset(&universe, k, &mut |s| {
            values.insert(FinSet::from_unsorted(s.to_vec()), f(s));
        });
    }
    StabilizingArray::new(window, depth, guard, colors, values)
        .expect("generated array satisfies the certificate")
}

/// Uniform array with a table drawn uniformly at random from the colours.
pub fn random_uniform_array(
    window: u32,
    d: usize,
    guard: usize,
    colors: usize,
    seed: u64,
) -> StabilizingArray {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let universe: Vec<u32> = (0..window).collect();
    let mut table = BTreeMap::new();
    for_each_k_subset(&universe, d, &mut |s| {
        table.insert(FinSet::from_unsorted(s.to_vec()), rng.gen_range(0..colors));
    });
    StabilizingArray::new_uniform(window, d + guard, guard, colors, d, table)
        .expect("generated uniform array validates")
}

/// `count` valid terms over `x` with syntax-tree size at most `max_size`,
/// epsilon indices drawn from the first six enumerated elements.
pub fn random_theta_terms(
    x: &BaseOrder,
    max_size: usize,
    count: usize,
    seed: u64,
) -> Vec<ThetaTerm> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let elems = x.enumerate(6);
    (0..count)
        .map(|_| random_theta_term(&mut rng, x, &elems, max_size))
        .collect()
}

fn random_leaf(rng: &mut ChaCha8Rng, elems: &[Element]) -> ThetaTerm {
    match rng.gen_range(0..3) {
        0 => ThetaTerm::Zero,
        1 => ThetaTerm::BigOmega,
        _ => {
            if elems.is_empty() {
                ThetaTerm::BigOmega
            } else {
                ThetaTerm::eps(elems[rng.gen_range(0..elems.len())].clone())
            }
        }
    }
}

fn random_theta_term(
    rng: &mut ChaCha8Rng,
    x: &BaseOrder,
    elems: &[Element],
    budget: usize,
) -> ThetaTerm {
    if budget <= 1 {
        return random_leaf(rng, elems);
    }
    match rng.gen_range(0..10) {
        0..=2 => {
            // power bodies may not be collapses; retry a few times
            for _ in 0..4 {
                let body = random_theta_term(rng, x, elems, budget - 1);
                if !matches!(body, ThetaTerm::Collapse(_)) {
                    return ThetaTerm::pow(body);
                }
            }
            ThetaTerm::one()
        }
        3..=5 => ThetaTerm::collapse(random_theta_term(rng, x, elems, budget - 1)),
        6..=8 if budget >= 3 => {
            let parts_budget = budget - 1;
            let k = if parts_budget >= 3 && rng.gen_bool(0.3) { 3 } else { 2 };
            let k = k.min(parts_budget);
            let mut cuts: Vec<usize> = Vec::new();
            let mut left = parts_budget;
            for i in 0..k {
                let remaining_parts = k - i - 1;
                let take = if remaining_parts == 0 {
                    left
                } else {
                    rng.gen_range(1..=left - remaining_parts)
                };
                cuts.push(take);
                left -= take;
            }
            let mut parts: Vec<ThetaTerm> = cuts
                .into_iter()
                .map(|b| random_principal(rng, x, elems, b))
                .collect();
            parts.sort_by(|a, b| crate::theta::compare_valid(x, b, a));
            ThetaTerm::sum(parts)
        }
        _ => random_leaf(rng, elems),
    }
}

fn random_principal(
    rng: &mut ChaCha8Rng,
    x: &BaseOrder,
    elems: &[Element],
    budget: usize,
) -> ThetaTerm {
    for _ in 0..6 {
        let t = random_theta_term(rng, x, elems, budget);
        match t {
            ThetaTerm::Zero => continue,
            ThetaTerm::SumOf(mut parts) => return parts.swap_remove(0),
            other => return other,
        }
    }
    ThetaTerm::BigOmega
}
