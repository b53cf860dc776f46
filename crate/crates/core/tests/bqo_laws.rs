//! Search-kernel laws: witness soundness, determinism, and the completeness
//! regimes for the two- and three-element antichains.

use ordlab::gen::{random_uniform_array, uniform_array_from_fn};
use ordlab::{
    cofinite_homogeneous_search, good_pair_search, three_antichain_good_pair, verify_homogeneous,
    ArrayError, FinSet, QuasiOrder, StabilizingArray,
};

#[test]
fn witnesses_re_validate_on_random_arrays() {
    for seed in 0..60 {
        let d = 1 + (seed as usize % 2);
        let a = random_uniform_array(14, d, 2, 3, seed);
        if let Some(x) = good_pair_search(&a, &QuasiOrder::antichain(3)) {
            let vx = a.fbar(&x).unwrap();
            let vt = a.fbar(&x.drop_min()).unwrap();
            assert_eq!(vx, vt, "seed {seed}: good pair fails re-evaluation");
        }
        if let Some((x, color)) = cofinite_homogeneous_search(&a.derive_two_coloring(2), d + 2) {
            assert!(verify_homogeneous(&a.derive_two_coloring(2), &x, d));
            let _ = color;
        }
        match three_antichain_good_pair(&a, None) {
            Ok(x) => {
                assert_eq!(a.fbar(&x).unwrap(), a.fbar(&x.drop_min()).unwrap());
            }
            Err(ArrayError::WindowExhausted) => {}
            Err(e) => panic!("seed {seed}: unexpected error {e}"),
        }
    }
}

#[test]
fn searches_are_deterministic() {
    for seed in [0u64, 7, 99] {
        let a = random_uniform_array(12, 2, 2, 3, seed);
        let first = three_antichain_good_pair(&a, None);
        let second = three_antichain_good_pair(&a, None);
        assert_eq!(first.is_ok(), second.is_ok());
        if let (Ok(x), Ok(y)) = (first, second) {
            assert_eq!(x, y);
        }
        assert_eq!(
            good_pair_search(&a, &QuasiOrder::antichain(3)),
            good_pair_search(&a, &QuasiOrder::antichain(3))
        );
    }
}

#[test]
fn two_antichain_complete_for_singletons_at_window_three() {
    // three singletons and two colours force a repeat; at window two the
    // alternating colouring has no good pair, so three is sharp
    let q = QuasiOrder::antichain(2);
    for pattern in 0..8u32 {
        let colors: Vec<usize> = (0..3).map(|i| ((pattern >> i) & 1) as usize).collect();
        let a = uniform_array_from_fn(3, 1, 1, 2, |s| colors[s[0] as usize]);
        let x = good_pair_search(&a, &q).expect("window 3 is never exhausted");
        assert_eq!(a.fbar(&x).unwrap(), a.fbar(&x.drop_min()).unwrap());
    }
    let alternating = uniform_array_from_fn(2, 1, 1, 2, |s| (s[0] % 2) as usize);
    assert!(good_pair_search(&alternating, &q).is_none());
}

#[test]
fn two_antichain_complete_for_pairs_at_window_six() {
    // every 2-colouring of the pairs from a 6-element window admits a good
    // pair: the monochromatic-triangle regime
    let q = QuasiOrder::antichain(2);
    let pair_index = |s: &[u32]| -> usize {
        let (a, b) = (s[0] as usize, s[1] as usize);
        b * (b - 1) / 2 + a
    };
    for coloring in 0..(1u32 << 15) {
        let a = uniform_array_from_fn(6, 2, 1, 2, |s| ((coloring >> pair_index(s)) & 1) as usize);
        let x = good_pair_search(&a, &q).expect("window 6 at depth 2 is never exhausted");
        assert_eq!(a.fbar(&x).unwrap(), a.fbar(&x.drop_min()).unwrap());
    }
}

#[test]
fn general_arrays_route_through_the_table_depth() {
    // a non-uniform certified array: values settle on the second-smallest
    // element from size 2 on; sizes 0 and 1 are noise the limit never sees
    let f = |s: &[u32]| -> usize {
        if s.len() >= 2 {
            (s[1] % 2) as usize
        } else {
            1 - (s.first().copied().unwrap_or(0) % 2) as usize
        }
    };
    let a = ordlab::gen::general_array_from_fn(9, 4, 2, 2, f);
    assert_eq!(a.effective_depth(), 4);
    let x = FinSet::new(vec![0, 2, 4, 6, 8]).unwrap();
    assert_eq!(a.fbar(&x).unwrap(), 0);
    if let Some(w) = good_pair_search(&a, &QuasiOrder::antichain(2)) {
        assert_eq!(a.fbar(&w).unwrap(), a.fbar(&w.drop_min()).unwrap());
        // the witness carries one more element than the table depth
        assert_eq!(w.len(), 5);
    }
    match three_antichain_good_pair(&a.derive_three(), None) {
        Ok(x) => assert_eq!(
            a.derive_three().fbar(&x).unwrap(),
            a.derive_three().fbar(&x.drop_min()).unwrap()
        ),
        Err(ArrayError::WindowExhausted) => {}
        Err(e) => panic!("unexpected error {e}"),
    }
}

trait DeriveThree {
    fn derive_three(&self) -> StabilizingArray;
}

impl DeriveThree for StabilizingArray {
    // widen a two-colour array to three colours without changing any value
    fn derive_three(&self) -> StabilizingArray {
        let text = self.to_file_string().replace("colors 2", "colors 3");
        StabilizingArray::parse(&text).unwrap()
    }
}

#[test]
fn file_format_round_trips_random_arrays() {
    for seed in 0..20 {
        let a = random_uniform_array(10, 1 + (seed as usize % 3), 1, 3, seed);
        let b = StabilizingArray::parse(&a.to_file_string()).unwrap();
        assert_eq!(a, b);
    }
}

#[test]
fn window_exhausted_is_reported_not_fabricated() {
    // window far too small for the three-colour extraction
    let a = uniform_array_from_fn(3, 2, 1, 3, |s| ((s[0] + s[1]) % 3) as usize);
    assert!(matches!(
        three_antichain_good_pair(&a, None),
        Err(ArrayError::WindowExhausted)
    ));
}
