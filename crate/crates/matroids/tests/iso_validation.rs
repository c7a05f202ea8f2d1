//! Cross-validation of the isomorphism machinery through the public API:
//! canonical forms against exhaustive relabelings, and structural
//! recognition at sizes past the canonical-form capacity.

use matroids::{
    are_isomorphic, canonical_form, enumerate_matroids, recognize_wheel_or_whirl, wheel, whirl,
    Matroid, WheelKind,
};
use std::time::Instant;

fn rotation(n: usize, shift: usize) -> Vec<usize> {
    (0..n).map(|e| (e + shift) % n.max(1)).collect()
}

#[test]
fn canonical_form_agrees_with_are_isomorphic_on_the_census() {
    let classes = enumerate_matroids(6).unwrap();
    // Distinct census classes must never be isomorphic.
    for (i, (cf_a, a)) in classes.iter().enumerate() {
        for (cf_b, b) in &classes[i + 1..] {
            if cf_a.n == cf_b.n && cf_a.r == cf_b.r {
                assert!(!are_isomorphic(a, b), "{cf_a} vs {cf_b}");
            }
        }
    }
    // Every relabeled copy lands back on its class.
    for (cf, m) in &classes {
        let scrambled = m.relabel(&rotation(cf.n, 1)).relabel(&{
            let mut p: Vec<usize> = (0..cf.n).collect();
            p.reverse();
            p
        });
        assert!(are_isomorphic(m, &scrambled));
        assert_eq!(canonical_form(&scrambled).unwrap(), *cf);
    }
}

#[test]
fn recognition_round_trips_up_to_nine_spokes() {
    let start = Instant::now();
    for k in 3..=9 {
        let (w, _) = wheel(k).unwrap();
        let (wh, _) = whirl(k).unwrap();
        for (kind, m) in [(WheelKind::Wheel, &w), (WheelKind::Whirl, &wh)] {
            let scrambled = m.relabel(&rotation(2 * k, k));
            let found = recognize_wheel_or_whirl(&scrambled)
                .unwrap_or_else(|| panic!("{kind} with k={k} not recognized"));
            assert_eq!((found.kind, found.k), (kind, k));
            assert!(found.verify(&scrambled));
        }
        // Wheels and whirls of equal rank never mix.
        assert!(!are_isomorphic(&w, &wh));
    }
    assert!(start.elapsed().as_secs() < 60, "recognition too slow");
}

#[test]
fn large_ground_sets_fall_back_on_structure_and_backtracking() {
    // 13 elements is past the canonical form capacity.
    let big_a = wheel(5).unwrap().0.direct_sum(&Matroid::uniform(1, 3).unwrap());
    let big_b = Matroid::uniform(1, 3).unwrap().direct_sum(&wheel(5).unwrap().0);
    assert_eq!(big_a.ground_size(), 13);
    assert!(are_isomorphic(&big_a, &big_b));

    let different = whirl(5).unwrap().0.direct_sum(&Matroid::uniform(1, 3).unwrap());
    assert!(!are_isomorphic(&big_a, &different));

    // Pure wheels at size 14 go through recognition.
    assert!(are_isomorphic(&wheel(7).unwrap().0, &wheel(7).unwrap().0.relabel(&rotation(14, 5))));
    assert!(!are_isomorphic(&wheel(7).unwrap().0, &whirl(7).unwrap().0));
}
