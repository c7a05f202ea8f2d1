//! Named constructions: wheels, whirls, and recognition of both.
//!
//! The rank-k wheel is the cycle matroid of the wheel graph (hub vertex plus
//! a k-cycle of rim vertices). Elements are interleaved as
//! a_1,b_1,a_2,b_2,...,a_k,b_k where a_i is the rim edge arriving at rim
//! vertex i and b_i is the spoke at rim vertex i. Under this order
//! {b_i, a_{i+1}, b_{i+1}} is a triangle and {a_i, b_i, a_{i+1}} is a triad
//! for every i (cyclically).
//!
//! The rank-k whirl is the wheel with its rim circuit-hyperplane relaxed;
//! the rank-2 whirl coincides with U_{2,4}.

use crate::error::{capacity_err, input_err, Result};
use crate::matroid::Matroid;
use crate::set::ElementSet;
use serde::Serialize;

/// Largest wheel the constructor will build (ground set 2k <= 64).
pub const WHEEL_MAX: usize = 32;
/// Largest whirl; relaxation materializes the basis family, so the cap
/// matches the subset-search limit.
pub const WHIRL_MAX: usize = crate::connectivity::SEARCH_MAX / 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WheelKind {
    Wheel,
    Whirl,
}

impl std::fmt::Display for WheelKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            WheelKind::Wheel => write!(f, "wheel"),
            WheelKind::Whirl => write!(f, "whirl"),
        }
    }
}

/// A labeling of a matroid's elements as rim a_1..a_k and spokes b_1..b_k
/// realizing the alternating triangle/triad pattern of a wheel or whirl.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WheelLabeling {
    pub kind: WheelKind,
    pub k: usize,
    pub rim: Vec<usize>,
    pub spokes: Vec<usize>,
}

impl WheelLabeling {
    /// The canonical labeling used by the constructors: rim on even
    /// positions, spokes on odd.
    fn standard(kind: WheelKind, k: usize) -> WheelLabeling {
        WheelLabeling {
            kind,
            k,
            rim: (0..k).map(|i| 2 * i).collect(),
            spokes: (0..k).map(|i| 2 * i + 1).collect(),
        }
    }

    /// The rim elements as a set over the 2k-element ground set.
    pub fn rim_set(&self) -> ElementSet {
        ElementSet::from_indices(2 * self.k, &self.rim).expect("rim labels in range")
    }

    /// The spoke elements as a set over the 2k-element ground set.
    pub fn spoke_set(&self) -> ElementSet {
        ElementSet::from_indices(2 * self.k, &self.spokes).expect("spoke labels in range")
    }

    /// Exact check that `m` relabeled by this labeling equals the
    /// constructed wheel or whirl of rank k.
    pub fn verify(&self, m: &Matroid) -> bool {
        let k = self.k;
        if k < 2
            || self.rim.len() != k
            || self.spokes.len() != k
            || m.ground_size() != 2 * k
            || (self.kind == WheelKind::Wheel && k < 3)
        {
            return false;
        }
        let mut seen = vec![false; 2 * k];
        for &e in self.rim.iter().chain(&self.spokes) {
            if e >= 2 * k || seen[e] {
                return false;
            }
            seen[e] = true;
        }
        let mut perm = vec![0usize; 2 * k];
        for i in 0..k {
            perm[self.rim[i]] = 2 * i;
            perm[self.spokes[i]] = 2 * i + 1;
        }
        let reference = match self.kind {
            WheelKind::Wheel => wheel(k),
            WheelKind::Whirl => whirl(k),
        };
        match reference {
            Ok((ref_m, _)) => m.relabel(&perm).same_labeled_matroid(&ref_m),
            Err(_) => false,
        }
    }
}

/// The rank-k wheel: cycle matroid of the wheel graph, elements interleaved
/// a_1,b_1,...,a_k,b_k. Requires k >= 2; the k = 2 wheel (a digon with two
/// spokes) exists only as raw material for the whirl.
pub fn wheel(k: usize) -> Result<(Matroid, WheelLabeling)> {
    if k < 2 {
        return input_err("wheel requires at least 2 rim vertices");
    }
    if k > WHEEL_MAX {
        return capacity_err(format!("wheel supports at most {WHEEL_MAX} rim vertices"));
    }
    // Hub is vertex 0, rim vertices are 1..=k; rim edge a_i joins rim
    // vertices i-1 and i (cyclically), spoke b_i joins the hub to i.
    let mut edges = Vec::with_capacity(2 * k);
    for i in 1..=k {
        let prev = if i == 1 { k } else { i - 1 };
        edges.push((prev, i));
        edges.push((0, i));
    }
    let m = Matroid::from_graph(k + 1, edges)?;
    Ok((m, WheelLabeling::standard(WheelKind::Wheel, k)))
}

/// The mask of rim elements a_1..a_k in constructor order.
pub(crate) fn rim_mask(k: usize) -> u64 {
    (0..k).fold(0u64, |acc, i| acc | 1 << (2 * i))
}

/// The rank-k whirl: the wheel with its rim relaxed. whirl(2) is U_{2,4}.
pub fn whirl(k: usize) -> Result<(Matroid, WheelLabeling)> {
    if k < 2 {
        return input_err("whirl requires at least 2 rim vertices");
    }
    if k > WHIRL_MAX {
        return capacity_err(format!("whirl supports at most {WHIRL_MAX} rim vertices"));
    }
    let (w, _) = wheel(k)?;
    let rim = crate::set::ElementSet::from_bits_unchecked(2 * k, rim_mask(k));
    let m = w
        .relax_circuit_hyperplane(&rim)
        .expect("wheel rim is always a circuit-hyperplane");
    Ok((m, WheelLabeling::standard(WheelKind::Whirl, k)))
}

/// Recognizes wheels (k >= 3) and whirls (k >= 2) up to isomorphism,
/// returning a labeling of `m`'s own elements. Deterministic: the chain
/// search scans candidates in ascending element order.
pub fn recognize_wheel_or_whirl(m: &Matroid) -> Option<WheelLabeling> {
    let n = m.ground_size();
    if n < 4 || n % 2 != 0 {
        return None;
    }
    let k = n / 2;
    if m.full_rank() != k || !m.is_simple() {
        return None;
    }
    if n == 4 {
        // Rank-2 whirl = U_{2,4}: every pair is a basis.
        if m.basis_masks().len() == 6 {
            let lab = WheelLabeling::standard(WheelKind::Whirl, 2);
            debug_assert!(lab.verify(m));
            return Some(lab);
        }
        return None;
    }

    let triangles: Vec<u64> = m.triangles().iter().map(|t| t.bits()).collect();
    if triangles.len() < k {
        return None;
    }

    // The spoke triangles {b_i, a_{i+1}, b_{i+1}} chain around the hub; walk
    // that chain from every possible seed and orientation.
    let mut search = ChainSearch { m, k, triangles: &triangles };
    for b1 in 0..n {
        for t in 0..triangles.len() {
            let tri = triangles[t];
            if tri >> b1 & 1 == 0 {
                continue;
            }
            let rest: Vec<usize> = crate::set::BitIter(tri & !(1 << b1)).collect();
            for (a2, b2) in [(rest[0], rest[1]), (rest[1], rest[0])] {
                let mut spokes = vec![b1, b2];
                let mut rim = vec![a2];
                let used = 1u64 << b1 | 1 << a2 | 1 << b2;
                if let Some(lab) = search.extend(&mut spokes, &mut rim, used, tri) {
                    return Some(lab);
                }
            }
        }
    }
    None
}

struct ChainSearch<'a> {
    m: &'a Matroid,
    k: usize,
    triangles: &'a [u64],
}

impl ChainSearch<'_> {
    /// Extends the spoke chain; rim[j] holds a_{j+2}. On success returns a
    /// fully verified labeling.
    fn extend(
        &mut self,
        spokes: &mut Vec<usize>,
        rim: &mut Vec<usize>,
        used: u64,
        last_tri: u64,
    ) -> Option<WheelLabeling> {
        let k = self.k;
        let bi = *spokes.last().unwrap();
        if spokes.len() == k {
            // Close the cycle: {b_k, a_1, b_1} must be a triangle where a_1
            // is the single unused element.
            let a1_mask = crate::set::mask_full(2 * k) & !used;
            if a1_mask.count_ones() != 1 {
                return None;
            }
            let closing = 1u64 << bi | 1 << spokes[0] | a1_mask;
            if !self.triangles.contains(&closing) {
                return None;
            }
            let a1 = a1_mask.trailing_zeros() as usize;
            let full_rim: Vec<usize> = std::iter::once(a1).chain(rim.iter().copied()).collect();
            return self.finish(&full_rim, spokes);
        }
        for &tri in self.triangles {
            if tri >> bi & 1 == 0 || tri == last_tri || tri & used != 1 << bi {
                continue;
            }
            let rest: Vec<usize> = crate::set::BitIter(tri & !(1 << bi)).collect();
            for (a, b) in [(rest[0], rest[1]), (rest[1], rest[0])] {
                spokes.push(b);
                rim.push(a);
                if let Some(lab) = self.extend(spokes, rim, used | tri, tri) {
                    return Some(lab);
                }
                spokes.pop();
                rim.pop();
            }
        }
        None
    }

    /// Checks the triad pattern, decides wheel vs whirl by rim rank, and
    /// verifies exactly against the constructed reference.
    fn finish(&self, rim: &[usize], spokes: &[usize]) -> Option<WheelLabeling> {
        let k = self.k;
        for i in 0..k {
            let triad = 1u64 << rim[i] | 1 << spokes[i] | 1 << rim[(i + 1) % k];
            if !self.m.is_cocircuit_mask(triad) {
                return None;
            }
        }
        let rim_bits = rim.iter().fold(0u64, |acc, &e| acc | 1 << e);
        let kind = if self.m.rank_mask(rim_bits) < k {
            WheelKind::Wheel
        } else {
            WheelKind::Whirl
        };
        let lab = WheelLabeling {
            kind,
            k,
            rim: rim.to_vec(),
            spokes: spokes.to_vec(),
        };
        if lab.verify(self.m) {
            Some(lab)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set::ElementSet;

    #[test]
    fn wheel_three_is_k4() {
        let (w3, lab) = wheel(3).unwrap();
        assert!(w3.same_labeled_matroid(&crate::matroid::tests::k4()));
        assert_eq!(w3.basis_masks().len(), 16); // spanning trees of K4
        assert_eq!(lab.rim, vec![0, 2, 4]);
        assert_eq!(lab.spokes, vec![1, 3, 5]);
        assert!(lab.verify(&w3));
    }

    #[test]
    fn wheel_sizes_and_patterns() {
        for k in 2..=6 {
            let (w, lab) = wheel(k).unwrap();
            assert_eq!(w.ground_size(), 2 * k);
            assert_eq!(w.full_rank(), k);
            // Rim is a circuit-hyperplane.
            let rim = ElementSet::from_bits_unchecked(2 * k, rim_mask(k));
            assert!(w.is_circuit_mask(rim.bits()));
            assert_eq!(w.rank(&rim), k - 1);
            assert_eq!(w.closure(&rim), rim);
            // Alternating triangle/triad pattern.
            for i in 0..k {
                let j = (i + 1) % k;
                let tri = 1u64 << lab.spokes[i] | 1 << lab.rim[j] | 1 << lab.spokes[j];
                let triad = 1u64 << lab.rim[i] | 1 << lab.spokes[i] | 1 << lab.rim[j];
                if k >= 3 {
                    assert!(w.is_circuit_mask(tri), "k={k} i={i}");
                }
                assert!(w.is_cocircuit_mask(triad), "k={k} i={i}");
            }
        }
        assert!(wheel(1).is_err());
        assert!(wheel(33).is_err());
    }

    #[test]
    fn whirl_examples() {
        let (w2, _) = whirl(2).unwrap();
        assert!(w2.same_labeled_matroid(&Matroid::uniform(2, 4).unwrap()));

        let (w3, _) = whirl(3).unwrap();
        assert_eq!(w3.basis_masks().len(), 17); // 16 + relaxed rim
        assert_eq!(w3.triangles().len(), 3);
        assert_eq!(w3.triads().len(), 3);

        for k in 2..=6 {
            let (w, _) = whirl(k).unwrap();
            assert_eq!(w.ground_size(), 2 * k);
            assert_eq!(w.full_rank(), k);
            // The rim is now a basis.
            assert!(w.is_basis(&ElementSet::from_bits_unchecked(2 * k, rim_mask(k))));
        }
        assert!(whirl(1).is_err());
        assert!(whirl(13).is_err());
    }

    #[test]
    fn wheel_whirl_basis_counts_differ() {
        for k in 3..=5 {
            let (w, _) = wheel(k).unwrap();
            let (h, _) = whirl(k).unwrap();
            assert_eq!(h.basis_masks().len(), w.basis_masks().len() + 1);
        }
    }

    #[test]
    fn recognition_round_trip() {
        for k in 2..=6 {
            if k >= 3 {
                let (w, _) = wheel(k).unwrap();
                let lab = recognize_wheel_or_whirl(&w).expect("wheel recognized");
                assert_eq!((lab.kind, lab.k), (WheelKind::Wheel, k), "wheel {k}");
                assert!(lab.verify(&w));
            }
            let (h, _) = whirl(k).unwrap();
            let lab = recognize_wheel_or_whirl(&h).expect("whirl recognized");
            assert_eq!((lab.kind, lab.k), (WheelKind::Whirl, k), "whirl {k}");
            assert!(lab.verify(&h));
        }
    }

    #[test]
    fn recognition_survives_relabeling() {
        let (w4, _) = wheel(4).unwrap();
        let scrambled = w4.relabel(&[3, 6, 0, 7, 2, 5, 1, 4]);
        let lab = recognize_wheel_or_whirl(&scrambled).expect("recognized");
        assert_eq!((lab.kind, lab.k), (WheelKind::Wheel, 4));
        assert!(lab.verify(&scrambled));

        let (h3, _) = whirl(3).unwrap();
        let scrambled = h3.relabel(&[5, 2, 4, 0, 1, 3]);
        let lab = recognize_wheel_or_whirl(&scrambled).expect("recognized");
        assert_eq!((lab.kind, lab.k), (WheelKind::Whirl, 3));
        assert!(lab.verify(&scrambled));
    }

    #[test]
    fn recognition_rejects_non_wheels() {
        assert!(recognize_wheel_or_whirl(&Matroid::uniform(3, 6).unwrap()).is_none());
        assert!(recognize_wheel_or_whirl(&Matroid::uniform(2, 5).unwrap()).is_none());
        assert!(recognize_wheel_or_whirl(&Matroid::uniform(3, 4).unwrap()).is_none());
        // M(W_2) has parallel rim edges, hence is not in the family.
        let (w2, _) = wheel(2).unwrap();
        assert!(recognize_wheel_or_whirl(&w2).is_none());
        // Direct sum of triangles has the right size and rank but fails.
        let t = Matroid::uniform(2, 3).unwrap();
        assert!(recognize_wheel_or_whirl(&t.direct_sum(&t)).is_none());
        // A labeling claimed against the wrong matroid fails verification.
        let (_, lab) = wheel(3).unwrap();
        assert!(!lab.verify(&whirl(3).unwrap().0));
    }
}
