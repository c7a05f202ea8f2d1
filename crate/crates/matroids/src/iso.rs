//! Canonical forms and isomorphism testing.
//!
//! The canonical form of a matroid is the lexicographically least basis
//! indicator string over a class of relabelings. Rank-r subsets are ordered
//! colexicographically (equivalently: by their bitmask value), so the
//! subsets drawn from the first d elements always form a prefix of the
//! string — that makes prefix-by-prefix branch-and-bound possible.
//!
//! The minimization ranges over the permutations that list elements in
//! non-decreasing signature order, where an element's signature (basis
//! degree plus circuit-size profile) is itself isomorphism-invariant.
//! Restricting to that class keeps the minimum a complete invariant: an
//! isomorphism maps the class for one matroid bijectively onto the class
//! for the other while preserving indicator strings, so both minima agree;
//! conversely equal strings exhibit an explicit isomorphism. The block
//! structure prunes the search from n! to the product of block factorials.

use crate::error::{capacity_err, Result};
use crate::matroid::Matroid;
use crate::ops::remap_mask;
use crate::set::k_subsets;
use serde::Serialize;
use std::cmp::Ordering;

/// Largest ground set for canonical forms.
pub const CANONICAL_MAX: usize = 12;

/// A complete isomorphism invariant for matroids with at most
/// `CANONICAL_MAX` elements. Orders as (n, r, encoding), the census order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanonicalForm {
    pub n: usize,
    pub r: usize,
    /// Basis indicator bits in colex subset order, packed MSB-first.
    pub bytes: Vec<u8>,
}

impl std::fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "cf1:n{}-r{}-", self.n, self.r)?;
        for b in &self.bytes {
            write!(f, "{b:02x}")?;
        }
        Ok(())
    }
}

impl CanonicalForm {
    fn from_bits(n: usize, r: usize, bits: &[bool]) -> CanonicalForm {
        let mut bytes = vec![0u8; bits.len().div_ceil(8)];
        for (i, &bit) in bits.iter().enumerate() {
            if bit {
                bytes[i / 8] |= 1 << (7 - i % 8);
            }
        }
        CanonicalForm { n, r, bytes }
    }

    fn bit(&self, i: usize) -> bool {
        self.bytes[i / 8] >> (7 - i % 8) & 1 == 1
    }

    /// Reconstructs the canonically labeled matroid.
    pub fn to_matroid(&self) -> Matroid {
        let bases = k_subsets(self.n, self.r)
            .enumerate()
            .filter(|&(i, _)| self.bit(i))
            .map(|(_, mask)| mask)
            .collect();
        Matroid::from_basis_masks_unchecked(self.n, bases)
    }
}

/// Per-element invariant: [number of bases containing e, then the number of
/// circuits of each size 1..=n through e]. Preserved by isomorphism.
pub(crate) fn element_signatures(m: &Matroid) -> Vec<Vec<usize>> {
    let n = m.ground_size();
    let mut sigs = vec![vec![0usize; n + 1]; n];
    for &b in m.basis_masks() {
        for e in crate::set::BitIter(b) {
            sigs[e][0] += 1;
        }
    }
    for c in m.circuit_masks(n) {
        let size = c.count_ones() as usize;
        for e in crate::set::BitIter(c) {
            sigs[e][size] += 1;
        }
    }
    sigs
}

pub fn canonical_form(m: &Matroid) -> Result<CanonicalForm> {
    let n = m.ground_size();
    if n > CANONICAL_MAX {
        return capacity_err(format!(
            "canonical form supports at most {CANONICAL_MAX} elements, got {n}"
        ));
    }
    let r = m.full_rank();
    let num_bits = binomial(n, r);
    if m.basis_masks().len() == num_bits {
        // Every r-subset is a basis: all relabelings give the all-ones
        // string. Covers uniform matroids and every rank-0 matroid.
        return Ok(CanonicalForm::from_bits(n, r, &vec![true; num_bits]));
    }

    // Group elements into signature blocks; positions are filled block by
    // block, so each position draws from one fixed block.
    let sigs = element_signatures(m);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| sigs[a].cmp(&sigs[b]).then(a.cmp(&b)));
    let mut block_of_position = vec![0usize; n];
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for (pos, &e) in order.iter().enumerate() {
        if pos == 0 || sigs[e] != sigs[order[pos - 1]] {
            blocks.push(Vec::new());
        }
        block_of_position[pos] = blocks.len() - 1;
        blocks.last_mut().unwrap().push(e);
    }

    let mut search = CanonicalSearch {
        m,
        r,
        blocks,
        block_of_position,
        assigned: Vec::with_capacity(n),
        current: Vec::with_capacity(num_bits),
        best: None,
    };
    search.dfs(0, Ordering::Equal);
    let best = search.best.expect("at least one labeling is always explored");
    Ok(CanonicalForm::from_bits(n, r, &best))
}

struct CanonicalSearch<'a> {
    m: &'a Matroid,
    r: usize,
    blocks: Vec<Vec<usize>>,
    block_of_position: Vec<usize>,
    /// assigned[p] = old element placed at new position p.
    assigned: Vec<usize>,
    current: Vec<bool>,
    best: Option<Vec<bool>>,
}

impl CanonicalSearch<'_> {
    /// `cmp` tracks current-prefix versus the best string; Greater branches
    /// are pruned before recursing. Whenever a descendant improves the best,
    /// the current prefix becomes a prefix of that new best, so `cmp` resets
    /// to Equal for the remaining siblings. Returns whether the subtree
    /// updated the best.
    fn dfs(&mut self, used: u64, mut cmp: Ordering) -> bool {
        let n = self.m.ground_size();
        let d = self.assigned.len();
        if d == n {
            if self.best.is_none() || cmp == Ordering::Less {
                self.best = Some(self.current.clone());
                return true;
            }
            return false;
        }
        let mut improved = false;
        let block = self.block_of_position[d];
        for i in 0..self.blocks[block].len() {
            let e = self.blocks[block][i];
            if used >> e & 1 == 1 {
                continue;
            }
            self.assigned.push(e);
            let emitted = self.emit_bits();
            let next_cmp = self.compare_suffix(cmp, emitted);
            if next_cmp != Ordering::Greater && self.dfs(used | 1 << e, next_cmp) {
                improved = true;
                cmp = Ordering::Equal;
            }
            self.current.truncate(self.current.len() - emitted);
            self.assigned.pop();
        }
        improved
    }

    /// Appends the indicator bits of all r-subsets whose maximum position is
    /// the one just assigned, in colex order. Returns how many were added.
    fn emit_bits(&mut self) -> usize {
        let d = self.assigned.len();
        let r = self.r;
        if r == 0 || d < r {
            return 0;
        }
        let top = self.assigned[d - 1];
        let before = self.current.len();
        for mask in k_subsets(d - 1, r - 1) {
            let mut old = 1u64 << top;
            for p in crate::set::BitIter(mask) {
                old |= 1 << self.assigned[p];
            }
            self.current.push(self.m.rank_mask(old) == r);
        }
        self.current.len() - before
    }

    fn compare_suffix(&self, cmp: Ordering, emitted: usize) -> Ordering {
        let Some(best) = &self.best else { return Ordering::Less };
        if cmp != Ordering::Equal {
            return cmp;
        }
        let start = self.current.len() - emitted;
        for i in start..self.current.len() {
            match self.current[i].cmp(&best[i]) {
                Ordering::Equal => {}
                other => return other,
            }
        }
        Ordering::Equal
    }
}

/// Exact isomorphism test. Matroids up to `CANONICAL_MAX` elements compare
/// by canonical form; beyond that wheels and whirls are recognized
/// structurally, and remaining cases fall back to a pruned backtracking
/// search over signature-compatible bijections.
pub fn are_isomorphic(m1: &Matroid, m2: &Matroid) -> bool {
    if m1.ground_size() != m2.ground_size()
        || m1.full_rank() != m2.full_rank()
        || m1.basis_masks().len() != m2.basis_masks().len()
    {
        return false;
    }
    let (s1, s2) = (element_signatures(m1), element_signatures(m2));
    let mut sorted1 = s1.clone();
    let mut sorted2 = s2.clone();
    sorted1.sort();
    sorted2.sort();
    if sorted1 != sorted2 {
        return false;
    }
    if m1.ground_size() <= CANONICAL_MAX {
        return canonical_form(m1).expect("within capacity")
            == canonical_form(m2).expect("within capacity");
    }
    let rec1 = crate::construct::recognize_wheel_or_whirl(m1);
    let rec2 = crate::construct::recognize_wheel_or_whirl(m2);
    match (&rec1, &rec2) {
        (Some(a), Some(b)) => return (a.kind, a.k) == (b.kind, b.k),
        (Some(_), None) | (None, Some(_)) => return false,
        (None, None) => {}
    }
    isomorphic_backtracking(m1, m2, &s1, &s2)
}

/// Builds an element bijection depth-first; partial maps must preserve the
/// ranks of all 2- and 3-subsets of the assigned elements, and complete maps
/// are verified by exact basis-family comparison.
pub(crate) fn isomorphic_backtracking(
    m1: &Matroid,
    m2: &Matroid,
    s1: &[Vec<usize>],
    s2: &[Vec<usize>],
) -> bool {
    let n = m1.ground_size();
    let mut bases2: Vec<u64> = m2.basis_masks().to_vec();
    bases2.sort_unstable();
    let mut phi = vec![usize::MAX; n];
    let mut used = 0u64;
    backtrack(m1, m2, s1, s2, &bases2, &mut phi, &mut used, 0)
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    m1: &Matroid,
    m2: &Matroid,
    s1: &[Vec<usize>],
    s2: &[Vec<usize>],
    bases2: &[u64],
    phi: &mut Vec<usize>,
    used: &mut u64,
    e: usize,
) -> bool {
    let n = m1.ground_size();
    if e == n {
        let mut mapped: Vec<u64> = m1
            .basis_masks()
            .iter()
            .map(|&b| remap_mask(b, phi))
            .collect();
        mapped.sort_unstable();
        return mapped == bases2;
    }
    for f in 0..n {
        if *used >> f & 1 == 1 || s1[e] != s2[f] {
            continue;
        }
        if !small_sets_match(m1, m2, phi, e, f) {
            continue;
        }
        phi[e] = f;
        *used |= 1 << f;
        if backtrack(m1, m2, s1, s2, bases2, phi, used, e + 1) {
            return true;
        }
        *used &= !(1 << f);
        phi[e] = usize::MAX;
    }
    false
}

/// Ranks of pairs and triples through `e` (against `f`) must agree with the
/// partial map built so far.
fn small_sets_match(m1: &Matroid, m2: &Matroid, phi: &[usize], e: usize, f: usize) -> bool {
    for a in 0..e {
        let pair1 = 1u64 << a | 1 << e;
        let pair2 = 1u64 << phi[a] | 1 << f;
        if m1.rank_mask(pair1) != m2.rank_mask(pair2) {
            return false;
        }
        for b in a + 1..e {
            let tri1 = pair1 | 1 << b;
            let tri2 = pair2 | 1 << phi[b];
            if m1.rank_mask(tri1) != m2.rank_mask(tri2) {
                return false;
            }
        }
    }
    true
}

pub(crate) fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{wheel, whirl};
    use crate::matroid::tests::k4;

    fn u(r: usize, n: usize) -> Matroid {
        Matroid::uniform(r, n).unwrap()
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(12, 6), 924);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn uniform_shortcut_encoding() {
        // All C(4,2) = 6 bits set, MSB-first: 11111100 = 0xfc.
        let cf = canonical_form(&u(2, 4)).unwrap();
        assert_eq!(cf.to_string(), "cf1:n4-r2-fc");
        // Rank 0: the single empty basis.
        let cf = canonical_form(&u(0, 2)).unwrap();
        assert_eq!(cf.to_string(), "cf1:n2-r0-80");
        // Empty ground set.
        let cf = canonical_form(&Matroid::uniform(0, 0).unwrap()).unwrap();
        assert_eq!(cf.to_string(), "cf1:n0-r0-80");
    }

    #[test]
    fn permutation_invariance() {
        let m = k4();
        let base = canonical_form(&m).unwrap();
        for perm in [
            [1, 0, 2, 3, 4, 5],
            [5, 4, 3, 2, 1, 0],
            [2, 3, 4, 5, 0, 1],
            [3, 1, 4, 0, 5, 2],
        ] {
            assert_eq!(canonical_form(&m.relabel(&perm)).unwrap(), base);
        }
        // A matroid with loops and mixed structure.
        let mixed = u(0, 1).direct_sum(&u(1, 2)).direct_sum(&u(2, 3));
        let base = canonical_form(&mixed).unwrap();
        for perm in [[5, 4, 3, 2, 1, 0], [2, 0, 4, 1, 5, 3]] {
            assert_eq!(canonical_form(&mixed.relabel(&perm)).unwrap(), base);
        }
    }

    #[test]
    fn distinguishes_close_pairs() {
        let w3 = wheel(3).unwrap().0;
        let h3 = whirl(3).unwrap().0;
        assert_ne!(canonical_form(&w3).unwrap(), canonical_form(&h3).unwrap());
        assert_ne!(canonical_form(&u(1, 3)).unwrap(), canonical_form(&u(2, 3)).unwrap());
        // Same size, rank, and basis count; different structure.
        let a = u(1, 2).direct_sum(&u(1, 2)); // two parallel pairs: 4 bases
        let b = u(1, 3).direct_sum(&u(1, 1)); // triple + coloop: 3 bases
        assert_ne!(canonical_form(&a).unwrap(), canonical_form(&b).unwrap());
    }

    #[test]
    fn reconstruction_round_trip() {
        for m in [k4(), whirl(3).unwrap().0, u(2, 5), u(0, 1).direct_sum(&u(2, 3))] {
            let cf = canonical_form(&m).unwrap();
            let rebuilt = cf.to_matroid();
            assert!(are_isomorphic(&m, &rebuilt));
            // Reconstruction is already canonically labeled.
            assert_eq!(canonical_form(&rebuilt).unwrap(), cf);
        }
    }

    #[test]
    fn isomorphism_examples() {
        assert!(are_isomorphic(&u(2, 4).dual(), &u(2, 4)));
        assert!(!are_isomorphic(&wheel(4).unwrap().0, &whirl(4).unwrap().0));
        let two_sum = u(2, 3).two_sum(&u(2, 3), 0, 0).unwrap();
        assert!(are_isomorphic(&two_sum, &u(3, 4)));
        assert!(are_isomorphic(&whirl(2).unwrap().0, &u(2, 4)));
        assert!(!are_isomorphic(&u(2, 4), &u(2, 5)));
    }

    #[test]
    fn isomorphism_beyond_canonical_capacity() {
        // n = 14 goes through structural recognition.
        let w7 = wheel(7).unwrap().0;
        let scramble: Vec<usize> = (0..14).map(|i| (i * 5 + 3) % 14).collect();
        assert!(are_isomorphic(&w7, &w7.relabel(&scramble)));
        assert!(!are_isomorphic(&w7, &whirl(7).unwrap().0));
        // Unrecognized large matroids fall back to backtracking.
        let big_a = u(2, 3).direct_sum(&u(2, 3)).direct_sum(&u(2, 3)).direct_sum(&u(2, 4));
        let perm: Vec<usize> = (0..13).rev().collect();
        let big_b = big_a.relabel(&perm);
        assert!(are_isomorphic(&big_a, &big_b));
    }

    #[test]
    fn backtracking_agrees_with_canonical_forms() {
        let corpus = [
            u(2, 4),
            u(1, 3),
            u(3, 4),
            k4(),
            whirl(3).unwrap().0,
            u(1, 2).direct_sum(&u(1, 2)),
            u(1, 3).direct_sum(&u(1, 1)),
            u(2, 3).direct_sum(&u(0, 1)),
            k4().delete(&crate::set::ElementSet::from_indices(6, &[0]).unwrap()),
        ];
        for a in &corpus {
            for b in &corpus {
                if a.ground_size() != b.ground_size() {
                    continue;
                }
                let by_cf = canonical_form(a).unwrap() == canonical_form(b).unwrap();
                let (s1, s2) = (element_signatures(a), element_signatures(b));
                let by_bt = isomorphic_backtracking(a, b, &s1, &s2);
                assert_eq!(by_cf, by_bt, "{a:?} vs {b:?}");
            }
        }
    }

    #[test]
    fn backtracking_matches_census_classes() {
        // Distinct classes are never matched, and every relabeled copy is.
        let classes = crate::enumerate::enumerate_matroids(5).unwrap();
        for (i, (_, a)) in classes.iter().enumerate() {
            let n = a.ground_size();
            let perm: Vec<usize> = (0..n).rev().collect();
            let scrambled = a.relabel(&perm);
            let (s1, s2) = (element_signatures(a), element_signatures(&scrambled));
            assert!(isomorphic_backtracking(a, &scrambled, &s1, &s2));
            for (_, b) in &classes[i + 1..] {
                if b.ground_size() != n || b.full_rank() != a.full_rank() {
                    continue;
                }
                let (s1, s2) = (element_signatures(a), element_signatures(b));
                assert!(!isomorphic_backtracking(a, b, &s1, &s2));
            }
        }
    }

    #[test]
    fn capacity_guard() {
        assert!(canonical_form(&u(0, 13)).is_err());
        assert!(canonical_form(&u(6, 12)).is_ok());
    }

    /// Exhaustive invariance: every class on at most 5 elements keeps one
    /// encoding across all permutations of its ground set.
    #[test]
    fn complete_invariance_small_census() {
        fn permutations(n: usize) -> Vec<Vec<usize>> {
            let mut out = Vec::new();
            let mut items: Vec<usize> = (0..n).collect();
            fn heap(k: usize, items: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
                if k <= 1 {
                    out.push(items.clone());
                    return;
                }
                for i in 0..k {
                    heap(k - 1, items, out);
                    if k % 2 == 0 {
                        items.swap(i, k - 1);
                    } else {
                        items.swap(0, k - 1);
                    }
                }
            }
            heap(n, &mut items, &mut out);
            out
        }
        for n in 0..=5usize {
            let perms = permutations(n);
            for cf in crate::enumerate::naive_enumerate(n).unwrap() {
                let m = cf.to_matroid();
                for perm in &perms {
                    assert_eq!(
                        canonical_form(&m.relabel(perm)).unwrap(),
                        cf,
                        "n={n} perm={perm:?}"
                    );
                }
            }
        }
    }
}
