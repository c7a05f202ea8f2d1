//! Operations producing new matroids: duality, minors, simplification,
//! sums, and circuit-hyperplane relaxation.
//!
//! Every derived matroid is materialized in the bases representation, so the
//! results are representation-independent values. Minors relabel the
//! surviving elements by order-preserving compaction; the corresponding
//! `ElementMap` is available from `deletion_map` / `contraction_map`.

use crate::error::{input_err, Result};
use crate::matroid::{Matroid, Rep};
use crate::set::{k_subsets, mask_full, ElementMap, ElementSet};

impl Matroid {
    /// The dual matroid: bases are complements of bases.
    pub fn dual(&self) -> Matroid {
        match self.rep() {
            Rep::Uniform { r } => Matroid::uniform(self.ground_size() - r, self.ground_size())
                .expect("dual of uniform is uniform"),
            _ => {
                let full = mask_full(self.ground_size());
                let co: Vec<u64> = self.basis_masks().iter().map(|&b| full & !b).collect();
                Matroid::from_basis_masks_unchecked(self.ground_size(), co)
            }
        }
    }

    /// Deletes `x`; survivors are relabeled by order-preserving compaction.
    pub fn delete(&self, x: &ElementSet) -> Matroid {
        assert_eq!(x.ground_size(), self.ground_size());
        let keep = x.complement();
        let positions = keep.to_vec();
        let new_n = positions.len();
        let r = self.rank_mask(keep.bits());
        let mut bases = Vec::new();
        for compact in k_subsets(new_n, r) {
            let expanded = expand_mask(compact, &positions);
            if self.rank_mask(expanded) == r {
                bases.push(compact);
            }
        }
        Matroid::from_basis_masks_unchecked(new_n, bases)
    }

    /// Contracts `x`; survivors are relabeled by order-preserving compaction.
    /// Agrees with dual(delete(dual(M), x)).
    pub fn contract(&self, x: &ElementSet) -> Matroid {
        assert_eq!(x.ground_size(), self.ground_size());
        let keep = x.complement();
        let positions = keep.to_vec();
        let new_n = positions.len();
        let rx = self.rank_mask(x.bits());
        let r = self.full_rank() - rx;
        let mut bases = Vec::new();
        for compact in k_subsets(new_n, r) {
            let expanded = expand_mask(compact, &positions);
            if self.rank_mask(expanded | x.bits()) == rx + r {
                bases.push(compact);
            }
        }
        Matroid::from_basis_masks_unchecked(new_n, bases)
    }

    /// Restriction to `x`: delete the complement.
    pub fn restrict(&self, x: &ElementSet) -> Matroid {
        self.delete(&x.complement())
    }

    /// The relabeling performed by `delete(x)` (and by `restrict` of the
    /// complement).
    pub fn deletion_map(&self, x: &ElementSet) -> ElementMap {
        ElementMap::compaction(self.ground_size(), x, format!("delete {x}"))
    }

    /// The relabeling performed by `contract(x)`.
    pub fn contraction_map(&self, x: &ElementSet) -> ElementMap {
        ElementMap::compaction(self.ground_size(), x, format!("contract {x}"))
    }

    /// Removes loops and all but the lowest-indexed member of each parallel
    /// class.
    pub fn simplify(&self) -> (Matroid, ElementMap) {
        let classes = self.parallel_classes();
        let mut removed = classes.degenerate.bits();
        for class in &classes.classes {
            let keep = class.bits().trailing_zeros();
            removed |= class.bits() & !(1u64 << keep);
        }
        let removed = ElementSet::from_bits_unchecked(self.ground_size(), removed);
        let map = ElementMap::compaction(self.ground_size(), &removed, format!("simplify, drop {removed}"));
        (self.delete(&removed), map)
    }

    /// Contracts coloops and all but the lowest-indexed member of each series
    /// class: the dual of simplifying the dual.
    pub fn cosimplify(&self) -> (Matroid, ElementMap) {
        let classes = self.series_classes();
        let mut removed = classes.degenerate.bits();
        for class in &classes.classes {
            let keep = class.bits().trailing_zeros();
            removed |= class.bits() & !(1u64 << keep);
        }
        let removed = ElementSet::from_bits_unchecked(self.ground_size(), removed);
        let map = ElementMap::compaction(self.ground_size(), &removed, format!("cosimplify, drop {removed}"));
        (self.contract(&removed), map)
    }

    /// Direct sum; the second summand's elements are shifted above the
    /// first's.
    pub fn direct_sum(&self, other: &Matroid) -> Matroid {
        let n1 = self.ground_size();
        let n = n1 + other.ground_size();
        assert!(n <= crate::set::MAX_GROUND_SET, "direct sum exceeds ground-set cap");
        let mut bases = Vec::new();
        for &b1 in self.basis_masks() {
            for &b2 in other.basis_masks() {
                bases.push(b1 | b2 << n1);
            }
        }
        Matroid::from_basis_masks_unchecked(n, bases)
    }

    /// Two-sum along basepoints `p1`, `p2`. The circuits of the result are
    /// the circuits of `self \ p1`, the circuits of `other \ p2`, and the
    /// unions (C1 - p1) u (C2 - p2) over circuits Ci through pi.
    ///
    /// The ground set is `self`'s elements without `p1` (compacted) followed
    /// by `other`'s without `p2`.
    pub fn two_sum(&self, other: &Matroid, p1: usize, p2: usize) -> Result<Matroid> {
        for (m, p, which) in [(self, p1, "first"), (other, p2, "second")] {
            if m.ground_size() < 3 {
                return input_err(format!("{which} summand has fewer than 3 elements"));
            }
            if p >= m.ground_size() {
                return input_err(format!("basepoint {p} outside the {which} ground set"));
            }
            if m.rank_mask(1 << p) == 0 {
                return input_err(format!("basepoint {p} is a loop of the {which} summand"));
            }
            let rest = mask_full(m.ground_size()) & !(1 << p);
            if m.rank_mask(rest) < m.full_rank() {
                return input_err(format!("basepoint {p} is a coloop of the {which} summand"));
            }
        }

        let (n1, n2) = (self.ground_size(), other.ground_size());
        let n = n1 + n2 - 2;
        let side1 = |c: u64| compact_without(c & !(1u64 << p1), p1);
        let side2 = |c: u64| compact_without(c & !(1u64 << p2), p2) << (n1 - 1);

        let mut circuits: Vec<u64> = Vec::new();
        let mut through1 = Vec::new();
        let mut through2 = Vec::new();
        for c in self.circuit_masks(n1) {
            if c >> p1 & 1 == 1 {
                through1.push(side1(c));
            } else {
                circuits.push(side1(c));
            }
        }
        for c in other.circuit_masks(n2) {
            if c >> p2 & 1 == 1 {
                through2.push(side2(c));
            } else {
                circuits.push(side2(c));
            }
        }
        for &c1 in &through1 {
            for &c2 in &through2 {
                circuits.push(c1 | c2);
            }
        }

        let rank = self.full_rank() + other.full_rank() - 1;
        let bases: Vec<ElementSet> = k_subsets(n, rank)
            .filter(|&m| circuits.iter().all(|&c| c & m != c))
            .map(|m| ElementSet::from_bits_unchecked(n, m))
            .collect();
        Matroid::from_bases(n, bases)
    }

    /// Relaxes a circuit-hyperplane: the set becomes one extra basis.
    pub fn relax_circuit_hyperplane(&self, x: &ElementSet) -> Result<Matroid> {
        assert_eq!(x.ground_size(), self.ground_size());
        if !self.is_circuit_mask(x.bits()) {
            return input_err(format!("{x} is not a circuit"));
        }
        let r = self.full_rank();
        if r == 0 || self.rank(x) != r - 1 || self.closure(x) != *x {
            return input_err(format!("{x} is not a hyperplane"));
        }
        let mut bases = self.basis_masks().to_vec();
        bases.push(x.bits());
        Ok(Matroid::from_basis_masks_unchecked(self.ground_size(), bases))
    }

    /// Relabels elements by `perm` (old index -> new index), materializing
    /// the basis family.
    pub fn relabel(&self, perm: &[usize]) -> Matroid {
        let n = self.ground_size();
        assert_eq!(perm.len(), n);
        let bases = self.basis_masks().iter().map(|&b| remap_mask(b, perm)).collect();
        Matroid::from_basis_masks_unchecked(n, bases)
    }
}

/// Spreads the bits of `compact` onto the given positions.
pub(crate) fn expand_mask(compact: u64, positions: &[usize]) -> u64 {
    let mut out = 0u64;
    for (i, &pos) in positions.iter().enumerate() {
        if compact >> i & 1 == 1 {
            out |= 1 << pos;
        }
    }
    out
}

/// Drops position `p` from the mask and closes the gap.
pub(crate) fn compact_without(mask: u64, p: usize) -> u64 {
    debug_assert_eq!(mask >> p & 1, 0, "mask must avoid the dropped position");
    let low = mask & ((1u64 << p) - 1);
    low | (mask >> (p + 1)) << p
}

/// Applies `perm` (old -> new) to a mask.
pub(crate) fn remap_mask(mask: u64, perm: &[usize]) -> u64 {
    let mut out = 0u64;
    for e in crate::set::BitIter(mask) {
        out |= 1 << perm[e];
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::validate_bases;

    fn set(n: usize, ix: &[usize]) -> ElementSet {
        ElementSet::from_indices(n, ix).unwrap()
    }

    fn u(r: usize, n: usize) -> Matroid {
        Matroid::uniform(r, n).unwrap()
    }

    #[test]
    fn dual_of_uniform() {
        assert!(u(2, 4).dual().same_labeled_matroid(&u(2, 4)));
        assert!(u(1, 3).dual().same_labeled_matroid(&u(2, 3)));
        assert!(u(0, 1).dual().same_labeled_matroid(&u(1, 1)));
    }

    #[test]
    fn dual_involution() {
        let k4 = crate::matroid::tests::k4();
        assert!(k4.dual().dual().same_labeled_matroid(&k4));
        assert!(validate_bases(6, &k4.dual().bases()));
        // Duality swaps rank and corank.
        let d = k4.dual();
        for mask in 0..64u64 {
            let x = ElementSet::from_bits(6, mask).unwrap();
            assert_eq!(k4.corank(&x), d.rank(&x));
        }
    }

    #[test]
    fn delete_examples() {
        // U_{2,4} \ {3} = U_{2,3}
        let m = u(2, 4).delete(&set(4, &[3]));
        assert!(m.same_labeled_matroid(&u(2, 3)));
        // Deleting everything yields the empty matroid.
        let e = u(2, 4).delete(&ElementSet::full(4));
        assert_eq!(e.ground_size(), 0);
        assert_eq!(e.full_rank(), 0);
        // Relabeling is order-preserving compaction.
        let map = u(2, 4).deletion_map(&set(4, &[1]));
        assert_eq!(map.forward, vec![Some(0), None, Some(1), Some(2)]);
    }

    #[test]
    fn contract_examples() {
        // U_{2,4} / {0} = U_{1,3}
        let m = u(2, 4).contract(&set(4, &[0]));
        assert!(m.same_labeled_matroid(&u(1, 3)));
        // Contracting everything yields the empty matroid.
        let e = u(2, 4).contract(&ElementSet::full(4));
        assert_eq!(e.ground_size(), 0);
        // Contracting a loop is deletion.
        let with_loop = u(0, 1).direct_sum(&u(2, 3));
        let c = with_loop.contract(&set(4, &[0]));
        let d = with_loop.delete(&set(4, &[0]));
        assert!(c.same_labeled_matroid(&d));
    }

    #[test]
    fn contract_agrees_with_dual_delete_dual() {
        let k4 = crate::matroid::tests::k4();
        for mask in 0..64u64 {
            let x = ElementSet::from_bits(6, mask).unwrap();
            let direct = k4.contract(&x);
            let via_dual = k4.dual().delete(&x).dual();
            assert!(direct.same_labeled_matroid(&via_dual), "x = {x}");
        }
    }

    #[test]
    fn restriction_of_k4_triangle() {
        let k4 = crate::matroid::tests::k4();
        // Restricting to a triangle gives U_{2,3}.
        let tri = k4.restrict(&set(6, &[1, 2, 3]));
        assert!(tri.same_labeled_matroid(&u(2, 3)));
    }

    #[test]
    fn simplify_examples() {
        let (s, map) = u(1, 3).simplify();
        assert!(s.same_labeled_matroid(&u(1, 1)));
        assert_eq!(map.forward, vec![Some(0), None, None]);

        // Loops are removed too.
        let m = u(0, 1).direct_sum(&u(1, 2));
        let (s, map) = m.simplify();
        assert!(s.same_labeled_matroid(&u(1, 1)));
        assert_eq!(map.forward, vec![None, Some(0), None]);

        // A simple matroid is untouched.
        let k4 = crate::matroid::tests::k4();
        let (s, _) = k4.simplify();
        assert!(s.same_labeled_matroid(&k4));
    }

    #[test]
    fn cosimplify_example() {
        // All of U_{2,3} is one series class; contracting two of its three
        // elements leaves a loop, so co(U_{2,3}) = U_{0,1}.
        let (c, map) = u(2, 3).cosimplify();
        assert!(c.same_labeled_matroid(&u(0, 1)));
        assert_eq!(map.forward, vec![Some(0), None, None]);

        // Matches the dual identity on a non-uniform case.
        let k4 = crate::matroid::tests::k4();
        let path = k4.delete(&set(6, &[0])); // creates series pairs
        let (co, _) = path.cosimplify();
        let (si_dual, _) = path.dual().simplify();
        assert!(co.same_labeled_matroid(&si_dual.dual()));
    }

    #[test]
    fn direct_sum_blocks() {
        let m = u(1, 2).direct_sum(&u(2, 3));
        assert_eq!(m.ground_size(), 5);
        assert_eq!(m.full_rank(), 3);
        // Circuits are exactly the summands' circuits, shifted.
        let circuits = m.circuit_masks(5);
        assert_eq!(circuits, vec![0b00011, 0b11100]);
        // lambda across the seam is 0 (see connectivity): rank adds.
        assert_eq!(m.rank(&set(5, &[0, 1])), 1);
        assert_eq!(m.rank(&set(5, &[2, 3, 4])), 2);
    }

    #[test]
    fn two_sum_of_triangles_is_u34() {
        let t = u(2, 3);
        let m = t.two_sum(&t, 0, 0).unwrap();
        assert_eq!(m.ground_size(), 4);
        assert_eq!(m.full_rank(), 3);
        assert!(m.same_labeled_matroid(&u(3, 4)));
    }

    #[test]
    fn two_sum_circuit_law() {
        // Every circuit of the two-sum is accounted for by the law.
        let a = crate::matroid::tests::k4();
        let b = u(2, 3);
        let m = a.two_sum(&b, 1, 2).unwrap();
        assert_eq!(m.ground_size(), 6 + 3 - 2);
        assert_eq!(m.full_rank(), 3 + 2 - 1);
        assert!(validate_bases(m.ground_size(), &m.bases()));

        let mut expected: Vec<u64> = Vec::new();
        let s1 = |c: u64| compact_without(c & !(1u64 << 1), 1);
        let s2 = |c: u64| compact_without(c & !(1u64 << 2), 2) << 5;
        let (mut th1, mut th2) = (Vec::new(), Vec::new());
        for c in a.circuit_masks(6) {
            if c >> 1 & 1 == 1 {
                th1.push(s1(c));
            } else {
                expected.push(s1(c));
            }
        }
        for c in b.circuit_masks(3) {
            if c >> 2 & 1 == 1 {
                th2.push(s2(c));
            } else {
                expected.push(s2(c));
            }
        }
        for &c1 in &th1 {
            for &c2 in &th2 {
                expected.push(c1 | c2);
            }
        }
        // The law lists dependent sets whose minimal ones are the circuits.
        let minimal: Vec<u64> = expected
            .iter()
            .copied()
            .filter(|&c| expected.iter().all(|&d| d == c || c & d != d))
            .collect();
        let mut minimal_sorted = minimal;
        minimal_sorted.sort_by_key(|&c| (c.count_ones(), c));
        minimal_sorted.dedup();
        assert_eq!(m.circuit_masks(7), minimal_sorted);
    }

    #[test]
    fn two_sum_rejects_degenerate_basepoints() {
        let t = u(2, 3);
        let with_loop = u(0, 1).direct_sum(&u(2, 3));
        assert!(with_loop.two_sum(&t, 0, 0).is_err()); // loop basepoint
        let with_coloop = u(1, 1).direct_sum(&u(2, 3));
        assert!(with_coloop.two_sum(&t, 0, 0).is_err()); // coloop basepoint
        assert!(u(1, 2).two_sum(&t, 0, 0).is_err()); // too small
        assert!(t.two_sum(&t, 5, 0).is_err()); // out of range
    }

    #[test]
    fn relax_rim_of_k4() {
        let k4 = crate::matroid::tests::k4();
        let rim = set(6, &[0, 2, 4]);
        let relaxed = k4.relax_circuit_hyperplane(&rim).unwrap();
        assert_eq!(relaxed.basis_masks().len(), 17); // 16 + 1
        assert!(validate_bases(6, &relaxed.bases()));
        // Not a hyperplane: a spanning circuit of U_{2,3}.
        assert!(u(2, 3).relax_circuit_hyperplane(&ElementSet::full(3)).is_err());
        // Not a circuit at all.
        assert!(k4.relax_circuit_hyperplane(&set(6, &[0, 1])).is_err());
    }

    #[test]
    fn relabel_permutes_bases() {
        let m = u(1, 2).direct_sum(&u(1, 1));
        let swapped = m.relabel(&[2, 1, 0]);
        assert_eq!(m.rank(&set(3, &[0])), swapped.rank(&set(3, &[2])));
        assert!(!swapped.same_labeled_matroid(&m));
        assert!(swapped.relabel(&[2, 1, 0]).same_labeled_matroid(&m));
    }

    #[test]
    fn mask_helpers() {
        assert_eq!(compact_without(0b1101, 1), 0b111);
        assert_eq!(expand_mask(0b101, &[1, 3, 4]), 0b10010);
        assert_eq!(remap_mask(0b011, &[2, 0, 1]), 0b101);
    }
}
