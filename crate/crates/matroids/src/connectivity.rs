//! Connectivity: the connectivity function lambda, k-separation search,
//! Tutte n-connectivity, and the derived predicates (minimally and
//! super-minimally k-connected, brittle) plus triangle/triad/essential
//! element enumeration.
//!
//! Separation searches are exhaustive bitmask scans. Each bipartition
//! {X, E-X} is visited exactly once by requiring element 0 in X, in
//! ascending mask order, so the first hit is the lexicographically least
//! witness. Searches are capped at `SEARCH_MAX` elements.

use crate::error::{capacity_err, input_err, Result};
use crate::matroid::Matroid;
use crate::set::ElementSet;
use serde::Serialize;

/// Ground-set cap for exhaustive separation searches.
pub const SEARCH_MAX: usize = 24;

/// A k-separation {X, E-X}: both sides have at least `order` elements and
/// lambda(X) <= order - 1. `side` is the half containing element 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationWitness {
    pub side: ElementSet,
    pub order: usize,
    pub lambda_value: usize,
    /// Both sides have at least `order + 1` elements.
    pub nonminimal: bool,
}

impl SeparationWitness {
    /// Recomputes every field against `m`.
    pub fn verify(&self, m: &Matroid) -> bool {
        let min_side = self.side.len().min(m.ground_size() - self.side.len());
        self.lambda_value == m.lambda(&self.side)
            && self.lambda_value + 1 <= self.order
            && min_side >= self.order
            && self.nonminimal == (min_side >= self.order + 1)
    }
}

impl Matroid {
    /// The connectivity function lambda(X) = r(X) + r(E-X) - r(M).
    /// Symmetric in X and E-X, and invariant under duality.
    pub fn lambda(&self, x: &ElementSet) -> usize {
        assert_eq!(x.ground_size(), self.ground_size());
        self.lambda_mask(x.bits())
    }

    pub(crate) fn lambda_mask(&self, mask: u64) -> usize {
        let full = crate::set::mask_full(self.n());
        self.rank_mask(mask) + self.rank_mask(full & !mask) - self.full_rank()
    }

    fn n(&self) -> usize {
        self.ground_size()
    }

    fn ensure_search_size(&self) -> Result<()> {
        if self.n() > SEARCH_MAX {
            return capacity_err(format!(
                "separation search supports at most {SEARCH_MAX} elements, got {}",
                self.n()
            ));
        }
        Ok(())
    }

    /// Finds a k-separation, or a nonminimal one (both sides > k) when
    /// `require_nonminimal` is set. Returns the lexicographically least
    /// witness: the scan fixes element 0 on `side` and takes ascending mask
    /// order.
    pub fn find_k_separation(
        &self,
        k: usize,
        require_nonminimal: bool,
    ) -> Result<Option<SeparationWitness>> {
        if k < 1 {
            return input_err("separation order k must be at least 1");
        }
        self.ensure_search_size()?;
        let n = self.n();
        let min_side = if require_nonminimal { k + 1 } else { k };
        if n < 2 * min_side {
            return Ok(None);
        }
        for half in crate::set::submasks(crate::set::mask_full(n) >> 1) {
            let mask = half << 1 | 1; // all masks containing element 0, ascending
            let size = mask.count_ones() as usize;
            if size < min_side || n - size < min_side {
                continue;
            }
            let lambda = self.lambda_mask(mask);
            if lambda + 1 <= k {
                return Ok(Some(SeparationWitness {
                    side: ElementSet::from_bits_unchecked(n, mask),
                    order: k,
                    lambda_value: lambda,
                    nonminimal: size.min(n - size) >= k + 1,
                }));
            }
        }
        Ok(None)
    }

    /// Tutte n-connectivity: no j-separation exists for any j < n_level.
    /// Matroids too small to carry such separations pass vacuously.
    pub fn is_k_connected(&self, n_level: usize) -> Result<bool> {
        if n_level < 2 {
            return input_err("connectivity level must be at least 2");
        }
        self.ensure_search_size()?;
        Ok(self.is_k_connected_mask(crate::set::mask_full(self.n()), n_level))
    }

    /// n-connectivity of the restriction to `smask`, evaluated in place.
    ///
    /// A j-separation (j < n_level) exists iff some bipartition {A, S-A} has
    /// lambda(A) <= n_level - 2 and lambda(A) < min(|A|, |S-A|): given such
    /// an A, j = min(|A|, |S-A|, n_level - 1) works, and conversely any
    /// j-separation satisfies both bounds.
    pub(crate) fn is_k_connected_mask(&self, smask: u64, n_level: usize) -> bool {
        debug_assert!(n_level >= 2);
        let s = smask.count_ones() as usize;
        if s < 2 {
            return true;
        }
        let low = 1u64 << smask.trailing_zeros();
        let rs = self.rank_mask(smask);
        for sub in crate::set::submasks(smask & !low) {
            let a = sub | low;
            if a == smask {
                continue;
            }
            let lambda = self.rank_mask(a) + self.rank_mask(smask & !a) - rs;
            let min_side = (a.count_ones() as usize).min(s - a.count_ones() as usize);
            if lambda + 2 <= n_level && lambda < min_side {
                return false;
            }
        }
        true
    }

    /// n_level-connected, and no single-element deletion is.
    pub fn is_minimally_k_connected(&self, n_level: usize) -> Result<bool> {
        if !self.is_k_connected(n_level)? {
            return Ok(false);
        }
        for e in 0..self.n() {
            let single = ElementSet::from_bits_unchecked(self.n(), 1 << e);
            if self.delete(&single).is_k_connected(n_level)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// k-connected, and no proper restriction with at least 2k-2 elements is
    /// k-connected.
    pub fn is_super_minimally_k_connected(&self, k: usize) -> Result<bool> {
        if !self.is_k_connected(k)? {
            return Ok(false);
        }
        let n = self.n();
        let floor = 2 * k - 2;
        for smask in 1..crate::set::mask_full(n) {
            let size = smask.count_ones() as usize;
            if size < floor {
                continue;
            }
            // A 3-connected matroid with >= 4 elements is simple; skip
            // restrictions that cannot qualify.
            if k == 3 && size >= 4 && !self.simple_within(smask) {
                continue;
            }
            if self.is_k_connected_mask(smask, k) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// No loop and no parallel pair inside `smask`.
    fn simple_within(&self, smask: u64) -> bool {
        let elems: Vec<usize> = crate::set::BitIter(smask).collect();
        for (i, &e) in elems.iter().enumerate() {
            if self.rank_mask(1 << e) == 0 {
                return false;
            }
            for &f in &elems[i + 1..] {
                if self.rank_mask(1 << e | 1 << f) < 2 {
                    return false;
                }
            }
        }
        true
    }

    /// No restriction with at least four elements is 3-connected. Defined
    /// for simple matroids only; loops or parallel pairs are an input error.
    pub fn is_brittle(&self) -> Result<bool> {
        if !self.is_simple() {
            return input_err("brittleness is defined for simple matroids only");
        }
        self.ensure_search_size()?;
        let n = self.n();
        for smask in 1..=crate::set::mask_full(n) {
            if (smask.count_ones() as usize) >= 4 && self.is_k_connected_mask(smask, 3) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Circuits of size exactly 3.
    pub fn triangles(&self) -> Vec<ElementSet> {
        self.circuits(3).into_iter().filter(|c| c.len() == 3).collect()
    }

    /// Cocircuits of size exactly 3.
    pub fn triads(&self) -> Vec<ElementSet> {
        self.cocircuits(3).into_iter().filter(|c| c.len() == 3).collect()
    }

    /// Elements e whose deletion and contraction both break 3-connectivity.
    /// Defined for 3-connected matroids; anything else is an input error.
    pub fn essential_elements(&self) -> Result<ElementSet> {
        if !self.is_k_connected(3)? {
            return input_err("essential elements are defined for 3-connected matroids");
        }
        let mut bits = 0u64;
        for e in 0..self.n() {
            if self.element_is_essential(e)? {
                bits |= 1 << e;
            }
        }
        Ok(ElementSet::from_bits_unchecked(self.n(), bits))
    }

    fn element_is_essential(&self, e: usize) -> Result<bool> {
        let single = ElementSet::from_bits_unchecked(self.n(), 1 << e);
        Ok(!self.delete(&single).is_k_connected(3)?
            && !self.contract(&single).is_k_connected(3)?)
    }

    /// Number of elements lying in at least one triad.
    pub fn elements_in_triads(&self) -> usize {
        let mut bits = 0u64;
        for t in self.triads() {
            bits |= t.bits();
        }
        bits.count_ones() as usize
    }
}

/// Property summary of one matroid, as carried by census records.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyFlags {
    pub is_3connected: bool,
    pub is_min_3connected: bool,
    pub is_sm_3connected: bool,
    /// False for non-simple matroids (brittleness needs simplicity).
    pub is_brittle: bool,
    pub triangle_count: usize,
    pub triad_count: usize,
    pub elements_in_triads: usize,
    /// Elements whose deletion and contraction both break 3-connectivity,
    /// counted mechanically whether or not the matroid is 3-connected.
    pub essential_count: usize,
}

impl PropertyFlags {
    pub fn compute(m: &Matroid) -> Result<PropertyFlags> {
        let is_3c = m.is_k_connected(3)?;
        let mut essential = 0;
        for e in 0..m.ground_size() {
            if m.element_is_essential(e)? {
                essential += 1;
            }
        }
        Ok(PropertyFlags {
            is_3connected: is_3c,
            is_min_3connected: m.is_minimally_k_connected(3)?,
            is_sm_3connected: m.is_super_minimally_k_connected(3)?,
            is_brittle: m.is_simple() && m.is_brittle()?,
            triangle_count: m.triangles().len(),
            triad_count: m.triads().len(),
            elements_in_triads: m.elements_in_triads(),
            essential_count: essential,
        })
    }
}
