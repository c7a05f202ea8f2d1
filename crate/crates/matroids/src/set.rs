//! Element sets over a fixed ground set `{0, .., n-1}`, stored as bitmasks.
//!
//! Ground sets are capped at 64 elements; search routines elsewhere impose
//! tighter caps. Sets carry their ground-set size so complements are
//! well-defined.

use std::fmt;

use crate::error::{input_err, Error, Result};

/// Hard cap on ground-set size for any construction.
pub const MAX_GROUND_SET: usize = 64;

/// A subset of the ground set `{0, .., n-1}` as a bitmask.
///
/// Invariant: no bit at position `>= n` is set.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    bits: u64,
    n: usize,
}

impl ElementSet {
    /// The empty subset of a ground set of size `n`.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_GROUND_SET, "ground set too large");
        ElementSet { bits: 0, n }
    }

    /// The full ground set of size `n`.
    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_GROUND_SET, "ground set too large");
        ElementSet { bits: mask_full(n), n }
    }

    /// Builds a set from indices, rejecting out-of-range elements.
    pub fn from_indices(n: usize, indices: &[usize]) -> Result<Self> {
        assert!(n <= MAX_GROUND_SET, "ground set too large");
        let mut bits = 0u64;
        for &i in indices {
            if i >= n {
                return input_err(format!("element {i} out of range for ground set of size {n}"));
            }
            bits |= 1 << i;
        }
        Ok(ElementSet { bits, n })
    }

    /// Wraps a raw mask. Bits at positions `>= n` must be clear.
    pub fn from_bits(n: usize, bits: u64) -> Result<Self> {
        assert!(n <= MAX_GROUND_SET, "ground set too large");
        if bits & !mask_full(n) != 0 {
            return input_err(format!("mask {bits:#x} has bits outside ground set of size {n}"));
        }
        Ok(ElementSet { bits, n })
    }

    pub(crate) fn from_bits_unchecked(n: usize, bits: u64) -> Self {
        debug_assert_eq!(bits & !mask_full(n), 0);
        ElementSet { bits, n }
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.n && self.bits >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        assert!(i < self.n, "element out of range");
        self.bits |= 1 << i;
    }

    pub fn remove(&mut self, i: usize) {
        assert!(i < self.n, "element out of range");
        self.bits &= !(1 << i);
    }

    pub fn with(&self, i: usize) -> Self {
        let mut s = *self;
        s.insert(i);
        s
    }

    pub fn without(&self, i: usize) -> Self {
        let mut s = *self;
        s.remove(i);
        s
    }

    pub fn union(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "ground sets differ");
        ElementSet { bits: self.bits | other.bits, n: self.n }
    }

    pub fn intersection(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "ground sets differ");
        ElementSet { bits: self.bits & other.bits, n: self.n }
    }

    pub fn difference(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "ground sets differ");
        ElementSet { bits: self.bits & !other.bits, n: self.n }
    }

    /// Complement within the ground set.
    pub fn complement(&self) -> Self {
        ElementSet { bits: !self.bits & mask_full(self.n), n: self.n }
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        assert_eq!(self.n, other.n, "ground sets differ");
        self.bits & !other.bits == 0
    }

    /// Ascending iterator over member indices.
    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        BitIter(self.bits)
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Display for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// All-ones mask for a ground set of size `n`.
pub(crate) fn mask_full(n: usize) -> u64 {
    debug_assert!(n <= MAX_GROUND_SET);
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

pub(crate) struct BitIter(pub u64);

impl Iterator for BitIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }
}

/// Iterates all `k`-element submasks of `{0, .., n-1}` in ascending numeric
/// order (Gosper's hack).
pub(crate) fn k_subsets(n: usize, k: usize) -> KSubsets {
    debug_assert!(n <= MAX_GROUND_SET);
    let first = if k == 0 {
        Some(0)
    } else if k <= n {
        Some(mask_full(k))
    } else {
        None
    };
    KSubsets { next: first, limit: mask_full(n), k }
}

pub(crate) struct KSubsets {
    next: Option<u64>,
    limit: u64,
    k: usize,
}

impl Iterator for KSubsets {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.next?;
        if cur & !self.limit != 0 {
            self.next = None;
            return None;
        }
        self.next = if self.k == 0 || cur == 0 {
            None
        } else {
            // Gosper: advance to the next mask with the same popcount.
            let x = cur & cur.wrapping_neg();
            let y = cur.wrapping_add(x);
            if y == 0 {
                None
            } else {
                Some((((cur & !y) / x) >> 1) | y)
            }
        };
        Some(cur)
    }
}

/// Iterates all submasks of `mask`, ascending, including 0 and `mask` itself.
pub(crate) fn submasks(mask: u64) -> Submasks {
    Submasks { mask, cur: Some(0) }
}

pub(crate) struct Submasks {
    mask: u64,
    cur: Option<u64>,
}

impl Iterator for Submasks {
    type Item = u64;

    fn next(&mut self) -> Option<u64> {
        let cur = self.cur?;
        self.cur = if cur == self.mask {
            None
        } else {
            // Next submask in ascending order: increment within `mask`.
            Some((cur.wrapping_sub(self.mask)) & self.mask)
        };
        Some(cur)
    }
}

/// An injective partial relabeling of element indices, recording where each
/// original element went (or that it was removed).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementMap {
    /// `forward[old] = Some(new)` for surviving elements, `None` for removed.
    pub forward: Vec<Option<usize>>,
    /// Human-readable provenance, e.g. "delete {2,4}".
    pub description: String,
}

impl ElementMap {
    /// Order-preserving compaction after removing `removed` from `{0,..,n-1}`.
    pub fn compaction(n: usize, removed: &ElementSet, description: impl Into<String>) -> Self {
        assert_eq!(removed.ground_size(), n);
        let mut forward = Vec::with_capacity(n);
        let mut next = 0;
        for i in 0..n {
            if removed.contains(i) {
                forward.push(None);
            } else {
                forward.push(Some(next));
                next += 1;
            }
        }
        ElementMap { forward, description: description.into() }
    }

    pub fn identity(n: usize) -> Self {
        ElementMap { forward: (0..n).map(Some).collect(), description: "identity".into() }
    }

    /// Applies `self` then `later`.
    pub fn then(&self, later: &ElementMap) -> ElementMap {
        let forward = self
            .forward
            .iter()
            .map(|step| step.and_then(|mid| later.forward.get(mid).copied().flatten()))
            .collect();
        ElementMap {
            forward,
            description: format!("{}; {}", self.description, later.description),
        }
    }

    pub fn apply(&self, old: usize) -> Option<usize> {
        self.forward.get(old).copied().flatten()
    }

    /// Pushes a set through the map; removed members are dropped.
    pub fn map_set(&self, set: &ElementSet, new_n: usize) -> ElementSet {
        let mut bits = 0u64;
        for i in set.iter() {
            if let Some(j) = self.apply(i) {
                assert!(j < new_n);
                bits |= 1 << j;
            }
        }
        ElementSet::from_bits_unchecked(new_n, bits)
    }

    fn check_injective(&self) -> bool {
        let mut seen = 0u64;
        for target in self.forward.iter().flatten() {
            if *target >= MAX_GROUND_SET || seen >> target & 1 == 1 {
                return false;
            }
            seen |= 1 << target;
        }
        true
    }
}

/// Validates injectivity; maps produced by this crate always pass.
pub fn validate_element_map(map: &ElementMap) -> std::result::Result<(), Error> {
    if map.check_injective() {
        Ok(())
    } else {
        Err(Error::Input("element map is not injective".into()))
    }
}

/// Non-loop classes of a pairwise-dependence relation (parallel or series),
/// with the degenerate elements (loops or coloops) reported separately.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementPartition {
    /// Classes sorted by their minimum element; singletons included.
    pub classes: Vec<ElementSet>,
    /// Elements excluded from the relation (loops for parallel classes,
    /// coloops for series classes).
    pub degenerate: ElementSet,
}
