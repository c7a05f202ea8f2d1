//! The central matroid type: four representations behind one rank oracle.
//!
//! Ground sets are `{0, .., n-1}`. Every representation answers rank queries;
//! for `n <= RANK_TABLE_MAX` a full rank table over all subsets is built
//! lazily and shared, so repeated connectivity scans are table lookups.
//! Derived matroids produced elsewhere in the crate are materialized in the
//! bases representation.

use std::sync::OnceLock;

use crate::error::{input_err, Result};
use crate::set::{k_subsets, mask_full, submasks, ElementPartition, ElementSet, MAX_GROUND_SET};

/// Largest ground set for which a full rank table is precomputed.
pub const RANK_TABLE_MAX: usize = 20;

/// Prime fields supported by the linear representation.
pub const SUPPORTED_PRIMES: [u8; 4] = [2, 3, 5, 7];

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Rep {
    /// Nonempty, equal-size basis family satisfying basis exchange.
    Bases { rank: usize, bases: Vec<u64> },
    /// Columns of an `rows x n` matrix over GF(p).
    Linear { p: u8, rows: Vec<Vec<u8>> },
    /// Edge list of a multigraph; element `i` is edge `i`. Self-loops allowed.
    Graphic { vertices: usize, edges: Vec<(usize, usize)> },
    /// All subsets of size at most `r` independent.
    Uniform { r: usize },
}

#[derive(Debug)]
pub struct Matroid {
    n: usize,
    rep: Rep,
    rank_table: OnceLock<Vec<u8>>,
    full_rank: OnceLock<usize>,
    bases_cache: OnceLock<Vec<u64>>,
}

impl Clone for Matroid {
    fn clone(&self) -> Self {
        Matroid {
            n: self.n,
            rep: self.rep.clone(),
            rank_table: self.rank_table.clone(),
            full_rank: self.full_rank.clone(),
            bases_cache: self.bases_cache.clone(),
        }
    }
}

impl Matroid {
    /// Builds a matroid from an explicit basis family, validating the
    /// exchange axiom.
    pub fn from_bases(n: usize, bases: Vec<ElementSet>) -> Result<Matroid> {
        let masks: Vec<u64> = bases
            .iter()
            .map(|b| {
                if b.ground_size() != n {
                    input_err(format!("basis {b} not over ground set of size {n}"))
                } else {
                    Ok(b.bits())
                }
            })
            .collect::<Result<_>>()?;
        Self::from_basis_masks(n, masks)
    }

    pub(crate) fn from_basis_masks(n: usize, mut masks: Vec<u64>) -> Result<Matroid> {
        if n > MAX_GROUND_SET {
            return crate::error::capacity_err(format!(
                "ground set of size {n} exceeds the limit of {MAX_GROUND_SET}"
            ));
        }
        masks.sort_unstable();
        masks.dedup();
        if let Some(reason) = basis_family_defect(n, &masks) {
            return input_err(format!("not a basis family: {reason}"));
        }
        let rank = masks[0].count_ones() as usize;
        Ok(Matroid::new(n, Rep::Bases { rank, bases: masks }))
    }

    /// Trusted constructor for callers that guarantee a valid family
    /// (minors, duals, extensions). Only the cheap axioms are re-checked;
    /// exchange is guaranteed by the construction.
    pub(crate) fn from_basis_masks_unchecked(n: usize, mut masks: Vec<u64>) -> Matroid {
        masks.sort_unstable();
        masks.dedup();
        debug_assert!(!masks.is_empty());
        debug_assert!(masks.iter().all(|m| m.count_ones() == masks[0].count_ones()));
        debug_assert!(masks.iter().all(|&m| m & !mask_full(n) == 0));
        let rank = masks[0].count_ones() as usize;
        Matroid::new(n, Rep::Bases { rank, bases: masks })
    }

    /// Matrix over GF(p) given as `rows` of length `n`; element `j` is column `j`.
    pub fn from_linear(p: u8, rows: Vec<Vec<u8>>, n: usize) -> Result<Matroid> {
        if !SUPPORTED_PRIMES.contains(&p) {
            return input_err(format!("unsupported field GF({p})"));
        }
        if n > MAX_GROUND_SET {
            return crate::error::capacity_err(format!(
                "ground set of size {n} exceeds the limit of {MAX_GROUND_SET}"
            ));
        }
        for row in &rows {
            if row.len() != n {
                return input_err(format!("matrix row has {} entries, expected {n}", row.len()));
            }
            if row.iter().any(|&x| x >= p) {
                return input_err(format!("matrix entry not reduced mod {p}"));
            }
        }
        Ok(Matroid::new(n, Rep::Linear { p, rows }))
    }

    /// Cycle matroid of a multigraph on `vertices` vertices.
    pub fn from_graph(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Matroid> {
        let n = edges.len();
        if n > MAX_GROUND_SET {
            return crate::error::capacity_err(format!(
                "ground set of size {n} exceeds the limit of {MAX_GROUND_SET}"
            ));
        }
        for &(u, v) in &edges {
            if u >= vertices || v >= vertices {
                return input_err(format!("edge ({u},{v}) has endpoint outside 0..{vertices}"));
            }
        }
        Ok(Matroid::new(n, Rep::Graphic { vertices, edges }))
    }

    /// The uniform matroid U_{r,n}.
    pub fn uniform(r: usize, n: usize) -> Result<Matroid> {
        if r > n {
            return input_err(format!("uniform rank {r} exceeds ground set size {n}"));
        }
        if n > MAX_GROUND_SET {
            return crate::error::capacity_err(format!(
                "ground set of size {n} exceeds the limit of {MAX_GROUND_SET}"
            ));
        }
        Ok(Matroid::new(n, Rep::Uniform { r }))
    }

    pub(crate) fn new(n: usize, rep: Rep) -> Matroid {
        Matroid {
            n,
            rep,
            rank_table: OnceLock::new(),
            full_rank: OnceLock::new(),
            bases_cache: OnceLock::new(),
        }
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn rep(&self) -> &Rep {
        &self.rep
    }

    pub fn ground_set(&self) -> ElementSet {
        ElementSet::full(self.n)
    }

    /// Rank of the whole matroid.
    pub fn full_rank(&self) -> usize {
        *self.full_rank.get_or_init(|| match &self.rep {
            Rep::Bases { rank, .. } => *rank,
            Rep::Uniform { r } => *r,
            _ => self.rank_mask(mask_full(self.n)),
        })
    }

    /// Rank of a subset.
    pub fn rank(&self, x: &ElementSet) -> usize {
        assert_eq!(x.ground_size(), self.n, "set not over this ground set");
        self.rank_mask(x.bits())
    }

    /// Corank: r*(X) = |X| + r(E-X) - r(M).
    pub fn corank(&self, x: &ElementSet) -> usize {
        assert_eq!(x.ground_size(), self.n, "set not over this ground set");
        self.corank_mask(x.bits())
    }

    /// Closure: X together with every element whose addition keeps the rank.
    pub fn closure(&self, x: &ElementSet) -> ElementSet {
        assert_eq!(x.ground_size(), self.n, "set not over this ground set");
        ElementSet::from_bits_unchecked(self.n, self.closure_mask(x.bits()))
    }

    /// Coclosure: closure in the dual, computed through the corank.
    pub fn coclosure(&self, x: &ElementSet) -> ElementSet {
        assert_eq!(x.ground_size(), self.n, "set not over this ground set");
        ElementSet::from_bits_unchecked(self.n, self.coclosure_mask(x.bits()))
    }

    pub(crate) fn rank_mask(&self, mask: u64) -> usize {
        debug_assert_eq!(mask & !mask_full(self.n), 0);
        if self.n <= RANK_TABLE_MAX {
            self.table()[mask as usize] as usize
        } else {
            self.rank_mask_direct(mask)
        }
    }

    pub(crate) fn corank_mask(&self, mask: u64) -> usize {
        let co = !mask & mask_full(self.n);
        mask.count_ones() as usize + self.rank_mask(co) - self.full_rank()
    }

    pub(crate) fn closure_mask(&self, mask: u64) -> u64 {
        let r = self.rank_mask(mask);
        let mut out = mask;
        for e in crate::set::BitIter(!mask & mask_full(self.n)) {
            if self.rank_mask(mask | 1 << e) == r {
                out |= 1 << e;
            }
        }
        out
    }

    pub(crate) fn coclosure_mask(&self, mask: u64) -> u64 {
        let r = self.corank_mask(mask);
        let mut out = mask;
        for e in crate::set::BitIter(!mask & mask_full(self.n)) {
            if self.corank_mask(mask | 1 << e) == r {
                out |= 1 << e;
            }
        }
        out
    }

    /// Shared rank table over all `2^n` subsets; only for `n <= RANK_TABLE_MAX`.
    pub(crate) fn table(&self) -> &[u8] {
        debug_assert!(self.n <= RANK_TABLE_MAX);
        self.rank_table.get_or_init(|| self.build_table())
    }

    fn build_table(&self) -> Vec<u8> {
        let size = 1usize << self.n;
        match &self.rep {
            Rep::Bases { bases, .. } => {
                // Mark independent sets (subsets of bases), then take the
                // largest independent subset by a one-pass DP.
                let mut indep = vec![false; size];
                for &b in bases {
                    for s in submasks(b) {
                        indep[s as usize] = true;
                    }
                }
                let mut table = vec![0u8; size];
                for mask in 1..size as u64 {
                    if indep[mask as usize] {
                        table[mask as usize] = mask.count_ones() as u8;
                    } else {
                        let mut best = 0u8;
                        for e in crate::set::BitIter(mask) {
                            best = best.max(table[(mask & !(1 << e)) as usize]);
                        }
                        table[mask as usize] = best;
                    }
                }
                table
            }
            _ => (0..size as u64).map(|m| self.rank_mask_direct(m) as u8).collect(),
        }
    }

    /// Representation-specific rank, no table.
    fn rank_mask_direct(&self, mask: u64) -> usize {
        match &self.rep {
            Rep::Uniform { r } => (mask.count_ones() as usize).min(*r),
            Rep::Bases { bases, .. } => bases
                .iter()
                .map(|&b| (b & mask).count_ones() as usize)
                .max()
                .unwrap_or(0),
            Rep::Graphic { vertices, edges } => graphic_rank(*vertices, edges, mask),
            Rep::Linear { p, rows } => linear_rank(*p, rows, mask),
        }
    }

    /// The basis family as bitmasks, sorted ascending; enumerated on demand
    /// for non-bases representations.
    pub(crate) fn basis_masks(&self) -> &[u64] {
        self.bases_cache.get_or_init(|| match &self.rep {
            Rep::Bases { bases, .. } => bases.clone(),
            _ => {
                let r = self.full_rank();
                k_subsets(self.n, r).filter(|&m| self.rank_mask(m) == r).collect()
            }
        })
    }

    /// The basis family as element sets, sorted ascending by mask.
    pub fn bases(&self) -> Vec<ElementSet> {
        self.basis_masks()
            .iter()
            .map(|&m| ElementSet::from_bits_unchecked(self.n, m))
            .collect()
    }

    pub fn is_basis(&self, x: &ElementSet) -> bool {
        x.len() == self.full_rank() && self.rank(x) == x.len()
    }

    pub fn is_independent(&self, x: &ElementSet) -> bool {
        self.rank(x) == x.len()
    }

    /// Rebuilds this matroid in the bases representation (same labels).
    pub fn to_bases_rep(&self) -> Matroid {
        let m = Matroid::new(
            self.n,
            Rep::Bases { rank: self.full_rank(), bases: self.basis_masks().to_vec() },
        );
        if let Some(t) = self.rank_table.get() {
            let _ = m.rank_table.set(t.clone());
        }
        m
    }

    /// Labeled equality: same ground set and same basis family, regardless of
    /// representation.
    pub fn same_labeled_matroid(&self, other: &Matroid) -> bool {
        self.n == other.n && self.basis_masks() == other.basis_masks()
    }

    pub fn loops(&self) -> ElementSet {
        let mut bits = 0u64;
        for e in 0..self.n {
            if self.rank_mask(1 << e) == 0 {
                bits |= 1 << e;
            }
        }
        ElementSet::from_bits_unchecked(self.n, bits)
    }

    pub fn coloops(&self) -> ElementSet {
        let full = mask_full(self.n);
        let r = self.full_rank();
        let mut bits = 0u64;
        if r > 0 {
            for e in 0..self.n {
                if self.rank_mask(full & !(1 << e)) == r - 1 {
                    bits |= 1 << e;
                }
            }
        }
        ElementSet::from_bits_unchecked(self.n, bits)
    }

    /// No loops and no two-element circuits.
    pub fn is_simple(&self) -> bool {
        if !self.loops().is_empty() {
            return false;
        }
        for f in 1..self.n {
            for e in 0..f {
                if self.rank_mask(1 << e | 1 << f) < 2 {
                    return false;
                }
            }
        }
        true
    }

    /// Circuits of size at most `max_size`, sorted by (size, mask).
    pub fn circuits(&self, max_size: usize) -> Vec<ElementSet> {
        self.circuit_masks(max_size)
            .into_iter()
            .map(|m| ElementSet::from_bits_unchecked(self.n, m))
            .collect()
    }

    pub(crate) fn circuit_masks(&self, max_size: usize) -> Vec<u64> {
        let mut out = Vec::new();
        for size in 1..=max_size.min(self.n) {
            for mask in k_subsets(self.n, size) {
                if self.is_circuit_mask(mask) {
                    out.push(mask);
                }
            }
        }
        out
    }

    /// X is a circuit iff r(X) = |X| - 1 and every one-element deletion is
    /// independent.
    pub(crate) fn is_circuit_mask(&self, mask: u64) -> bool {
        let size = mask.count_ones() as usize;
        if size == 0 || self.rank_mask(mask) != size - 1 {
            return false;
        }
        crate::set::BitIter(mask).all(|e| self.rank_mask(mask & !(1 << e)) == size - 1)
    }

    /// Cocircuits of size at most `max_size` (circuits of the dual), computed
    /// through the corank; sorted by (size, mask).
    pub fn cocircuits(&self, max_size: usize) -> Vec<ElementSet> {
        self.cocircuit_masks(max_size)
            .into_iter()
            .map(|m| ElementSet::from_bits_unchecked(self.n, m))
            .collect()
    }

    pub(crate) fn cocircuit_masks(&self, max_size: usize) -> Vec<u64> {
        let mut out = Vec::new();
        for size in 1..=max_size.min(self.n) {
            for mask in k_subsets(self.n, size) {
                if self.is_cocircuit_mask(mask) {
                    out.push(mask);
                }
            }
        }
        out
    }

    pub(crate) fn is_cocircuit_mask(&self, mask: u64) -> bool {
        let size = mask.count_ones() as usize;
        if size == 0 || self.corank_mask(mask) != size - 1 {
            return false;
        }
        crate::set::BitIter(mask).all(|e| self.corank_mask(mask & !(1 << e)) == size - 1)
    }

    /// The unique circuit inside `basis + e`, for `e` outside the basis.
    pub fn fundamental_circuit(&self, basis: &ElementSet, e: usize) -> Result<ElementSet> {
        if !self.is_basis(basis) {
            return input_err(format!("{basis} is not a basis"));
        }
        if e >= self.n || basis.contains(e) {
            return input_err(format!("element {e} is not outside the basis"));
        }
        let b = basis.bits();
        let r = self.full_rank();
        let mut circuit = 1u64 << e;
        for x in crate::set::BitIter(b) {
            // x is in the circuit iff swapping it for e preserves a basis.
            if self.rank_mask(b & !(1 << x) | 1 << e) == r {
                circuit |= 1 << x;
            }
        }
        Ok(ElementSet::from_bits_unchecked(self.n, circuit))
    }

    /// Parallel classes among non-loops; loops reported separately.
    pub fn parallel_classes(&self) -> ElementPartition {
        let loops = self.loops();
        let mut assigned = loops.bits();
        let mut classes = Vec::new();
        for e in 0..self.n {
            if assigned >> e & 1 == 1 {
                continue;
            }
            let mut class = 1u64 << e;
            for f in e + 1..self.n {
                if assigned >> f & 1 == 0 && self.rank_mask(1 << e | 1 << f) == 1 {
                    class |= 1 << f;
                }
            }
            assigned |= class;
            classes.push(ElementSet::from_bits_unchecked(self.n, class));
        }
        ElementPartition { classes, degenerate: loops }
    }

    /// Series classes: parallel classes of the dual; coloops reported
    /// separately.
    pub fn series_classes(&self) -> ElementPartition {
        let coloops = self.coloops();
        let mut assigned = coloops.bits();
        let mut classes = Vec::new();
        for e in 0..self.n {
            if assigned >> e & 1 == 1 {
                continue;
            }
            let mut class = 1u64 << e;
            for f in e + 1..self.n {
                if assigned >> f & 1 == 0 && self.corank_mask(1 << e | 1 << f) == 1 {
                    class |= 1 << f;
                }
            }
            assigned |= class;
            classes.push(ElementSet::from_bits_unchecked(self.n, class));
        }
        ElementPartition { classes, degenerate: coloops }
    }
}

/// Checks the basis-family axioms; returns a defect description or None.
/// Expects `masks` sorted and deduplicated.
pub(crate) fn basis_family_defect(n: usize, masks: &[u64]) -> Option<String> {
    if masks.is_empty() {
        return Some("family is empty".into());
    }
    let full = mask_full(n);
    if masks.iter().any(|&m| m & !full != 0) {
        return Some("member has elements outside the ground set".into());
    }
    let size = masks[0].count_ones();
    if masks.iter().any(|&m| m.count_ones() != size) {
        return Some("members have unequal sizes".into());
    }
    // Exchange: for every A, B and a in A-B there is b in B-A with A-a+b in
    // the family. Membership via hash set.
    let member: std::collections::HashSet<u64> = masks.iter().copied().collect();
    for &a in masks {
        for &b in masks {
            if a == b {
                continue;
            }
            for x in crate::set::BitIter(a & !b) {
                let found = crate::set::BitIter(b & !a)
                    .any(|y| member.contains(&(a & !(1 << x) | 1 << y)));
                if !found {
                    return Some(format!(
                        "exchange fails for A={a:#b}, B={b:#b}, a={x}"
                    ));
                }
            }
        }
    }
    None
}

/// Validates a basis family over `{0,..,n-1}`: nonempty, equal sizes,
/// exchange axiom.
pub fn validate_bases(n: usize, family: &[ElementSet]) -> bool {
    if family.iter().any(|s| s.ground_size() != n) {
        return false;
    }
    let mut masks: Vec<u64> = family.iter().map(|s| s.bits()).collect();
    masks.sort_unstable();
    masks.dedup();
    basis_family_defect(n, &masks).is_none()
}

fn graphic_rank(vertices: usize, edges: &[(usize, usize)], mask: u64) -> usize {
    // Rank = edges that join previously distinct components.
    let mut parent: Vec<usize> = (0..vertices).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut rank = 0;
    for e in crate::set::BitIter(mask) {
        let (u, v) = edges[e];
        let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
        if ru != rv {
            parent[ru] = rv;
            rank += 1;
        }
    }
    rank
}

fn linear_rank(p: u8, rows: &[Vec<u8>], mask: u64) -> usize {
    // Gaussian elimination on the selected columns over GF(p).
    let cols: Vec<usize> = crate::set::BitIter(mask).collect();
    if cols.is_empty() || rows.is_empty() {
        return 0;
    }
    let p = p as u16;
    let mut mat: Vec<Vec<u16>> = rows
        .iter()
        .map(|row| cols.iter().map(|&c| row[c] as u16).collect())
        .collect();
    let (nrows, ncols) = (mat.len(), cols.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..nrows).find(|&r| mat[r][col] % p != 0) else {
            continue;
        };
        mat.swap(rank, pivot);
        let inv = mod_inverse(mat[rank][col] % p, p);
        for x in mat[rank].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..nrows {
            if r != rank && mat[r][col] % p != 0 {
                let factor = mat[r][col] % p;
                for c in 0..ncols {
                    mat[r][c] = (mat[r][c] + (p - factor) * mat[rank][c]) % p;
                }
            }
        }
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

fn mod_inverse(a: u16, p: u16) -> u16 {
    // Fermat: a^(p-2) mod p for prime p.
    let mut result = 1u16;
    let mut base = a % p;
    let mut exp = p - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    result
}
