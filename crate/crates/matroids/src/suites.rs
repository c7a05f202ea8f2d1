//! Verification suites: each suite checks one structural statement about
//! 3-connectivity, super-minimality, brittleness, or wheel/whirl growth
//! against the exhaustive small-matroid census plus larger wheels and whirls.
//!
//! A suite reports how many instances it checked and how many failed, and
//! produces one counterexample line per failure so a regression is
//! reproducible from the output alone.

use crate::census::{census_with_matroids, CensusRecord};
use crate::connectivity::PropertyFlags;
use crate::construct::{recognize_wheel_or_whirl, wheel, whirl, WheelKind};
use crate::error::{input_err, Result};
use crate::iso::{canonical_form, CanonicalForm};
use crate::matroid::Matroid;
use crate::set::ElementSet;
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeSet;
use std::time::Instant;

pub const DEFAULT_NMAX: usize = 8;
pub const DEFAULT_KMAX: usize = 7;

/// Shared inputs for all suites: the census up to `n_max` elements and the
/// spoke-count ceiling `k_max` for wheels and whirls built outside it.
pub struct Corpus {
    pub n_max: usize,
    pub k_max: usize,
    pub classes: Vec<(CensusRecord, Matroid)>,
}

/// A matroid under test plus the label used in counterexample lines.
struct Instance {
    label: String,
    matroid: Matroid,
}

impl Corpus {
    pub fn build(n_max: usize, k_max: usize) -> Result<Corpus> {
        if !(4..=8).contains(&n_max) {
            return input_err(format!("corpus size {n_max} outside supported range 4..=8"));
        }
        if !(3..=9).contains(&k_max) {
            return input_err(format!("wheel ceiling {k_max} outside supported range 3..=9"));
        }
        Ok(Corpus { n_max, k_max, classes: census_with_matroids(n_max)? })
    }

    fn census_instances<F>(&self, keep: F) -> Vec<Instance>
    where
        F: Fn(&CensusRecord) -> bool,
    {
        self.classes
            .iter()
            .filter(|(rec, _)| rec.n >= 1 && keep(rec))
            .map(|(rec, m)| Instance { label: rec.cf.to_string(), matroid: m.clone() })
            .collect()
    }

    /// Wheels and whirls with more elements than the census covers, with at
    /// most `k_cap` spokes. Both families are 3-connected and super-minimally
    /// 3-connected at every size generated here.
    fn large_wheels_whirls(&self, k_cap: usize) -> Result<Vec<Instance>> {
        let mut out = Vec::new();
        for k in 3..=k_cap {
            if 2 * k <= self.n_max {
                continue;
            }
            out.push(Instance { label: format!("wheel({k})"), matroid: wheel(k)?.0 });
            out.push(Instance { label: format!("whirl({k})"), matroid: whirl(k)?.0 });
        }
        Ok(out)
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checked: usize,
    pub fails: usize,
    pub elapsed_s: f64,
    pub verdict: String,
}

#[derive(Debug, Clone)]
pub struct SuiteOutcome {
    pub report: SuiteReport,
    /// One line per failed check.
    pub counterexamples: Vec<String>,
}

/// Per-worker tally; suites merge tallies in input order so output is
/// deterministic regardless of thread count.
#[derive(Default)]
struct Tally {
    checked: usize,
    lines: Vec<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, line: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.lines.push(line());
        }
    }

    fn merge(parts: Vec<Tally>) -> Tally {
        let mut total = Tally::default();
        for p in parts {
            total.checked += p.checked;
            total.lines.extend(p.lines);
        }
        total
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Table1,
    Prop11,
    Density,
    Lemma31,
    Lemma32,
    WheelGrowth,
    Brittle,
    Triads,
    Background,
    Coverage,
}

pub const ALL_SUITES: &[Suite] = &[
    Suite::Table1,
    Suite::Prop11,
    Suite::Density,
    Suite::Lemma31,
    Suite::Lemma32,
    Suite::WheelGrowth,
    Suite::Brittle,
    Suite::Triads,
    Suite::Background,
    Suite::Coverage,
];

impl Suite {
    pub fn name(&self) -> &'static str {
        match self {
            Suite::Table1 => "table1",
            Suite::Prop11 => "prop11",
            Suite::Density => "density",
            Suite::Lemma31 => "lemma31",
            Suite::Lemma32 => "lemma32",
            Suite::WheelGrowth => "wheelgrowth",
            Suite::Brittle => "brittle",
            Suite::Triads => "triads",
            Suite::Background => "background",
            Suite::Coverage => "coverage",
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = crate::error::Error;
    fn from_str(s: &str) -> Result<Suite> {
        ALL_SUITES
            .iter()
            .copied()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| {
                crate::error::Error::Input(format!(
                    "unknown suite {s:?}; expected all or one of {}",
                    ALL_SUITES.iter().map(|s| s.name()).collect::<Vec<_>>().join(", ")
                ))
            })
    }
}

pub fn run_suite(suite: Suite, corpus: &Corpus) -> Result<SuiteOutcome> {
    let start = Instant::now();
    let tally = match suite {
        Suite::Table1 => table1(corpus)?,
        Suite::Prop11 => prop11(corpus)?,
        Suite::Density => density(corpus)?,
        Suite::Lemma31 => lemma31(corpus)?,
        Suite::Lemma32 => lemma32(corpus)?,
        Suite::WheelGrowth => wheel_growth(corpus)?,
        Suite::Brittle => brittle(corpus)?,
        Suite::Triads => triads(corpus)?,
        Suite::Background => background(corpus)?,
        Suite::Coverage => coverage(corpus)?,
    };
    let fails = tally.lines.len();
    Ok(SuiteOutcome {
        report: SuiteReport {
            suite: suite.name().to_string(),
            checked: tally.checked,
            fails,
            elapsed_s: start.elapsed().as_secs_f64(),
            verdict: if fails == 0 { "pass".to_string() } else { "fail".to_string() },
        },
        counterexamples: tally.lines,
    })
}

pub fn run_all(corpus: &Corpus) -> Result<Vec<SuiteOutcome>> {
    ALL_SUITES.iter().map(|&s| run_suite(s, corpus)).collect()
}

fn uniform_cf(r: usize, n: usize) -> Result<CanonicalForm> {
    canonical_form(&Matroid::uniform(r, n)?)
}

fn single(m: &Matroid, e: usize) -> ElementSet {
    ElementSet::from_bits_unchecked(m.ground_size(), 1 << e)
}

/// M \ x / y with the contraction applied after the deletion relabeling.
fn delete_contract(m: &Matroid, x: usize, y: usize) -> Matroid {
    let xs = single(m, x);
    let y_after = m.deletion_map(&xs).apply(y).expect("y survives deleting x");
    let after = m.delete(&xs);
    after.contract(&single(&after, y_after))
}

fn par_tally<T, F>(items: &[T], f: F) -> Result<Tally>
where
    T: Sync,
    F: Fn(&T) -> Result<Tally> + Sync + Send,
{
    let parts = items.par_iter().map(f).collect::<Result<Vec<Tally>>>()?;
    Ok(Tally::merge(parts))
}

/// The 3-connected matroids with at most four elements are exactly the six
/// small uniform matroids U_{0,1}, U_{1,1}, U_{1,2}, U_{1,3}, U_{2,3},
/// U_{2,4}; every other class with 1..=4 elements is not 3-connected.
fn table1(corpus: &Corpus) -> Result<Tally> {
    let expected: BTreeSet<CanonicalForm> = [(0, 1), (1, 1), (1, 2), (1, 3), (2, 3), (2, 4)]
        .iter()
        .map(|&(r, n)| uniform_cf(r, n))
        .collect::<Result<_>>()?;
    let mut tally = Tally::default();
    for (rec, _) in &corpus.classes {
        if rec.n == 0 || rec.n > 4 {
            continue;
        }
        let should = expected.contains(&rec.cf);
        tally.check(rec.flags.is_3connected == should, || {
            format!(
                "table1: {} is_3connected={} expected={}",
                rec.cf, rec.flags.is_3connected, should
            )
        });
    }
    Ok(tally)
}

/// The super-minimally 2-connected matroids are exactly the circuits
/// U_{r,r+1} and the single coloop U_{1,1}; each has at most r+1 elements.
fn prop11(corpus: &Corpus) -> Result<Tally> {
    let mut expected: BTreeSet<CanonicalForm> = BTreeSet::new();
    expected.insert(uniform_cf(1, 1)?);
    for r in 0..corpus.n_max {
        expected.insert(uniform_cf(r, r + 1)?);
    }
    let items: Vec<&(CensusRecord, Matroid)> =
        corpus.classes.iter().filter(|(rec, _)| rec.n >= 1).collect();
    par_tally(&items, |(rec, m)| {
        let mut t = Tally::default();
        let got = m.is_super_minimally_k_connected(2)?;
        let should = expected.contains(&rec.cf);
        t.check(got == should, || {
            format!("prop11: {} sm2c={got} expected={should}", rec.cf)
        });
        if got {
            t.check(rec.n <= rec.r + 1, || {
                format!("prop11: {} has {} elements, rank {}", rec.cf, rec.n, rec.r)
            });
        }
        Ok(t)
    })
}

/// Super-minimally 3-connected matroids with at least four elements satisfy
/// |E| <= 2r; equality holds exactly for U_{2,4} and the wheels and whirls,
/// which are super-minimally 3-connected at every spoke count.
fn density(corpus: &Corpus) -> Result<Tally> {
    let mut tally = Tally::default();
    let mut equality_found: BTreeSet<CanonicalForm> = BTreeSet::new();
    for (rec, _) in &corpus.classes {
        if !rec.flags.is_sm_3connected || rec.n < 4 {
            continue;
        }
        tally.check(rec.n <= 2 * rec.r, || {
            format!("density: {} has {} elements, rank {}", rec.cf, rec.n, rec.r)
        });
        if rec.n == 2 * rec.r {
            equality_found.insert(rec.cf.clone());
        }
    }

    let mut equality_expected: BTreeSet<CanonicalForm> = BTreeSet::new();
    equality_expected.insert(uniform_cf(2, 4)?);
    for k in 3.. {
        if 2 * k > corpus.n_max {
            break;
        }
        equality_expected.insert(canonical_form(&wheel(k)?.0)?);
        equality_expected.insert(canonical_form(&whirl(k)?.0)?);
    }
    for cf in equality_found.symmetric_difference(&equality_expected) {
        tally.lines.push(format!("density: unexpected extremal class {cf}"));
    }
    tally.checked += equality_expected.len();

    // Wheels and whirls beyond the census stay extremal.
    let large = corpus.large_wheels_whirls(corpus.k_max)?;
    let big = par_tally(&large, |inst| {
        let mut t = Tally::default();
        let m = &inst.matroid;
        let extremal = m.ground_size() == 2 * m.full_rank();
        t.check(extremal && m.is_super_minimally_k_connected(3)?, || {
            format!("density: {} not an extremal sm3c matroid", inst.label)
        });
        Ok(t)
    })?;
    tally.checked += big.checked;
    tally.lines.extend(big.lines);
    Ok(tally)
}

/// In a super-minimally 3-connected matroid with at least five elements,
/// every element e keeps a 3-connected witness after removal: si(M/e) is
/// 3-connected or co(M\e) is super-minimally 3-connected.
fn lemma31(corpus: &Corpus) -> Result<Tally> {
    let mut items = corpus.census_instances(|rec| rec.flags.is_sm_3connected && rec.n >= 5);
    items.extend(corpus.large_wheels_whirls(corpus.k_max - 1)?);
    par_tally(&items, |inst| {
        let mut t = Tally::default();
        let m = &inst.matroid;
        for e in 0..m.ground_size() {
            let es = single(m, e);
            let ok = m.contract(&es).simplify().0.is_k_connected(3)?
                || m.delete(&es).cosimplify().0.is_super_minimally_k_connected(3)?;
            t.check(ok, || format!("lemma31: {} element {e}", inst.label));
        }
        Ok(t)
    })
}

/// In a super-minimally 3-connected matroid with at least seven elements,
/// every triangle contains an element x with co(M\x) super-minimally
/// 3-connected.
fn lemma32(corpus: &Corpus) -> Result<Tally> {
    let mut items = corpus.census_instances(|rec| rec.flags.is_sm_3connected && rec.n >= 7);
    items.extend(corpus.large_wheels_whirls(corpus.k_max - 1)?);
    par_tally(&items, |inst| {
        let mut t = Tally::default();
        let m = &inst.matroid;
        for triangle in m.triangles() {
            let mut found = false;
            for x in triangle.iter() {
                if m.delete(&single(m, x)).cosimplify().0.is_super_minimally_k_connected(3)? {
                    found = true;
                    break;
                }
            }
            t.check(found, || format!("lemma32: {} triangle {triangle}", inst.label));
        }
        Ok(t)
    })
}

/// If M is minimally 3-connected and M\x/y is a 3-connected wheel or whirl
/// with k >= 2 spokes, then M is the wheel or whirl of the same kind with
/// k+1 spokes.
fn wheel_growth(corpus: &Corpus) -> Result<Tally> {
    let items = corpus.census_instances(|rec| rec.flags.is_min_3connected);
    par_tally(&items, |inst| {
        let mut t = Tally::default();
        let m = &inst.matroid;
        let n = m.ground_size();
        if n < 2 {
            return Ok(t);
        }
        for x in 0..n {
            for y in 0..n {
                if x == y {
                    continue;
                }
                let minor = delete_contract(m, x, y);
                if !minor.is_k_connected(3)? {
                    continue;
                }
                let Some(lab) = recognize_wheel_or_whirl(&minor) else { continue };
                if lab.k < 2 {
                    continue;
                }
                let grown = recognize_wheel_or_whirl(m);
                t.check(
                    grown.as_ref().map(|g| (g.kind, g.k)) == Some((lab.kind, lab.k + 1)),
                    || {
                        format!(
                            "wheelgrowth: {} \\{x}/{y} is {:?}({}) but the parent is {:?}",
                            inst.label,
                            lab.kind,
                            lab.k,
                            grown.map(|g| (g.kind, g.k))
                        )
                    },
                );
            }
        }
        Ok(t)
    })
}

/// Brittleness facts: triangle-free brittle matroids other than U_{1,1}
/// satisfy |E| <= 2r-2; triangle-free super-minimally 3-connected matroids
/// with >= 4 elements satisfy |E| <= 2r-1; direct sums and 2-sums of brittle
/// matroids are brittle.
fn brittle(corpus: &Corpus) -> Result<Tally> {
    let mut tally = Tally::default();
    let u11 = uniform_cf(1, 1)?;

    for (rec, _) in &corpus.classes {
        if rec.n == 0 {
            continue;
        }
        if rec.flags.is_brittle && rec.flags.triangle_count == 0 && rec.cf != u11 {
            tally.check(rec.n + 2 <= 2 * rec.r, || {
                format!("brittle: size bound: {} has {} elements, rank {}", rec.cf, rec.n, rec.r)
            });
        }
        if rec.flags.is_sm_3connected && rec.flags.triangle_count == 0 && rec.n >= 4 {
            tally.check(rec.n + 1 <= 2 * rec.r, || {
                format!(
                    "brittle: sm3c size bound: {} has {} elements, rank {}",
                    rec.cf, rec.n, rec.r
                )
            });
        }
    }

    // Composition: brittle parts yield brittle sums. Parts are capped at
    // five elements so every composite stays within the census range.
    let parts: Vec<&(CensusRecord, Matroid)> = corpus
        .classes
        .iter()
        .filter(|(rec, _)| rec.flags.is_brittle && rec.n >= 1 && rec.n <= 5)
        .collect();
    let mut pairs: Vec<(&(CensusRecord, Matroid), &(CensusRecord, Matroid))> = Vec::new();
    for (i, a) in parts.iter().enumerate() {
        for b in &parts[i..] {
            pairs.push((a, b));
        }
    }
    let sums = par_tally(&pairs, |((ra, ma), (rb, mb))| {
        let mut t = Tally::default();
        let sum = ma.direct_sum(mb);
        t.check(sum.is_brittle()?, || {
            format!("brittle: direct sum {} + {}", ra.cf, rb.cf)
        });
        if ra.n >= 3 && rb.n >= 3 {
            let coloops_a = ma.coloops();
            let coloops_b = mb.coloops();
            for p1 in 0..ra.n {
                if coloops_a.contains(p1) {
                    continue;
                }
                for p2 in 0..rb.n {
                    if coloops_b.contains(p2) {
                        continue;
                    }
                    let glued = ma.two_sum(mb, p1, p2)?;
                    t.check(glued.is_brittle()?, || {
                        format!("brittle: 2-sum {} ({p1}) + {} ({p2})", ra.cf, rb.cf)
                    });
                }
            }
        }
        Ok(t)
    })?;
    tally.checked += sums.checked;
    tally.lines.extend(sums.lines);
    Ok(tally)
}

/// Triad density of super-minimally 3-connected matroids: with >= 8 elements
/// at least 5|E|+30 <= 9*(elements in triads), and with >= 4 elements at
/// least r+6 <= 4*(number of triads). Checked on the census and on wheels
/// and whirls beyond it.
fn triads(corpus: &Corpus) -> Result<Tally> {
    let mut tally = Tally::default();
    for (rec, _) in &corpus.classes {
        if !rec.flags.is_sm_3connected || rec.n < 4 {
            continue;
        }
        if rec.n >= 8 {
            tally.check(9 * rec.flags.elements_in_triads >= 5 * rec.n + 30, || {
                format!(
                    "triads: coverage: {} has {} of {} elements in triads",
                    rec.cf, rec.flags.elements_in_triads, rec.n
                )
            });
        }
        tally.check(4 * rec.flags.triad_count >= rec.r + 6, || {
            format!(
                "triads: count: {} has {} triads, rank {}",
                rec.cf, rec.flags.triad_count, rec.r
            )
        });
    }

    let large = corpus.large_wheels_whirls(corpus.k_max)?;
    let big = par_tally(&large, |inst| {
        let mut t = Tally::default();
        let m = &inst.matroid;
        let n = m.ground_size();
        let r = m.full_rank();
        if n >= 8 {
            t.check(9 * m.elements_in_triads() >= 5 * n + 30, || {
                format!("triads: coverage: {}", inst.label)
            });
        }
        t.check(4 * m.triads().len() >= r + 6, || {
            format!("triads: count: {}", inst.label)
        });
        Ok(t)
    })?;
    tally.checked += big.checked;
    tally.lines.extend(big.lines);
    Ok(tally)
}

/// Classical 3-connectivity toolbox, checked exhaustively on the census and
/// on large wheels and whirls:
/// * extending a k-separation by an element of the guts or coguts keeps it
///   exactly while the far side stays large enough,
/// * Bixby's lemma: for every element of a 3-connected matroid with >= 4
///   elements, si(M/e) or co(M\e) is 3-connected,
/// * Tutte's triangle lemma: if {e,f,g} is a triangle and neither M\e nor
///   M\f is 3-connected, some triad contains e and exactly one of f, g,
/// * if M\x/y is 3-connected but M\x is not, a triad contains both x and y,
/// * a 3-connected matroid with >= 4 elements that is not a wheel or whirl
///   has at least two non-essential elements,
/// * with |E| <= 2k-2, super-minimal k-connectivity equals k-connectivity,
///   and beyond that bound it implies minimal k-connectivity (k = 2, 3, 4).
fn background(corpus: &Corpus) -> Result<Tally> {
    let mut all: Vec<Instance> = corpus.census_instances(|_| true);
    all.extend(corpus.large_wheels_whirls(corpus.k_max - 1)?);

    let main = par_tally(&all, |inst| {
        let mut t = Tally::default();
        let m = &inst.matroid;
        let n = m.ground_size();
        let label = &inst.label;

        separation_extension_checks(m, label, &mut t)?;

        if n >= 4 && m.is_k_connected(3)? {
            let triads: Vec<ElementSet> = m.triads();

            for e in 0..n {
                let es = single(m, e);
                let ok = m.contract(&es).simplify().0.is_k_connected(3)?
                    || m.delete(&es).cosimplify().0.is_k_connected(3)?;
                t.check(ok, || format!("background: bixby: {label} element {e}"));
            }

            let deletion_3c: Vec<bool> = (0..n)
                .map(|e| m.delete(&single(m, e)).is_k_connected(3))
                .collect::<Result<_>>()?;

            for triangle in m.triangles() {
                let members: Vec<usize> = triangle.iter().collect();
                for &e in &members {
                    for &f in &members {
                        if e == f || deletion_3c[e] || deletion_3c[f] {
                            continue;
                        }
                        let g = members.iter().copied().find(|&x| x != e && x != f).unwrap();
                        let witness = triads.iter().any(|d| {
                            d.contains(e) && (d.contains(f) != d.contains(g))
                        });
                        t.check(witness, || {
                            format!("background: tutte-triangle: {label} triangle {triangle} at e={e} f={f}")
                        });
                    }
                }
            }

            for x in 0..n {
                if deletion_3c[x] {
                    continue;
                }
                for y in 0..n {
                    if x == y {
                        continue;
                    }
                    if delete_contract(m, x, y).is_k_connected(3)? {
                        let witness = triads.iter().any(|d| d.contains(x) && d.contains(y));
                        t.check(witness, || {
                            format!("background: deletion-triad: {label} pair ({x},{y})")
                        });
                    }
                }
            }

            if recognize_wheel_or_whirl(m).is_none() {
                let essential = m.essential_elements()?;
                t.check(essential.len() + 2 <= n, || {
                    format!("background: nonessential-pair: {label} has {} essential elements", essential.len())
                });
            }
        }

        for k in 2..=4usize {
            if n <= 2 * k - 2 {
                let sm = m.is_super_minimally_k_connected(k)?;
                let kc = m.is_k_connected(k)?;
                t.check(sm == kc, || {
                    format!("background: small-superminimal: {label} k={k} sm={sm} kc={kc}")
                });
            } else if m.is_super_minimally_k_connected(k)? {
                t.check(m.is_minimally_k_connected(k)?, || {
                    format!("background: superminimal-implies-minimal: {label} k={k}")
                });
            }
        }

        Ok(t)
    })?;
    Ok(main)
}

/// For each exact k-separation {X,Y} and each e in Y lying in the closure or
/// coclosure of X, the pair {X+e, Y-e} is a k-separation iff |Y-e| >= k.
fn separation_extension_checks(m: &Matroid, label: &str, t: &mut Tally) -> Result<()> {
    let n = m.ground_size();
    if n < 2 {
        return Ok(());
    }
    let full = crate::set::mask_full(n);
    let is_ksep = |x: u64, k: usize| {
        let sizes = (x.count_ones() as usize).min((full & !x).count_ones() as usize);
        m.lambda_mask(x) + 1 <= k && sizes >= k
    };
    for half in crate::set::submasks(full >> 1) {
        let x = half << 1 | 1;
        let y = full & !x;
        if y == 0 {
            continue;
        }
        let lam = m.lambda_mask(x);
        let movable = (m.closure_mask(x) | m.coclosure_mask(x)) & y;
        let max_k = (x.count_ones() as usize).min(y.count_ones() as usize);
        for k in (lam + 1)..=max_k {
            for e in crate::set::BitIter(movable) {
                let x2 = x | 1 << e;
                let y2 = y & !(1 << e);
                let expected = y2.count_ones() as usize >= k;
                t.check(is_ksep(x2, k) == expected, || {
                    format!(
                        "background: separation-extension: {label} X={} k={k} e={e}",
                        ElementSet::from_bits_unchecked(n, x)
                    )
                });
            }
        }
    }
    Ok(())
}

/// Touches every public operation once with a known-good identity, so a run
/// of all suites exercises the complete library surface.
fn coverage(corpus: &Corpus) -> Result<Tally> {
    let mut t = Tally::default();
    let ok = |name: &str, pass: bool, t: &mut Tally| {
        t.check(pass, || format!("coverage: {name}"));
    };

    let w3 = wheel(3)?.0;
    let (w4, lab4) = wheel(4)?;
    let wh3 = whirl(3)?.0;
    let u24 = Matroid::uniform(2, 4)?;
    let u23 = Matroid::uniform(2, 3)?;

    // rank / closure family
    let rim = crate::construct::rim_mask(3);
    let rim_set = ElementSet::from_bits_unchecked(6, rim);
    let spokes = ElementSet::from_bits_unchecked(6, !rim & crate::set::mask_full(6));
    ok("rank", w3.rank(&rim_set) == 2, &mut t);
    ok("corank", w3.corank(&spokes) == 2, &mut t);
    ok("closure", w3.closure(&rim_set) == rim_set, &mut t);
    ok("coclosure", u23.coclosure(&single(&u23, 0)).len() == 3, &mut t);
    ok("bases", w3.bases().len() == 16, &mut t);
    ok("is_basis", w3.is_basis(&ElementSet::from_indices(6, &[0, 1, 3]).unwrap()), &mut t);
    ok("is_independent", w3.is_independent(&spokes) && !w3.is_independent(&rim_set), &mut t);
    ok("circuits", w3.circuits(6).len() == 7, &mut t);
    ok("cocircuits", w3.cocircuits(3).len() == 4, &mut t);
    ok(
        "fundamental_circuit",
        w3.fundamental_circuit(&ElementSet::from_indices(6, &[0, 1, 3]).unwrap(), 5)
            .map(|c| c.len() == 3)
            .unwrap_or(false),
        &mut t,
    );
    ok("loops", Matroid::uniform(0, 2)?.loops().len() == 2, &mut t);
    ok("coloops", Matroid::uniform(2, 2)?.coloops().len() == 2, &mut t);
    ok("is_simple", w3.is_simple() && !Matroid::uniform(1, 2)?.is_simple(), &mut t);
    ok("parallel_classes", Matroid::uniform(1, 3)?.parallel_classes().classes.len() == 1, &mut t);
    ok("series_classes", Matroid::uniform(2, 3)?.series_classes().classes.len() == 1, &mut t);

    // connectivity family
    ok("lambda", w3.lambda(&ElementSet::from_indices(6, &[2, 3, 4]).unwrap()) == 2, &mut t);
    let two_triangles = u23.direct_sum(&u23);
    let sep = two_triangles.find_k_separation(1, false)?;
    ok(
        "find_k_separation",
        sep.as_ref().map(|w| w.verify(&two_triangles)).unwrap_or(false),
        &mut t,
    );
    ok("is_k_connected", w3.is_k_connected(3)? && !w3.is_k_connected(4)?, &mut t);
    ok("is_minimally_k_connected", w3.is_minimally_k_connected(3)?, &mut t);
    ok("is_super_minimally_k_connected", w3.is_super_minimally_k_connected(3)?, &mut t);
    ok("is_brittle", u23.is_brittle()? && !u24.is_brittle()?, &mut t);
    ok("triangles", w3.triangles().len() == 4, &mut t);
    ok("triads", w3.triads().len() == 4, &mut t);
    ok("essential_elements", w3.essential_elements()?.len() == 6, &mut t);
    ok("elements_in_triads", w3.elements_in_triads() == 6, &mut t);
    let flags = PropertyFlags::compute(&w3)?;
    ok("property_flags", flags.is_3connected && flags.is_sm_3connected, &mut t);

    // minors and sums
    ok("dual", w3.dual().dual().same_labeled_matroid(&w3), &mut t);
    ok("delete", w3.delete(&single(&w3, 0)).ground_size() == 5, &mut t);
    ok("contract", w3.contract(&single(&w3, 0)).full_rank() == 2, &mut t);
    ok("restrict", w3.restrict(&rim_set).full_rank() == 2, &mut t);
    ok("deletion_map", w3.deletion_map(&single(&w3, 0)).apply(5) == Some(4), &mut t);
    ok("contraction_map", w3.contraction_map(&single(&w3, 5)).apply(0) == Some(0), &mut t);
    ok("simplify", Matroid::uniform(1, 3)?.simplify().0.ground_size() == 1, &mut t);
    ok("cosimplify", u23.cosimplify().0.ground_size() == 1, &mut t);
    ok("direct_sum", u23.direct_sum(&u23).ground_size() == 6, &mut t);
    ok(
        "two_sum",
        crate::iso::are_isomorphic(&u23.two_sum(&u23, 0, 0)?, &Matroid::uniform(3, 4)?),
        &mut t,
    );
    ok(
        "relax_circuit_hyperplane",
        w3.relax_circuit_hyperplane(&rim_set)?.same_labeled_matroid(&wh3),
        &mut t,
    );
    ok(
        "relabel",
        w3.relabel(&[5, 4, 3, 2, 1, 0]).relabel(&[5, 4, 3, 2, 1, 0]).same_labeled_matroid(&w3),
        &mut t,
    );

    // constructions and recognition
    ok("wheel_labeling", lab4.verify(&w4) && lab4.kind == WheelKind::Wheel, &mut t);
    ok(
        "recognize",
        recognize_wheel_or_whirl(&wh3).map(|l| (l.kind, l.k)) == Some((WheelKind::Whirl, 3)),
        &mut t,
    );

    // canonical forms and isomorphism
    let cf = canonical_form(&u24)?;
    ok("canonical_form", cf.to_string() == "cf1:n4-r2-fc", &mut t);
    ok("cf_to_matroid", canonical_form(&cf.to_matroid())? == cf, &mut t);
    ok("are_isomorphic", crate::iso::are_isomorphic(&u24.dual(), &u24), &mut t);

    // enumeration and extensions
    ok("flats", u24.flats()?.len() == 6, &mut t);
    ok(
        "modular_cuts",
        crate::enumerate::modular_cuts(&Matroid::uniform(1, 1)?)?.len() == 3,
        &mut t,
    );
    let cuts23 = crate::enumerate::modular_cuts(&u23)?;
    ok(
        "extend",
        cuts23
            .iter()
            .map(|c| crate::enumerate::extend(&u23, c))
            .all(|g| g.map(|m| m.ground_size() == 4).unwrap_or(false)),
        &mut t,
    );
    ok(
        "enumerate_matroids",
        crate::enumerate::enumerate_matroids(3)?.len() == 15,
        &mut t,
    );
    ok("naive_enumerate", crate::enumerate::naive_enumerate(3)?.len() == 8, &mut t);

    // census and io
    ok("census", crate::census::census(4, None)?.len() == 32, &mut t);
    ok(
        "census_filter",
        "sm3c".parse::<crate::census::CensusFilter>().is_ok(),
        &mut t,
    );
    ok(
        "json_line",
        corpus.classes.iter().any(|(rec, _)| rec.json_line().starts_with(r#"{"cf":"#)),
        &mut t,
    );
    let text = crate::io::serialize_matroid("w3", &w3);
    ok(
        "io_round_trip",
        crate::io::parse_matroid(&text)?.matroid.same_labeled_matroid(&w3),
        &mut t,
    );

    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::OnceLock;

    fn corpus() -> &'static Corpus {
        static CORPUS: OnceLock<Corpus> = OnceLock::new();
        // k_max 5 keeps the run fast while feeding every suite at least one
        // instance beyond the census (the n=8 and n=10 wheels and whirls).
        CORPUS.get_or_init(|| Corpus::build(6, 5).expect("corpus builds"))
    }

    fn outcome(suite: Suite) -> SuiteOutcome {
        run_suite(suite, corpus()).expect("suite runs")
    }

    #[test]
    fn all_suites_pass_on_small_corpus() {
        for &suite in ALL_SUITES {
            let out = outcome(suite);
            assert_eq!(
                out.report.fails, 0,
                "{}: {:?}",
                suite.name(),
                out.counterexamples.iter().take(5).collect::<Vec<_>>()
            );
            assert_eq!(out.report.verdict, "pass");
            assert!(out.report.checked > 0, "{} checked nothing", suite.name());
            assert!(out.counterexamples.is_empty());
        }
    }

    #[test]
    fn suite_names_round_trip() {
        for &suite in ALL_SUITES {
            assert_eq!(suite.name().parse::<Suite>().unwrap(), suite);
        }
        assert!("nonsense".parse::<Suite>().is_err());
    }

    #[test]
    fn report_serializes_with_fixed_fields() {
        let out = outcome(Suite::Table1);
        let json = serde_json::to_string(&out.report).unwrap();
        assert!(json.starts_with(r#"{"suite":"table1","checked":"#), "{json}");
        assert!(json.contains(r#""verdict":"pass""#));
    }

    #[test]
    fn corpus_rejects_out_of_range_parameters() {
        assert!(Corpus::build(3, 4).is_err());
        assert!(Corpus::build(9, 4).is_err());
        assert!(Corpus::build(6, 2).is_err());
        assert!(Corpus::build(6, 10).is_err());
    }

    #[test]
    fn seeded_failure_is_reported() {
        // A wrong expectation must produce a counterexample, proving the
        // harness cannot silently pass.
        let mut t = Tally::default();
        t.check(false, || "synthetic".to_string());
        assert_eq!(t.lines.len(), 1);
        let merged = Tally::merge(vec![t, Tally::default()]);
        assert_eq!(merged.checked, 1);
        assert_eq!(merged.lines, vec!["synthetic".to_string()]);
    }
}
