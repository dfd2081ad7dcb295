//! Exhaustive inverse-problem search over normalized sets.
//!
//! Candidate sets `A` with `min A = 0`, `max A = m <= dmax`, `|A| = k` and
//! element gcd 1 are visited by a depth-first search over the interior
//! elements. The search carries the sumset DP of the fixed prefix, so the
//! cardinality of a complete set costs one shift-or per layer. With a target
//! cardinality two lossless cuts apply:
//!
//! * `|h^(P ∪ {m})| > target` for the fixed prefix `P`: every completion
//!   contains `P ∪ {m}`, and `h^` is monotone under inclusion.
//! * once `P` holds at least `h` elements its `h` smallest are final, and the
//!   `h` largest are at most `m, m-1, ..., m-h+1`, bounding `|h^A|` from above.
//!
//! Work is split into shards keyed by `(m, a_1)`. Shards run in parallel and are
//! concatenated in key order, so results never depend on the thread count.

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::set::{gcd, IntSet};
use crate::sumset::{layer_table, restricted_lower_bound, EngineConfig, SumLayers};

/// Search space: all normalized `k`-sets of diameter at most `dmax`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerationSpec {
    pub k: usize,
    pub dmax: i64,
    /// Keep only sets whose elements have gcd 1.
    pub gcd_filter: bool,
}

impl EnumerationSpec {
    pub fn new(k: usize, dmax: i64) -> Self {
        Self { k, dmax, gcd_filter: true }
    }

    /// Diameters that can hold a `k`-set, ascending.
    fn diameters(&self) -> std::ops::RangeInclusive<i64> {
        let lo = (self.k as i64 - 1).max(0);
        lo..=self.dmax
    }
}

/// All sets of the search space, grouped by diameter ascending and
/// lexicographic within a diameter.
pub fn enumerate_normalized_sets(spec: EnumerationSpec) -> impl Iterator<Item = IntSet> {
    let k = spec.k;
    spec.diameters().filter(move |_| k > 0).flat_map(move |m| {
        let interior: Box<dyn Iterator<Item = Vec<i64>>> =
            if k == 1 { Box::new((m == 0).then(Vec::new).into_iter()) } else { Box::new((1..m).combinations(k - 2)) };
        interior.filter_map(move |mid| {
            let mut elems = Vec::with_capacity(k);
            elems.push(0);
            elems.extend(mid);
            if k > 1 {
                elems.push(m);
            }
            let keep = !spec.gcd_filter || k == 1 || elems.iter().fold(0u64, |g, &v| gcd(g, v as u64)) == 1;
            keep.then(|| IntSet::from_sorted_unchecked(elems))
        })
    })
}

/// Execution knobs shared by every search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub engine: EngineConfig,
    /// Worker threads; 0 uses the global rayon pool.
    pub threads: usize,
    /// Apply the prefix and span cuts when a target is given.
    pub prune: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self { engine: EngineConfig::default(), threads: 0, prune: true }
    }
}

impl SearchOptions {
    /// Runs `work` inside a pool of `threads` workers, or directly when `threads` is 0.
    pub fn run<R: Send>(&self, work: impl FnOnce() -> R + Send) -> Result<R> {
        if self.threads == 0 {
            return Ok(work());
        }
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.threads)
            .build()
            .map_err(|e| Error::Invalid(format!("cannot start {} worker threads: {e}", self.threads)))?;
        Ok(pool.install(work))
    }
}

/// Counters from one search.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ScanStats {
    /// Complete candidate sets whose cardinality was evaluated.
    pub scanned: u64,
    /// Branches cut by a bound.
    pub pruned: u64,
}

impl std::ops::AddAssign for ScanStats {
    fn add_assign(&mut self, rhs: Self) {
        self.scanned += rhs.scanned;
        self.pruned += rhs.pruned;
    }
}

struct Shard {
    m: i64,
    first: Option<i64>,
}

fn shards(spec: &EnumerationSpec) -> Vec<Shard> {
    let k = spec.k as i64;
    if k < 2 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for m in spec.diameters().filter(|&m| m >= 1) {
        if k == 2 {
            out.push(Shard { m, first: None });
        } else {
            out.extend((1..=m - (k - 2)).map(|a| Shard { m, first: Some(a) }));
        }
    }
    out
}

struct Walker<'a, T, F> {
    h: usize,
    k: usize,
    m: i64,
    target: Option<usize>,
    prune: bool,
    gcd_filter: bool,
    visit: &'a F,
    stats: ScanStats,
    out: Vec<T>,
}

impl<T, F: Fn(&IntSet, &SumLayers) -> Option<T>> Walker<'_, T, F> {
    fn cut(&mut self, layers: &SumLayers, prefix: &[i64]) -> bool {
        let Some(target) = self.target.filter(|_| self.prune) else { return false };
        if layers.layer_len(self.h) > target {
            return true;
        }
        if prefix.len() >= self.h {
            let h = self.h as i64;
            let low: i64 = prefix[..self.h].iter().sum();
            let high = h * self.m - h * (h - 1) / 2;
            if high - low + 1 < target as i64 {
                return true;
            }
        }
        false
    }

    /// `prefix` holds 0 and the interior elements chosen so far; `layers` also includes `m`.
    fn descend(&mut self, layers: &SumLayers, prefix: &mut Vec<i64>) {
        let need = self.k - 1 - prefix.len();
        if need == 0 {
            self.leaf(layers, prefix);
            return;
        }
        let last = *prefix.last().unwrap_or(&0);
        for next in last + 1..=self.m - need as i64 {
            let mut child = layers.clone();
            child.insert(next as usize);
            prefix.push(next);
            if self.cut(&child, prefix) {
                self.stats.pruned += 1;
            } else {
                self.descend(&child, prefix);
            }
            prefix.pop();
        }
    }

    fn leaf(&mut self, layers: &SumLayers, prefix: &[i64]) {
        if self.gcd_filter && prefix.iter().fold(self.m as u64, |g, &v| gcd(g, v as u64)) != 1 {
            return;
        }
        self.stats.scanned += 1;
        if let Some(t) = self.target {
            if layers.layer_len(self.h) != t {
                return;
            }
        }
        let mut elems = prefix.to_vec();
        elems.push(self.m);
        let set = IntSet::from_sorted_unchecked(elems);
        if let Some(item) = (self.visit)(&set, layers) {
            self.out.push(item);
        }
    }
}

/// Visits every set of the search space with its DP layers `0..=depth`.
///
/// With `target = Some(t)` only sets with `|h^A| = t` reach `visit`, and the
/// bound cuts run when `opts.prune` is set. Items come back in enumeration order.
pub fn search<T, F>(
    spec: EnumerationSpec,
    h: usize,
    depth: usize,
    target: Option<usize>,
    opts: &SearchOptions,
    visit: F,
) -> Result<(Vec<T>, ScanStats)>
where
    T: Send,
    F: Fn(&IntSet, &SumLayers) -> Option<T> + Sync,
{
    if h > depth || h > spec.k {
        return Err(Error::Invalid(format!("h = {h} must satisfy h <= k = {} and h <= depth = {depth}", spec.k)));
    }
    if spec.k == 0 {
        return Ok((Vec::new(), ScanStats::default()));
    }
    if spec.k == 1 {
        // The only normalized 1-set is {0}.
        let mut stats = ScanStats::default();
        let mut out = Vec::new();
        if spec.dmax >= 0 {
            let set = IntSet::interval(0, 0);
            let layers = layer_table(&set, depth, &opts.engine)?;
            stats.scanned = 1;
            if target.is_none_or(|t| layers.layer_len(h) == t) {
                out.extend(visit(&set, &layers));
            }
        }
        return Ok((out, stats));
    }
    let width = (depth.min(spec.k) as u64).saturating_mul(spec.dmax.max(0) as u64);
    if width > opts.engine.window_cap {
        return Err(Error::WindowTooLarge { width, cap: opts.engine.window_cap });
    }
    let work = shards(&spec);
    let visit = &visit;
    let results: Vec<(Vec<T>, ScanStats)> = opts.run(|| {
        work.par_iter()
            .map(|shard| {
                let mut walker = Walker {
                    h,
                    k: spec.k,
                    m: shard.m,
                    target,
                    prune: opts.prune,
                    gcd_filter: spec.gcd_filter,
                    visit,
                    stats: ScanStats::default(),
                    out: Vec::new(),
                };
                let mut layers = SumLayers::with_window(depth.min(spec.k), shard.m as usize, 0);
                layers.insert(0);
                layers.insert(shard.m as usize);
                let mut prefix = vec![0];
                if let Some(a) = shard.first {
                    layers.insert(a as usize);
                    prefix.push(a);
                    if walker.cut(&layers, &prefix) {
                        walker.stats.pruned += 1;
                        return (walker.out, walker.stats);
                    }
                }
                walker.descend(&layers, &mut prefix);
                (walker.out, walker.stats)
            })
            .collect()
    })?;
    let mut stats = ScanStats::default();
    let mut out = Vec::new();
    for (items, s) in results {
        stats += s;
        out.extend(items);
    }
    Ok((out, stats))
}

/// The classification results whose extremal lists can be reproduced exhaustively.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Theorem {
    /// `|h^A| = hk - h^2 + 2`, `h >= 3`, `k >= 3h+1`.
    OneElement,
    /// `|3^A| = 3k - 6`, `k >= 12`.
    TwoElementH3,
    /// `|h^A| = hk - h^2 + 3`, `h >= 4`, `k >= 3h+3`.
    TwoElement,
    /// `|3^A| = 3k - 5`, `k >= 13`.
    ThreeElementH3,
    /// `|4^A| = 4k - 12`, `k >= 16`.
    ThreeElementH4,
    /// `|h^A| = hk - h^2 + 4`, `h >= 5`, `k >= 3h+4`.
    ThreeElement,
}

impl Theorem {
    pub const ALL: [Theorem; 6] = [
        Theorem::OneElement,
        Theorem::TwoElementH3,
        Theorem::TwoElement,
        Theorem::ThreeElementH3,
        Theorem::ThreeElementH4,
        Theorem::ThreeElement,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Theorem::OneElement => "one-element",
            Theorem::TwoElementH3 => "two-element-h3",
            Theorem::TwoElement => "two-element",
            Theorem::ThreeElementH3 => "three-element-h3",
            Theorem::ThreeElementH4 => "three-element-h4",
            Theorem::ThreeElement => "three-element",
        }
    }

    /// Number of deleted elements minus one: the sets live in `[0, k + e]`.
    pub fn extension(&self) -> i64 {
        match self {
            Theorem::OneElement => 0,
            Theorem::TwoElementH3 | Theorem::TwoElement => 1,
            _ => 2,
        }
    }

    /// `c` in the target `hk - h^2 + c`.
    pub fn excess(&self) -> i64 {
        self.extension() + 2
    }

    /// `h` when the statement fixes it.
    pub fn fixed_h(&self) -> Option<usize> {
        match self {
            Theorem::TwoElementH3 | Theorem::ThreeElementH3 => Some(3),
            Theorem::ThreeElementH4 => Some(4),
            _ => None,
        }
    }

    fn h_regime(&self) -> (usize, Option<usize>, &'static str) {
        match self {
            Theorem::OneElement => (3, None, "h >= 3"),
            Theorem::TwoElementH3 | Theorem::ThreeElementH3 => (3, Some(3), "h = 3"),
            Theorem::TwoElement => (4, None, "h >= 4"),
            Theorem::ThreeElementH4 => (4, Some(4), "h = 4"),
            Theorem::ThreeElement => (5, None, "h >= 5"),
        }
    }

    /// Smallest admissible `k` for this `h`.
    pub fn k_min(&self, h: usize) -> usize {
        match self {
            Theorem::OneElement => 3 * h + 1,
            Theorem::TwoElementH3 => 12,
            Theorem::TwoElement => 3 * h + 3,
            Theorem::ThreeElementH3 => 13,
            Theorem::ThreeElementH4 => 16,
            Theorem::ThreeElement => 3 * h + 4,
        }
    }

    /// Smallest admissible `h`.
    pub fn h_min(&self) -> usize {
        self.h_regime().0
    }

    pub fn check(&self, h: usize, k: usize) -> Result<()> {
        let (lo, exact, regime) = self.h_regime();
        if h < lo || exact.is_some_and(|e| e != h) {
            return Err(Error::HRegime { what: self.id().into(), h: h as i64, regime: regime.into() });
        }
        let threshold = self.k_min(h);
        if k < threshold {
            return Err(Error::BelowThreshold {
                what: self.id().into(),
                h: h as i64,
                k: k as i64,
                threshold: threshold as i64,
            });
        }
        Ok(())
    }

    pub fn target(&self, h: usize, k: usize) -> usize {
        let (h, k) = (h as i64, k as i64);
        (h * k - h * h + self.excess()) as usize
    }

    /// Largest element an extremal set may have.
    pub fn interval_end(&self, k: usize) -> i64 {
        k as i64 + self.extension()
    }

    pub fn default_dmax(&self, k: usize, margin: i64) -> i64 {
        self.interval_end(k) + margin
    }

    /// Deleted elements of each listed set, before expansion into sets.
    fn deletions(&self, k: i64) -> Vec<Vec<i64>> {
        let fixed: Vec<Vec<i64>> = match self {
            Theorem::OneElement => vec![vec![1], vec![k - 1]],
            Theorem::TwoElementH3 => vec![
                vec![1, 2],
                vec![k - 1, k],
                vec![1, k],
                vec![2, k + 1],
                vec![3, k + 1],
                vec![k - 2, k + 1],
                vec![k - 3, k + 1],
            ],
            Theorem::TwoElement => {
                vec![vec![1, 2], vec![k - 1, k], vec![1, k], vec![2, k + 1], vec![k - 2, k + 1]]
            }
            Theorem::ThreeElementH3 => {
                let mut v = vec![
                    vec![1, 2, 3],
                    vec![k - 1, k, k + 1],
                    vec![1, 2, k + 1],
                    vec![1, k, k + 1],
                    vec![1, 3, k + 2],
                    vec![k - 2, k, k + 2],
                    vec![1, 4, k + 2],
                    vec![k - 3, k, k + 2],
                    vec![2, k, k + 2],
                    vec![1, k - 1, k + 2],
                    vec![1, k - 2, k + 2],
                    vec![3, k, k + 2],
                ];
                v.extend((4..=k - 4).map(|r| vec![r, k + 1, k + 2]));
                v
            }
            Theorem::ThreeElementH4 | Theorem::ThreeElement => {
                let mut v = vec![
                    vec![1, 2, 3],
                    vec![k - 1, k, k + 1],
                    vec![1, 2, k + 1],
                    vec![1, k, k + 1],
                    vec![1, 3, k + 2],
                    vec![k - 2, k, k + 2],
                    vec![2, k, k + 2],
                    vec![1, k - 1, k + 2],
                    vec![3, k + 1, k + 2],
                    vec![k - 3, k + 1, k + 2],
                ];
                if *self == Theorem::ThreeElementH4 {
                    v.push(vec![4, k + 1, k + 2]);
                    v.push(vec![k - 4, k + 1, k + 2]);
                }
                v
            }
        };
        fixed
    }

    /// The listed extremal sets, sorted and duplicate-free.
    pub fn expected_sets(&self, h: usize, k: usize) -> Result<Vec<IntSet>> {
        self.check(h, k)?;
        let end = self.interval_end(k);
        let mut sets: Vec<IntSet> =
            self.deletions(k as i64).iter().map(|d| IntSet::interval_minus(0, end, d)).collect();
        sets.sort();
        sets.dedup();
        Ok(sets)
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL.into_iter().find(|t| t.id() == s).ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

/// Outcome of comparing the found list with a theorem's list.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    ExactMatch,
    /// At least one listed set was not found.
    Missing,
    /// Everything listed was found, plus sets the theorem does not list.
    Extra,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::ExactMatch => "exact-match",
            Verdict::Missing => "missing",
            Verdict::Extra => "extra",
        })
    }
}

/// Sets of a given `|h^A|` found in the search space, optionally compared with a theorem.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub theorem: Option<String>,
    pub h: usize,
    pub k: usize,
    pub dmax: i64,
    pub target: usize,
    /// Lexicographic, duplicate-free.
    pub found: Vec<IntSet>,
    pub expected: Option<Vec<IntSet>>,
    pub verdict: Option<Verdict>,
    pub scanned: u64,
    pub pruned: u64,
    /// `None` once redacted for byte-stable output.
    pub wall_ms: Option<u64>,
}

impl ClassificationReport {
    /// Listed but not found.
    pub fn missing(&self) -> Vec<&IntSet> {
        self.expected.iter().flatten().filter(|s| self.found.binary_search(s).is_err()).collect()
    }

    /// Found but not listed.
    pub fn extra(&self) -> Vec<&IntSet> {
        match &self.expected {
            Some(exp) => self.found.iter().filter(|s| exp.binary_search(s).is_err()).collect(),
            None => Vec::new(),
        }
    }

    pub fn redact_timing(&mut self) {
        self.wall_ms = None;
    }
}

fn elapsed_ms(start: Instant) -> Option<u64> {
    Some(start.elapsed().as_millis() as u64)
}

/// All normalized `k`-sets with diameter at most `dmax` and `|h^A| = target`.
pub fn classify_by_cardinality(
    h: usize,
    k: usize,
    target: usize,
    dmax: i64,
    opts: &SearchOptions,
) -> Result<ClassificationReport> {
    if h > k {
        return Err(Error::Invalid(format!("h = {h} exceeds k = {k}")));
    }
    if target < 1 {
        return Err(Error::Invalid("target cardinality must be at least 1".into()));
    }
    let start = Instant::now();
    let (mut found, stats) =
        search(EnumerationSpec::new(k, dmax), h, h, Some(target), opts, |set, _| Some(set.clone()))?;
    found.sort();
    Ok(ClassificationReport {
        theorem: None,
        h,
        k,
        dmax,
        target,
        found,
        expected: None,
        verdict: None,
        scanned: stats.scanned,
        pruned: stats.pruned,
        wall_ms: elapsed_ms(start),
    })
}

/// Searches for the theorem's target and compares with its list.
///
/// `dmax` must reach past the theorem's interval so that sets outside it would be seen.
pub fn verify_classification(
    theorem: Theorem,
    h: usize,
    k: usize,
    dmax: i64,
    opts: &SearchOptions,
) -> Result<ClassificationReport> {
    let expected = theorem.expected_sets(h, k)?;
    if dmax < theorem.interval_end(k) {
        return Err(Error::Invalid(format!(
            "dmax = {dmax} does not cover the interval [0, {}] of {theorem}",
            theorem.interval_end(k)
        )));
    }
    let mut report = classify_by_cardinality(h, k, theorem.target(h, k), dmax, opts)?;
    report.verdict = Some(if report.found == expected {
        Verdict::ExactMatch
    } else if expected.iter().any(|s| report.found.binary_search(s).is_err()) {
        Verdict::Missing
    } else {
        Verdict::Extra
    });
    report.theorem = Some(theorem.id().to_string());
    report.expected = Some(expected);
    Ok(report)
}

/// Check that every set with `|h^A| = hk - h^2 + c` lies in `[0, k + c - 2]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContainmentReport {
    pub h: usize,
    pub k: usize,
    pub c: usize,
    pub dmax: i64,
    pub target: usize,
    /// `k + c - 2`.
    pub bound: i64,
    pub found: usize,
    pub violators: Vec<IntSet>,
    pub scanned: u64,
    pub pruned: u64,
    pub wall_ms: Option<u64>,
}

impl ContainmentReport {
    pub fn holds(&self) -> bool {
        self.violators.is_empty()
    }

    pub fn redact_timing(&mut self) {
        self.wall_ms = None;
    }
}

/// Smallest `k` for which containment with excess `c` is claimed.
pub fn containment_k_min(h: usize, c: usize) -> Result<usize> {
    match c {
        2 => Ok(3 * h + 1),
        3 => Ok(3 * h + 3),
        4 => Ok(3 * h + 4),
        _ => Err(Error::Invalid(format!("containment excess c must be 2, 3 or 4 (got {c})"))),
    }
}

pub fn verify_containment(h: usize, k: usize, c: usize, dmax: i64, opts: &SearchOptions) -> Result<ContainmentReport> {
    let threshold = containment_k_min(h, c)?;
    if h < 3 {
        return Err(Error::HRegime { what: "containment".into(), h: h as i64, regime: "h >= 3".into() });
    }
    if k < threshold {
        return Err(Error::BelowThreshold {
            what: format!("containment (c = {c})"),
            h: h as i64,
            k: k as i64,
            threshold: threshold as i64,
        });
    }
    let target = (restricted_lower_bound(h as i64, k as i64) - 1 + c as i64) as usize;
    let bound = k as i64 + c as i64 - 2;
    let report = classify_by_cardinality(h, k, target, dmax, opts)?;
    let violators = report.found.iter().filter(|s| s.max_elem().is_some_and(|m| m > bound)).cloned().collect();
    Ok(ContainmentReport {
        h,
        k,
        c,
        dmax,
        target,
        bound,
        found: report.found.len(),
        violators,
        scanned: report.scanned,
        pruned: report.pruned,
        wall_ms: report.wall_ms,
    })
}

/// A set whose sumset is smaller than a proved lower bound.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundViolation {
    pub set: IntSet,
    pub h: usize,
    pub observed: usize,
    pub bound: &'static str,
    pub value: f64,
}

/// `|h^A|` against `hk - h^2 + 1`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DirectBoundCheck {
    pub h: usize,
    pub k: usize,
    pub cardinality: usize,
    pub lower_bound: i64,
    pub violation: Option<BoundViolation>,
    /// The bound is attained.
    pub extremal: bool,
    /// For extremal sets with `k >= 5` and `2 <= h <= k-2`: whether `A` is an arithmetic progression.
    pub arithmetic_progression: Option<bool>,
}

fn is_arithmetic_progression(a: &IntSet) -> bool {
    a.len() < 3 || a.as_slice().windows(2).map(|w| w[1] - w[0]).all_equal()
}

fn direct_check(a: &IntSet, h: usize, cardinality: usize) -> DirectBoundCheck {
    let k = a.len();
    let lower_bound = restricted_lower_bound(h as i64, k as i64);
    let violation = ((cardinality as i64) < lower_bound).then(|| BoundViolation {
        set: a.clone(),
        h,
        observed: cardinality,
        bound: "hk-h^2+1",
        value: lower_bound as f64,
    });
    let extremal = cardinality as i64 == lower_bound;
    let arithmetic_progression = (extremal && k >= 5 && h >= 2 && h + 2 <= k).then(|| is_arithmetic_progression(a));
    DirectBoundCheck { h, k, cardinality, lower_bound, violation, extremal, arithmetic_progression }
}

pub fn check_direct_bounds(a: &IntSet, h: usize, cfg: &EngineConfig) -> Result<DirectBoundCheck> {
    if h < 1 || h > a.len() {
        return Err(Error::Invalid(format!("direct bound needs 1 <= h <= |A| (h = {h}, |A| = {})", a.len())));
    }
    let n = crate::sumset::restricted_cardinality(a, h, cfg)?;
    Ok(direct_check(a, h, n))
}

/// Direct-bound findings over a whole search space, all `1 <= h <= k`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DirectBoundSweep {
    pub k: usize,
    pub dmax: i64,
    pub scanned: u64,
    pub violations: Vec<BoundViolation>,
    /// `(h, A)` attaining `hk - h^2 + 1` with `k >= 5`, `2 <= h <= k-2`.
    pub extremal: Vec<(usize, IntSet)>,
}

impl DirectBoundSweep {
    /// Extremal sets that are not the interval `[0, k-1]`.
    pub fn non_interval_extremal(&self) -> Vec<&(usize, IntSet)> {
        self.extremal.iter().filter(|(_, a)| !a.is_interval()).collect()
    }
}

pub fn direct_bound_sweep(k: usize, dmax: i64, opts: &SearchOptions) -> Result<DirectBoundSweep> {
    let (per_set, stats) = search(EnumerationSpec::new(k, dmax), 0, k, None, opts, |set, layers| {
        let mut violations = Vec::new();
        let mut extremal = Vec::new();
        for h in 1..=k {
            let check = direct_check(set, h, layers.layer_len(h));
            violations.extend(check.violation);
            if check.arithmetic_progression.is_some() {
                extremal.push((h, set.clone()));
            }
        }
        (!violations.is_empty() || !extremal.is_empty()).then_some((violations, extremal))
    })?;
    let (violations, extremal): (Vec<_>, Vec<_>) = per_set.into_iter().unzip();
    Ok(DirectBoundSweep {
        k,
        dmax,
        scanned: stats.scanned,
        violations: violations.into_iter().flatten().collect(),
        extremal: extremal.into_iter().flatten().collect(),
    })
}

/// `(1 + sqrt 5) / 2`.
pub const GOLDEN_MEAN: f64 = 1.618_033_988_749_895;

/// `|2^A|` of a normalized set against the golden-mean bound and the `3k - 7` conjecture.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LevCheck {
    pub set: IntSet,
    pub k: usize,
    /// `a_{k-1}`.
    pub diameter: i64,
    pub cardinality: usize,
    /// `a_{k-1} + k - 2`.
    pub interval_bound: i64,
    /// `(theta + 1) k - 6`.
    pub golden_bound: f64,
    /// True when `a_{k-1} <= 2k - 5`, i.e. the theorem's bound is `interval_bound`.
    pub short_diameter: bool,
    pub theorem_holds: bool,
    /// `a_{k-1} + k - 2` or `3k - 7`; only for `k > 7`.
    pub conjecture_bound: Option<i64>,
    pub conjecture_holds: Option<bool>,
}

fn lev_check(a: &IntSet, cardinality: usize) -> LevCheck {
    let k = a.len() as i64;
    let diameter = a.max_elem().unwrap_or(0);
    let interval_bound = diameter + k - 2;
    let golden_bound = (GOLDEN_MEAN + 1.0) * k as f64 - 6.0;
    let short_diameter = diameter <= 2 * k - 5;
    let theorem_holds =
        if short_diameter { cardinality as i64 >= interval_bound } else { cardinality as f64 >= golden_bound };
    let conjecture_bound = (k > 7).then(|| if short_diameter { interval_bound } else { 3 * k - 7 });
    LevCheck {
        set: a.clone(),
        k: a.len(),
        diameter,
        cardinality,
        interval_bound,
        golden_bound,
        short_diameter,
        theorem_holds,
        conjecture_bound,
        conjecture_holds: conjecture_bound.map(|b| cardinality as i64 >= b),
    }
}

pub fn check_lev_and_conjecture(a: &IntSet, cfg: &EngineConfig) -> Result<LevCheck> {
    if a.len() < 3 || !a.is_normalized() {
        return Err(Error::Invalid(format!("expected a normalized set with at least 3 elements, got {{{a}}}")));
    }
    let n = crate::sumset::restricted_cardinality(a, 2, cfg)?;
    Ok(lev_check(a, n))
}

/// Lev-bound and conjecture findings over a whole search space.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LevSweep {
    pub k: usize,
    pub dmax: i64,
    pub scanned: u64,
    pub theorem_violations: Vec<LevCheck>,
    pub conjecture_violations: Vec<LevCheck>,
    /// Sets meeting the conjectured bound with equality.
    pub conjecture_tight: u64,
}

pub fn lev_sweep(k: usize, dmax: i64, opts: &SearchOptions) -> Result<LevSweep> {
    if k < 3 {
        return Err(Error::Invalid(format!("the golden-mean bound needs k >= 3 (got {k})")));
    }
    let (checks, stats) = search(EnumerationSpec::new(k, dmax), 2, 2, None, opts, |set, layers| {
        let c = lev_check(set, layers.layer_len(2));
        let tight = c.conjecture_bound == Some(c.cardinality as i64);
        let flagged = !c.theorem_holds || c.conjecture_holds == Some(false);
        (flagged || tight).then_some((c, tight))
    })?;
    let mut sweep = LevSweep {
        k,
        dmax,
        scanned: stats.scanned,
        theorem_violations: Vec::new(),
        conjecture_violations: Vec::new(),
        conjecture_tight: 0,
    };
    for (c, tight) in checks {
        sweep.conjecture_tight += tight as u64;
        if !c.theorem_holds {
            sweep.theorem_violations.push(c.clone());
        }
        if c.conjecture_holds == Some(false) {
            sweep.conjecture_violations.push(c);
        }
    }
    Ok(sweep)
}

/// `{0, 1, ..., k-3} ∪ {a-1, a}`, which meets the `3k - 7` bound once `a >= 2k - 4`.
pub fn lev_extremal_set(k: usize, a: i64) -> Result<IntSet> {
    if k < 4 || a - 1 <= k as i64 - 3 {
        return Err(Error::Invalid(format!("need k >= 4 and a > k - 2 (k = {k}, a = {a})")));
    }
    let mut elems: Vec<i64> = (0..=k as i64 - 3).collect();
    elems.extend([a - 1, a]);
    Ok(IntSet::from_sorted_unchecked(elems))
}
