//! Finite integer sets, affine maps and the canonical normal form.
//!
//! A set is stored as a strictly increasing `Vec<i64>`. Its textual form is the
//! comma-separated list of its elements (`0,1,3,7`), which is also what the CLI
//! and the JSON reports use.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A finite set of integers, kept sorted and duplicate-free.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IntSet {
    elems: Vec<i64>,
}

impl IntSet {
    pub fn empty() -> Self {
        Self { elems: Vec::new() }
    }

    /// Builds a set from arbitrary values. The flag is true when duplicates were dropped.
    pub fn from_values<I: IntoIterator<Item = i64>>(values: I) -> (Self, bool) {
        let mut elems: Vec<i64> = values.into_iter().collect();
        let before = elems.len();
        elems.sort_unstable();
        elems.dedup();
        let dropped = elems.len() != before;
        (Self { elems }, dropped)
    }

    /// Wraps a vector that the caller guarantees to be strictly increasing.
    pub(crate) fn from_sorted_unchecked(elems: Vec<i64>) -> Self {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        Self { elems }
    }

    /// The integer interval `[lo, hi]` (empty when `lo > hi`).
    pub fn interval(lo: i64, hi: i64) -> Self {
        Self { elems: (lo..=hi).collect() }
    }

    /// `[lo, hi]` with the listed values removed.
    pub fn interval_minus(lo: i64, hi: i64, removed: &[i64]) -> Self {
        Self { elems: (lo..=hi).filter(|v| !removed.contains(v)).collect() }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.elems
    }

    pub fn into_vec(self) -> Vec<i64> {
        self.elems
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = i64> + ExactSizeIterator + '_ {
        self.elems.iter().copied()
    }

    pub fn min_elem(&self) -> Option<i64> {
        self.elems.first().copied()
    }

    pub fn max_elem(&self) -> Option<i64> {
        self.elems.last().copied()
    }

    pub fn contains(&self, v: i64) -> bool {
        self.elems.binary_search(&v).is_ok()
    }

    pub fn is_subset(&self, other: &IntSet) -> bool {
        self.elems.iter().all(|&v| other.contains(v))
    }

    /// Sum of all elements, or `None` on overflow.
    pub fn total(&self) -> Option<i64> {
        self.elems.iter().try_fold(0i64, |acc, &v| acc.checked_add(v))
    }

    /// True when the set is a run of consecutive integers with at least one element.
    pub fn is_interval(&self) -> bool {
        match (self.min_elem(), self.max_elem()) {
            (Some(lo), Some(hi)) => (hi - lo) as usize + 1 == self.len(),
            _ => false,
        }
    }

    /// `{c - a : a in A}`.
    pub fn reflect(&self, c: i64) -> IntSet {
        IntSet { elems: self.elems.iter().rev().map(|&v| c - v).collect() }
    }

    /// `{a + t : a in A}`.
    pub fn translate(&self, t: i64) -> IntSet {
        IntSet { elems: self.elems.iter().map(|&v| v + t).collect() }
    }

    /// Maps the set through `m`, re-sorting when the scale is negative.
    pub fn apply(&self, m: AffineMap) -> Result<IntSet> {
        let mut out = Vec::with_capacity(self.len());
        for &v in &self.elems {
            let y = m
                .scale
                .checked_mul(v)
                .and_then(|p| p.checked_add(m.shift))
                .ok_or_else(|| Error::Overflow(format!("{}*{} + {}", m.scale, v, m.shift)))?;
            out.push(y);
        }
        if m.scale < 0 {
            out.reverse();
        }
        Ok(IntSet { elems: out })
    }

    /// gcd of `a_i - a_0` over the set.
    pub fn gcd_of_differences(&self) -> Result<u64> {
        if self.len() < 2 {
            return Err(Error::TooFewElements { op: "gcd_of_differences", got: self.len() });
        }
        let base = self.elems[0];
        Ok(self.elems[1..].iter().fold(0u64, |g, &v| gcd(g, (v - base).unsigned_abs())))
    }

    /// Translates to minimum 0 and divides by the difference gcd.
    pub fn normalize(&self) -> Result<NormalForm> {
        if self.len() < 2 {
            return Err(Error::TooFewElements { op: "normalize", got: self.len() });
        }
        let base = self.elems[0];
        let d = self.gcd_of_differences()? as i64;
        let elems = self.elems.iter().map(|&v| (v - base) / d).collect();
        Ok(NormalForm { set: IntSet { elems }, map: AffineMap { scale: d, shift: base } })
    }

    /// True when min is 0 and the element gcd is 1 (sets of size < 2 only need min 0).
    pub fn is_normalized(&self) -> bool {
        match self.len() {
            0 => false,
            1 => self.elems[0] == 0,
            _ => self.elems[0] == 0 && self.gcd_of_differences().map(|g| g == 1).unwrap_or(false),
        }
    }

    /// Largest absolute element value.
    pub fn max_abs(&self) -> u64 {
        self.elems.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0)
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl fmt::Display for IntSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.elems.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for IntSet {
    type Err = Error;

    /// Parses `int(,int)*`. The empty string (or `{}`) is the empty set.
    /// Duplicates are silently dropped; use [`parse_set`] to observe them.
    fn from_str(s: &str) -> Result<Self> {
        parse_set(s).map(|(set, _)| set)
    }
}

/// Parses the canonical textual form, reporting whether duplicates were dropped.
pub fn parse_set(s: &str) -> Result<(IntSet, bool)> {
    let t = s.trim();
    let t = t.strip_prefix('{').and_then(|r| r.strip_suffix('}')).unwrap_or(t).trim();
    if t.is_empty() {
        return Ok((IntSet::empty(), false));
    }
    let mut values = Vec::new();
    for part in t.split(',') {
        let p = part.trim();
        let v: i64 = p.parse().map_err(|_| Error::Parse(format!("`{p}` is not an integer in set string `{s}`")))?;
        values.push(v);
    }
    Ok(IntSet::from_values(values))
}

impl Serialize for IntSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for IntSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `x -> scale * x + shift` with a nonzero scale.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AffineMap {
    scale: i64,
    shift: i64,
}

impl AffineMap {
    pub fn new(scale: i64, shift: i64) -> Result<Self> {
        if scale == 0 {
            return Err(Error::ZeroScale);
        }
        Ok(Self { scale, shift })
    }

    pub fn identity() -> Self {
        Self { scale: 1, shift: 0 }
    }

    pub fn scale(&self) -> i64 {
        self.scale
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }
}

/// A normalized set together with the map that reproduces the original set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalForm {
    pub set: IntSet,
    pub map: AffineMap,
}

impl NormalForm {
    pub fn reconstruct(&self) -> IntSet {
        self.set.apply(self.map).expect("normal form reconstructs its own source")
    }
}
