//! Restricted and unrestricted h-fold sumsets.
//!
//! The restricted sumset `h^A` (sums of exactly `h` distinct elements) is computed
//! with a layered 0/1 subset-sum DP: layer `j` is a bitmap of the sums of exactly
//! `j` distinct elements. After translating `A` to minimum 0 every layer lives in
//! the common window `[0, h*(max-min)]`, so adding an element is a plain
//! shift-or of one layer into the next. Elements are processed in the outer loop
//! and layers in descending order, which uses each element at most once.
//!
//! `restricted_sumset_naive` enumerates all `C(k, h)` subsets and serves as the
//! independent oracle for the DP.

use std::collections::BTreeSet;

use itertools::Itertools;

use crate::bitmap::Bitmap;
use crate::error::{Error, Result};
use crate::set::IntSet;

/// Resource limits for the engine.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EngineConfig {
    /// Maximum number of subsets the naive oracle may enumerate.
    pub naive_cap: u64,
    /// Maximum `h * (max - min)`, i.e. the highest bit index of the common window.
    pub window_cap: u64,
}

impl Default for EngineConfig {
    fn default() -> Self {
        Self { naive_cap: 10_000_000, window_cap: 1 << 30 }
    }
}

/// Per-layer achievable-sum bitmaps.
///
/// Bit `i` of layer `j` stands for the value `i + j * base`, where `base` is the
/// translation that moved the input set to minimum 0.
#[derive(Clone, Debug)]
pub struct SumLayers {
    base: i64,
    layers: Vec<Bitmap>,
    /// Highest set bit per layer (meaningless for empty layers).
    top: Vec<usize>,
    /// Number of elements inserted so far.
    count: usize,
}

impl SumLayers {
    /// Empty DP over elements in `[0, span]` with layers `0..=h`. Layer 0 is `{0}`.
    pub(crate) fn with_window(h: usize, span: usize, base: i64) -> Self {
        let width = h * span + 1;
        let mut layers: Vec<Bitmap> = (0..=h).map(|_| Bitmap::new(width)).collect();
        layers[0].set(0);
        Self { base, layers, top: vec![0; h + 1], count: 0 }
    }

    /// Adds one element, given relative to `base`.
    pub(crate) fn insert(&mut self, b: usize) {
        let h = self.depth();
        let upper = h.min(self.count + 1);
        for j in (1..=upper).rev() {
            let (lo, hi) = self.layers.split_at_mut(j);
            let src = &lo[j - 1];
            let live = self.top[j - 1] / 64 + 1;
            hi[0].or_shifted(src, b, live);
            let reach = self.top[j - 1] + b;
            if j > self.count || reach > self.top[j] {
                self.top[j] = reach;
            }
        }
        self.count += 1;
    }

    /// Largest layer index.
    pub fn depth(&self) -> usize {
        self.layers.len() - 1
    }

    /// Number of elements of `j^A`.
    pub fn layer_len(&self, j: usize) -> usize {
        self.layers[j].count_ones()
    }

    /// Materializes `j^A`.
    pub fn layer(&self, j: usize) -> IntSet {
        let shift = j as i64 * self.base;
        IntSet::from_sorted_unchecked(self.layers[j].ones().map(|i| i as i64 + shift).collect())
    }

    pub fn layers(&self) -> Vec<IntSet> {
        (0..=self.depth()).map(|j| self.layer(j)).collect()
    }
}

/// Checks the overflow and bit-window guards; returns `(min, span)`.
fn window_for(a: &IntSet, h: usize, cfg: &EngineConfig) -> Result<(i64, usize)> {
    let (min, max) = match (a.min_elem(), a.max_elem()) {
        (Some(lo), Some(hi)) => (lo, hi),
        _ => return Ok((0, 0)),
    };
    let h64 = h as i64;
    h64.checked_mul(a.max_abs().try_into().map_err(|_| Error::Overflow(format!("|{}| exceeds i64", a.max_abs())))?)
        .ok_or_else(|| Error::Overflow(format!("{h} * {} exceeds the 64-bit range", a.max_abs())))?;
    let span = max.checked_sub(min).ok_or_else(|| Error::Overflow(format!("diameter {max} - {min}")))?;
    let top = (span as u64).checked_mul(h as u64).ok_or_else(|| Error::Overflow(format!("window {h} * {span}")))?;
    if top > cfg.window_cap {
        return Err(Error::WindowTooLarge { width: top, cap: cfg.window_cap });
    }
    Ok((min, span as usize))
}

/// Layers `0..=h` of the restricted sumset DP.
pub fn layer_table(a: &IntSet, h: usize, cfg: &EngineConfig) -> Result<SumLayers> {
    let effective = h.min(a.len());
    let (min, span) = window_for(a, effective, cfg)?;
    // Layers above |A| stay empty, so the window only has to hold `effective` summands.
    let mut dp = SumLayers::with_window(effective, span, min);
    for v in a.iter() {
        dp.insert((v - min) as usize);
    }
    if h > effective {
        let width = dp.layers[0].len();
        dp.layers.extend((effective..h).map(|_| Bitmap::new(width)));
        dp.top.extend(std::iter::repeat_n(0, h - effective));
    }
    Ok(dp)
}

/// `h^A`: all sums of exactly `h` distinct elements. `0^A = {0}`, empty when `h > |A|`.
pub fn restricted_sumset(a: &IntSet, h: usize, cfg: &EngineConfig) -> Result<IntSet> {
    if h > a.len() {
        return Ok(IntSet::empty());
    }
    Ok(layer_table(a, h, cfg)?.layer(h))
}

/// `|h^A|` without materializing the set.
pub fn restricted_cardinality(a: &IntSet, h: usize, cfg: &EngineConfig) -> Result<usize> {
    if h > a.len() {
        return Ok(0);
    }
    Ok(layer_table(a, h, cfg)?.layer_len(h))
}

/// `hA`: all sums of `h` elements with repetition.
pub fn unrestricted_sumset(a: &IntSet, h: usize, cfg: &EngineConfig) -> Result<IntSet> {
    if a.is_empty() || h == 0 {
        return Err(Error::Invalid("unrestricted sumset needs |A| >= 1 and h >= 1".into()));
    }
    let (min, span) = window_for(a, h, cfg)?;
    let width = h * span + 1;
    let mut layers: Vec<Bitmap> = (0..=h).map(|_| Bitmap::new(width)).collect();
    layers[0].set(0);
    for v in a.iter() {
        let b = (v - min) as usize;
        // Ascending layers: layer j-1 already contains this element, so it may repeat.
        for j in 1..=h {
            let (lo, hi) = layers.split_at_mut(j);
            hi[0].or_shifted(&lo[j - 1], b, usize::MAX);
        }
    }
    let shift = h as i64 * min;
    Ok(IntSet::from_sorted_unchecked(layers[h].ones().map(|i| i as i64 + shift).collect()))
}

/// `C(n, r)`, saturating at `u64::MAX`.
pub fn binomial(n: u64, r: u64) -> u64 {
    if r > n {
        return 0;
    }
    let r = r.min(n - r);
    let mut acc: u128 = 1;
    for i in 0..r {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// `h^A` by explicit enumeration of all `h`-subsets. Refuses when `C(k, h)` exceeds the cap.
pub fn restricted_sumset_naive(a: &IntSet, h: usize, cfg: &EngineConfig) -> Result<IntSet> {
    if h > a.len() {
        return Ok(IntSet::empty());
    }
    let subsets = binomial(a.len() as u64, h as u64);
    if subsets > cfg.naive_cap {
        return Err(Error::NaiveCapExceeded { subsets, cap: cfg.naive_cap });
    }
    window_for(a, h, &EngineConfig { window_cap: u64::MAX, ..*cfg })?;
    let sums: BTreeSet<i64> = a.as_slice().iter().combinations(h).map(|c| c.into_iter().sum()).collect();
    Ok(IntSet::from_sorted_unchecked(sums.into_iter().collect()))
}

/// Lower bound `hk - h^2 + 1` on `|h^A|` for `1 <= h <= k`.
pub fn restricted_lower_bound(h: i64, k: i64) -> i64 {
    h * k - h * h + 1
}

/// `(sum of h largest) - (sum of h smallest) + 1`, the trivial upper bound on `|h^A|`.
pub fn restricted_span_bound(a: &IntSet, h: usize) -> i64 {
    if h > a.len() {
        return 0;
    }
    let lo: i64 = a.iter().take(h).sum();
    let hi: i64 = a.iter().rev().take(h).sum();
    hi - lo + 1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::set::AffineMap;
    use proptest::prelude::*;

    fn s(v: &[i64]) -> IntSet {
        IntSet::from_values(v.iter().copied()).0
    }

    fn cfg() -> EngineConfig {
        EngineConfig::default()
    }

    #[test]
    fn restricted_examples() {
        assert_eq!(restricted_sumset(&s(&[0, 1, 2, 3, 4]), 2, &cfg()).unwrap(), IntSet::interval(1, 7));
        let a = IntSet::interval_minus(0, 10, &[1]);
        let r = restricted_sumset(&a, 3, &cfg()).unwrap();
        assert_eq!(r, IntSet::interval(5, 27));
        assert_eq!(r.len(), 23);
        assert_eq!(restricted_sumset(&s(&[0, 1, 3]), 0, &cfg()).unwrap(), s(&[0]));
        assert_eq!(restricted_sumset(&s(&[-4, 9]), 0, &cfg()).unwrap(), s(&[0]));
        assert_eq!(restricted_sumset(&IntSet::empty(), 0, &cfg()).unwrap(), s(&[0]));
        assert_eq!(restricted_sumset(&s(&[0, 1, 3]), 5, &cfg()).unwrap(), IntSet::empty());
    }

    #[test]
    fn cardinality_examples() {
        let a = IntSet::interval_minus(0, 10, &[1]);
        assert_eq!(restricted_cardinality(&a, 3, &cfg()).unwrap(), 23);
        assert_eq!(restricted_cardinality(&s(&[0, 1, 2]), 3, &cfg()).unwrap(), 1);
        // triples of {0,1,4,6}: 5, 7, 10, 11
        assert_eq!(restricted_cardinality(&s(&[0, 1, 4, 6]), 3, &cfg()).unwrap(), 4);
    }

    #[test]
    fn unrestricted_examples() {
        assert_eq!(unrestricted_sumset(&s(&[0, 1]), 3, &cfg()).unwrap(), IntSet::interval(0, 3));
        assert_eq!(unrestricted_sumset(&s(&[0, 1, 3]), 2, &cfg()).unwrap(), s(&[0, 1, 2, 3, 4, 6]));
        let ap = IntSet::interval(0, 4);
        assert_eq!(unrestricted_sumset(&ap, 2, &cfg()).unwrap().len(), 2 * 5 - 2 + 1);
        assert!(unrestricted_sumset(&IntSet::empty(), 2, &cfg()).is_err());
        assert!(unrestricted_sumset(&ap, 0, &cfg()).is_err());
    }

    #[test]
    fn naive_examples() {
        assert_eq!(restricted_sumset_naive(&s(&[0, 1, 2, 3, 4]), 2, &cfg()).unwrap(), IntSet::interval(1, 7));
        assert_eq!(restricted_sumset_naive(&s(&[0, 1, 4, 6]), 2, &cfg()).unwrap(), s(&[1, 4, 5, 6, 7, 10]));
        assert_eq!(restricted_sumset_naive(&s(&[0, 1]), 3, &cfg()).unwrap(), IntSet::empty());
        assert_eq!(restricted_sumset_naive(&s(&[2, 5]), 0, &cfg()).unwrap(), s(&[0]));
    }

    #[test]
    fn naive_refuses_over_cap() {
        let small = EngineConfig { naive_cap: 9, ..cfg() };
        let a = IntSet::interval(0, 4);
        assert_eq!(restricted_sumset_naive(&a, 2, &small), Err(Error::NaiveCapExceeded { subsets: 10, cap: 9 }));
        assert!(restricted_sumset_naive(&a, 1, &small).is_ok());
    }

    #[test]
    fn layer_table_examples() {
        let t = layer_table(&s(&[0, 1, 3]), 2, &cfg()).unwrap();
        assert_eq!(t.layers(), vec![s(&[0]), s(&[0, 1, 3]), s(&[1, 3, 4])]);
        let t = layer_table(&s(&[0, 2]), 2, &cfg()).unwrap();
        assert_eq!(t.layers(), vec![s(&[0]), s(&[0, 2]), s(&[2])]);
        let t = layer_table(&IntSet::interval(0, 4), 2, &cfg()).unwrap();
        assert_eq!(t.layer(2), IntSet::interval(1, 7));
        let t = layer_table(&s(&[0, 5]), 4, &cfg()).unwrap();
        assert_eq!(t.layer(3), IntSet::empty());
        assert_eq!(t.layer(4), IntSet::empty());
    }

    #[test]
    fn negative_elements() {
        let a = s(&[-7, -2, 0, 5]);
        assert_eq!(restricted_sumset(&a, 2, &cfg()).unwrap(), restricted_sumset_naive(&a, 2, &cfg()).unwrap());
        assert_eq!(restricted_sumset(&a, 3, &cfg()).unwrap(), s(&[-9, -4, -2, 3]));
    }

    #[test]
    fn window_guard() {
        let tight = EngineConfig { window_cap: 100, ..cfg() };
        let a = s(&[0, 51]);
        assert!(restricted_sumset(&a, 1, &tight).is_ok());
        assert!(matches!(restricted_sumset(&a, 2, &tight), Err(Error::WindowTooLarge { .. })));
        let huge = s(&[0, i64::MAX / 2 + 1]);
        let open = EngineConfig { window_cap: u64::MAX, ..cfg() };
        assert!(matches!(restricted_sumset(&huge, 2, &open), Err(Error::Overflow(_))));
        assert!(restricted_sumset(&huge, 2, &open).unwrap_err().is_resource_guard());
    }

    #[test]
    fn bounds() {
        assert_eq!(restricted_lower_bound(2, 5), 7);
        assert_eq!(restricted_span_bound(&s(&[0, 1, 4, 6]), 2), 10 - 1 + 1);
        assert_eq!(binomial(12, 5), 792);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(200, 100), u64::MAX);
    }

    fn arb_set(max_len: usize) -> impl Strategy<Value = IntSet> {
        prop::collection::vec(-40i64..40, 0..=max_len).prop_map(|v| IntSet::from_values(v).0)
    }

    proptest! {
        #[test]
        fn dp_matches_naive(a in arb_set(12)) {
            for h in 0..=a.len() + 1 {
                prop_assert_eq!(
                    restricted_sumset(&a, h, &cfg()).unwrap(),
                    restricted_sumset_naive(&a, h, &cfg()).unwrap()
                );
            }
        }

        #[test]
        fn layers_match_each_restricted_sumset(a in arb_set(9), h in 0usize..8) {
            let t = layer_table(&a, h, &cfg()).unwrap();
            for j in 0..=h {
                prop_assert_eq!(t.layer(j), restricted_sumset_naive(&a, j, &cfg()).unwrap());
            }
        }

        #[test]
        fn duality(a in arb_set(12)) {
            let k = a.len();
            let sigma = a.total().unwrap();
            for h in 0..=k {
                let fwd = restricted_sumset(&a, h, &cfg()).unwrap();
                let back = restricted_sumset(&a, k - h, &cfg()).unwrap();
                prop_assert_eq!(fwd.len(), back.len());
                prop_assert_eq!(back, fwd.reflect(sigma));
            }
        }

        #[test]
        fn affine_covariance(a in arb_set(9), scale in -5i64..=5, shift in -30i64..30, h in 0usize..6) {
            prop_assume!(scale != 0);
            let m = AffineMap::new(scale, shift).unwrap();
            let lhs = restricted_sumset(&a.apply(m).unwrap(), h, &cfg()).unwrap();
            let rhs = restricted_sumset(&a, h, &cfg()).unwrap()
                .apply(AffineMap::new(scale, h as i64 * shift).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn monotone_in_the_set(a in arb_set(8), extra in prop::collection::vec(-40i64..40, 0..4), h in 0usize..6) {
            let b = IntSet::from_values(a.iter().chain(extra)).0;
            let small = restricted_sumset(&a, h, &cfg()).unwrap();
            let big = restricted_sumset(&b, h, &cfg()).unwrap();
            prop_assert!(small.is_subset(&big));
        }

        #[test]
        fn cardinality_bounds(a in arb_set(12)) {
            let k = a.len() as i64;
            for h in 1..=a.len() {
                let n = restricted_cardinality(&a, h, &cfg()).unwrap() as i64;
                prop_assert!(n >= restricted_lower_bound(h as i64, k));
                prop_assert!(n <= restricted_span_bound(&a, h));
            }
        }

        #[test]
        fn unrestricted_matches_multiset_enumeration(a in arb_set(7), h in 1usize..5) {
            prop_assume!(!a.is_empty());
            let want: BTreeSet<i64> = a.as_slice().iter()
                .combinations_with_replacement(h)
                .map(|c| c.into_iter().sum())
                .collect();
            let got = unrestricted_sumset(&a, h, &cfg()).unwrap();
            prop_assert_eq!(got.into_vec(), want.into_iter().collect::<Vec<_>>());
        }
    }
}
