//! Fixtures shared by the benchmarks in `benches/`.

use hsumset_core::IntSet;

/// `[0, k] \ {x}`: the dense shape the classification search mostly visits.
pub fn dense(k: i64, x: i64) -> IntSet {
    IntSet::interval_minus(0, k, &[x])
}

/// The first `k` triangular numbers: a sparse set whose window grows quadratically.
pub fn triangular(k: i64) -> IntSet {
    IntSet::from_values((0..k).map(|i| i * (i + 1) / 2)).0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_have_the_requested_size() {
        assert_eq!(dense(12, 5).len(), 12);
        assert_eq!(triangular(9).len(), 9);
        assert_eq!(triangular(4).to_string(), "0,1,3,6");
    }
}
