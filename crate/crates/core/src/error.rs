use thiserror::Error;

/// Errors raised by the set model, the sumset engine, the catalog and the classifier.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{op}: normalization undefined for sets with fewer than 2 elements (got {got})")]
    TooFewElements { op: &'static str, got: usize },

    #[error("affine map scale must be nonzero")]
    ZeroScale,

    #[error("integer overflow risk: {0}")]
    Overflow(String),

    #[error("bit window h*(max-min) = {width} exceeds the configured cap of {cap}")]
    WindowTooLarge { width: u64, cap: u64 },

    #[error("naive enumeration of {subsets} subsets exceeds the configured cap of {cap}")]
    NaiveCapExceeded { subsets: u64, cap: u64 },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("unknown theorem `{0}`")]
    UnknownTheorem(String),

    #[error("{what}: h = {h} outside the admissible regime `{regime}`")]
    HRegime { what: String, h: i64, regime: String },

    #[error("{what}: k = {k} below the threshold k >= {threshold} (h = {h})")]
    BelowThreshold { what: String, h: i64, k: i64, threshold: i64 },

    #[error("{family}: parameters {params} violate `{violated}`")]
    ParamOutOfRange { family: String, params: String, violated: String },

    #[error("{family}: parameters {params} are not covered by any case (nearest: {nearest})")]
    Uncovered { family: String, params: String, nearest: String },

    #[error("{family}: parameters {params} match conflicting cases: {cases}")]
    Ambiguous { family: String, params: String, cases: String },

    #[error("invalid argument: {0}")]
    Invalid(String),
}

impl Error {
    /// True for errors raised by a resource guard (overflow, window or enumeration caps).
    pub fn is_resource_guard(&self) -> bool {
        matches!(self, Error::Overflow(_) | Error::WindowTooLarge { .. } | Error::NaiveCapExceeded { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
