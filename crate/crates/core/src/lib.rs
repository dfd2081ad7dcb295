//! Restricted h-fold sumsets of finite integer sets.
//!
//! The crate provides the set model ([`IntSet`], [`AffineMap`], [`NormalForm`]),
//! a bitmap dynamic program for `h^A` with a brute-force oracle, a catalog of
//! closed-form cardinalities for deletion families `[0, k+e] \ D`, and an
//! exhaustive classifier for the inverse problem.

pub mod bitmap;
pub mod catalog;
pub mod classify;
pub mod error;
pub mod expr;
pub mod report;
pub mod set;
pub mod sumset;

pub use catalog::{CaseFormula, Catalog, CoverageReport, Family, HRegime, Prediction};
pub use classify::{
    classify_by_cardinality, verify_classification, verify_containment, ClassificationReport, EnumerationSpec,
    SearchOptions, Theorem, Verdict,
};
pub use error::{Error, Result};
pub use report::{Format, Render};
pub use set::{parse_set, AffineMap, IntSet, NormalForm};
pub use sumset::{
    layer_table, restricted_cardinality, restricted_sumset, restricted_sumset_naive, unrestricted_sumset, EngineConfig,
    SumLayers,
};
