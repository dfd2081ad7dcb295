//! Executable catalog of closed-form `|h^A|` formulas for deletion families
//! `[0, k+e] \ D`, with a crosscheck against the sumset engine.

mod families;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::expr::{Domain, Env, Lin};
use crate::set::IntSet;
use crate::sumset::{restricted_cardinality, EngineConfig};

/// Which `h` a family's formulas are stated for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HRegime {
    Exactly(i64),
    AtLeast(i64),
}

impl HRegime {
    pub fn admits(&self, h: i64) -> bool {
        match *self {
            HRegime::Exactly(v) => h == v,
            HRegime::AtLeast(v) => h >= v,
        }
    }

    /// Smallest admissible `h`.
    pub fn min_h(&self) -> i64 {
        match *self {
            HRegime::Exactly(v) | HRegime::AtLeast(v) => v,
        }
    }
}

impl fmt::Display for HRegime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HRegime::Exactly(v) => write!(f, "h = {v}"),
            HRegime::AtLeast(v) => write!(f, "h >= {v}"),
        }
    }
}

/// Free parameter of a family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Param {
    X,
    Y,
    Z,
}

impl Param {
    fn from_char(c: char) -> Self {
        match c {
            'x' => Param::X,
            'y' => Param::Y,
            'z' => Param::Z,
            _ => unreachable!("family parameters are drawn from x, y, z"),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Param::X => "x",
            Param::Y => "y",
            Param::Z => "z",
        }
    }
}

/// One case of a family's case split.
#[derive(Clone, Debug)]
pub struct CaseFormula {
    pub label: String,
    pub domain: Domain,
    pub formula: Lin,
    /// The formula as written in the source statement.
    pub anchor: String,
    /// Set when the encoded formula is a corrected reading of the stated one.
    pub stated: Option<Lin>,
    /// Case-specific lower bound on `k`, when looser than the family's.
    pub k_min: Option<Lin>,
}

impl CaseFormula {
    fn active(&self, env: &Env) -> bool {
        self.k_min.is_none_or(|m| env.k >= m.eval(env))
    }
}

/// A deletion family `[0, k+e] \ D` with its case split.
#[derive(Clone, Debug)]
pub struct Family {
    pub id: String,
    pub extension: i64,
    pub deleted: Vec<Lin>,
    deleted_src: Vec<String>,
    pub params: Vec<Param>,
    pub regime: HRegime,
    pub k_min: Lin,
    /// Declared parameter ranges.
    pub range: Domain,
    pub dual: Option<String>,
    pub cases: Vec<CaseFormula>,
}

/// Value predicted by the catalog and the case that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub value: i64,
    pub case: String,
    /// Further cases that match the same tuple with the same value.
    pub also: Vec<String>,
}

impl Family {
    fn build(spec: &families::FamilySpec) -> Result<Self> {
        let mut cases = Vec::with_capacity(spec.cases.len());
        for cs in spec.cases {
            let domain =
                if cs.unless.is_empty() { Domain::parse(cs.when)? } else { Domain::parse_except(cs.when, cs.unless)? };
            cases.push(CaseFormula {
                label: cs.label.to_string(),
                domain,
                formula: Lin::parse(cs.formula)?,
                anchor: cs.stated.unwrap_or(cs.formula).to_string(),
                stated: cs.stated.map(Lin::parse).transpose()?,
                k_min: cs.k_min.map(Lin::parse).transpose()?,
            });
        }
        Ok(Family {
            id: spec.id.to_string(),
            extension: spec.extension,
            deleted: spec.deleted.iter().map(|d| Lin::parse(d)).collect::<Result<_>>()?,
            deleted_src: spec.deleted.iter().map(|d| d.to_string()).collect(),
            params: spec.params.chars().map(Param::from_char).collect(),
            regime: spec.regime,
            k_min: Lin::parse(spec.k_min)?,
            range: Domain::parse(spec.range)?,
            dual: spec.dual.map(str::to_string),
            cases,
        })
    }

    /// `[0,k+e] \ {..}` with symbolic deleted positions.
    pub fn shape(&self) -> String {
        let top = match self.extension {
            0 => "k".to_string(),
            e => format!("k+{e}"),
        };
        format!("[0,{top}] \\ {{{}}}", self.deleted_src.join(","))
    }

    pub fn threshold(&self, h: i64) -> i64 {
        self.k_min.eval(&Env { h, ..Env::default() })
    }

    /// Checks that `(h, k)` lies in the family's regime and above its threshold.
    pub fn check_hk(&self, h: i64, k: i64) -> Result<()> {
        if !self.regime.admits(h) {
            return Err(Error::HRegime { what: self.id.clone(), h, regime: self.regime.to_string() });
        }
        let threshold = self.threshold(h);
        if k < threshold {
            return Err(Error::BelowThreshold { what: self.id.clone(), h, k, threshold });
        }
        Ok(())
    }

    fn env(&self, h: i64, k: i64, params: &[i64]) -> Env {
        let mut env = Env { h, k, ..Env::default() };
        for (p, v) in self.params.iter().zip(params) {
            match p {
                Param::X => env.x = *v,
                Param::Y => env.y = *v,
                Param::Z => env.z = *v,
            }
        }
        env
    }

    pub fn format_params(&self, params: &[i64]) -> String {
        self.params.iter().zip(params).map(|(p, v)| format!("{}={v}", p.name())).collect::<Vec<_>>().join(", ")
    }

    fn check_params(&self, k: i64, params: &[i64]) -> Result<Env> {
        if params.len() != self.params.len() {
            return Err(Error::Invalid(format!(
                "{} takes {} parameter(s) ({}), got {}",
                self.id,
                self.params.len(),
                self.params.iter().map(Param::name).collect::<String>(),
                params.len()
            )));
        }
        let env = self.env(0, k, params);
        if let Some(violated) = self.range.first_violation(&env) {
            return Err(Error::ParamOutOfRange {
                family: self.id.clone(),
                params: self.format_params(params),
                violated,
            });
        }
        Ok(env)
    }

    /// Deleted elements, ascending.
    pub fn deleted_at(&self, k: i64, params: &[i64]) -> Vec<i64> {
        let env = self.env(0, k, params);
        let mut d: Vec<i64> = self.deleted.iter().map(|l| l.eval(&env)).collect();
        d.sort_unstable();
        d
    }

    /// The concrete set `[0, k+e] \ D`.
    pub fn instantiate(&self, k: i64, params: &[i64]) -> Result<IntSet> {
        self.check_params(k, params)?;
        let d = self.deleted_at(k, params);
        let top = k + self.extension;
        if d.windows(2).any(|w| w[0] == w[1]) || d.iter().any(|&v| v <= 0 || v >= top) {
            return Err(Error::ParamOutOfRange {
                family: self.id.clone(),
                params: self.format_params(params),
                violated: format!("deleted positions must be distinct and inside [1, {}]", top - 1),
            });
        }
        Ok(IntSet::interval_minus(0, top, &d))
    }

    /// Every admissible parameter tuple at `k`, in lexicographic order.
    pub fn enumerate_params(&self, k: i64) -> Vec<Vec<i64>> {
        let hi = k + self.extension;
        let mut out = Vec::new();
        let mut cur = vec![0i64; self.params.len()];
        self.sweep(k, hi, 0, &mut cur, &mut out);
        out
    }

    fn sweep(&self, k: i64, hi: i64, depth: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if depth == cur.len() {
            if self.range.holds(&self.env(0, k, cur)) {
                out.push(cur.clone());
            }
            return;
        }
        for v in 1..hi {
            cur[depth] = v;
            self.sweep(k, hi, depth + 1, cur, out);
        }
    }

    /// Cases whose domain contains the tuple, with their values.
    pub fn matching_cases(&self, h: i64, k: i64, params: &[i64]) -> Vec<(&CaseFormula, i64)> {
        let env = self.env(h, k, params);
        self.cases
            .iter()
            .filter(|c| c.active(&env) && c.domain.holds(&env))
            .map(|c| (c, c.formula.eval(&env)))
            .collect()
    }

    /// Labels of the cases closest to the tuple (smallest total constraint violation).
    pub fn nearest_cases(&self, h: i64, k: i64, params: &[i64]) -> Vec<String> {
        let env = self.env(h, k, params);
        let dists: Vec<(i64, &str)> =
            self.cases.iter().filter(|c| c.active(&env)).map(|c| (c.domain.distance(&env), c.label.as_str())).collect();
        let best = dists.iter().map(|d| d.0).min().unwrap_or(0);
        dists.into_iter().filter(|d| d.0 == best).map(|d| d.1.to_string()).collect()
    }

    /// The predicted `|h^A|` for the tuple.
    pub fn predicted_cardinality(&self, h: i64, k: i64, params: &[i64]) -> Result<Prediction> {
        self.check_hk(h, k)?;
        self.check_params(k, params)?;
        let hits = self.matching_cases(h, k, params);
        let Some(&(first, value)) = hits.first() else {
            return Err(Error::Uncovered {
                family: self.id.clone(),
                params: self.format_params(params),
                nearest: self.nearest_cases(h, k, params).join(", "),
            });
        };
        if hits.iter().any(|(_, v)| *v != value) {
            return Err(Error::Ambiguous {
                family: self.id.clone(),
                params: self.format_params(params),
                cases: hits.iter().map(|(c, v)| format!("{} -> {v}", c.label)).collect::<Vec<_>>().join(", "),
            });
        }
        Ok(Prediction {
            value,
            case: first.label.clone(),
            also: hits[1..].iter().map(|(c, _)| c.label.clone()).collect(),
        })
    }

    pub fn case(&self, label: &str) -> Option<&CaseFormula> {
        self.cases.iter().find(|c| c.label == label)
    }
}

/// All families, built once.
pub struct Catalog {
    families: Vec<Family>,
}

impl Catalog {
    pub fn standard() -> &'static Catalog {
        static CATALOG: OnceLock<Catalog> = OnceLock::new();
        CATALOG.get_or_init(|| Catalog {
            families: families::FAMILIES
                .iter()
                .map(|s| Family::build(s).unwrap_or_else(|e| panic!("family {}: {e}", s.id)))
                .collect(),
        })
    }

    pub fn families(&self) -> &[Family] {
        &self.families
    }

    pub fn family(&self, id: &str) -> Result<&Family> {
        self.families.iter().find(|f| f.id == id).ok_or_else(|| Error::UnknownFamily(id.to_string()))
    }

    /// Flat view used by the catalog dump.
    pub fn entries(&self) -> Vec<CatalogEntry> {
        let mut out = Vec::new();
        for f in &self.families {
            for c in &f.cases {
                let k_min = match c.k_min {
                    Some(m) => m.to_string(),
                    None => f.k_min.to_string(),
                };
                out.push(CatalogEntry {
                    family: f.id.clone(),
                    shape: f.shape(),
                    case: c.label.clone(),
                    h_regime: f.regime.to_string(),
                    k_min,
                    params: f.range.render().into_iter().next().unwrap_or_default(),
                    domain: c.domain.render(),
                    excluding: (!c.domain.none_of.is_empty()).then(|| c.domain.render_none_of()),
                    formula: c.formula.to_string(),
                    anchor: c.anchor.clone(),
                    corrected: c.stated.is_some(),
                });
            }
        }
        out
    }
}

/// One row of the catalog dump.
#[derive(Clone, Debug, Serialize)]
pub struct CatalogEntry {
    pub family: String,
    pub shape: String,
    pub case: String,
    pub h_regime: String,
    pub k_min: String,
    /// The family's declared parameter ranges.
    pub params: Vec<String>,
    /// Alternatives of interval constraints; the case applies when any alternative holds.
    pub domain: Vec<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub excluding: Option<String>,
    pub formula: String,
    pub anchor: String,
    pub corrected: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub params: String,
    pub set: String,
    pub case: String,
    pub predicted: i64,
    pub actual: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UncoveredTuple {
    pub params: String,
    pub deleted: Vec<i64>,
    pub actual: i64,
    pub nearest: Vec<String>,
    /// A family and case that cover the same set, if any.
    pub covered_by: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AmbiguousTuple {
    pub params: String,
    pub actual: i64,
    /// `(case, value)` for every matching case.
    pub cases: Vec<(String, i64)>,
}

/// Consistent overlap: several cases match and agree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Overlap {
    pub params: String,
    pub cases: Vec<String>,
}

/// A corrected case checked with its formula as originally stated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StatedFormulaCheck {
    pub case: String,
    pub stated: String,
    pub encoded: String,
    pub tuples: usize,
    /// Tuples where the stated formula disagrees with the engine.
    pub stated_mismatches: Vec<Mismatch>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoverageReport {
    pub family: String,
    pub h: i64,
    pub k: i64,
    pub tuples: usize,
    pub covered: usize,
    pub mismatches: Vec<Mismatch>,
    pub uncovered: Vec<UncoveredTuple>,
    pub ambiguous: Vec<AmbiguousTuple>,
    pub overlaps: Vec<Overlap>,
    pub stated_checks: Vec<StatedFormulaCheck>,
    /// Threshold note when cases carry different lower bounds on `k`.
    pub threshold_note: Option<String>,
}

impl CoverageReport {
    /// No mismatches on covered tuples.
    pub fn reproduced(&self) -> bool {
        self.mismatches.is_empty()
    }

    /// The cases tile the parameter domain exactly.
    pub fn tiles(&self) -> bool {
        self.uncovered.is_empty() && self.ambiguous.is_empty()
    }
}

enum Outcome {
    Covered { case: String, predicted: i64, also: Vec<String> },
    Uncovered,
    Ambiguous(Vec<(String, i64)>),
}

/// Compares every tuple's predicted cardinality against the sumset engine.
pub fn crosscheck(family: &Family, h: i64, k: i64, cfg: &EngineConfig) -> Result<CoverageReport> {
    family.check_hk(h, k)?;
    let tuples = family.enumerate_params(k);
    let rows: Vec<(Vec<i64>, IntSet, i64, Outcome)> = tuples
        .par_iter()
        .map(|p| -> Result<_> {
            let set = family.instantiate(k, p)?;
            let actual = restricted_cardinality(&set, h as usize, cfg)? as i64;
            let hits = family.matching_cases(h, k, p);
            let outcome = match hits.first() {
                None => Outcome::Uncovered,
                Some(&(c, v)) if hits.iter().all(|(_, w)| *w == v) => Outcome::Covered {
                    case: c.label.clone(),
                    predicted: v,
                    also: hits[1..].iter().map(|(c, _)| c.label.clone()).collect(),
                },
                Some(_) => Outcome::Ambiguous(hits.iter().map(|(c, v)| (c.label.clone(), *v)).collect()),
            };
            Ok((p.clone(), set, actual, outcome))
        })
        .collect::<Result<_>>()?;

    let mut report = CoverageReport {
        family: family.id.clone(),
        h,
        k,
        tuples: rows.len(),
        covered: 0,
        mismatches: Vec::new(),
        uncovered: Vec::new(),
        ambiguous: Vec::new(),
        overlaps: Vec::new(),
        stated_checks: Vec::new(),
        threshold_note: threshold_note(family, h, k),
    };
    let mut stated: BTreeMap<String, StatedFormulaCheck> = BTreeMap::new();
    for (p, set, actual, outcome) in rows {
        let params = family.format_params(&p);
        match outcome {
            Outcome::Covered { case, predicted, also } => {
                report.covered += 1;
                if predicted != actual {
                    report.mismatches.push(Mismatch {
                        params: params.clone(),
                        set: set.to_string(),
                        case: case.clone(),
                        predicted,
                        actual,
                    });
                }
                if !also.is_empty() {
                    let mut cases = vec![case.clone()];
                    cases.extend(also);
                    report.overlaps.push(Overlap { params: params.clone(), cases });
                }
                let cf = family.case(&case).expect("matched case exists");
                if let Some(st) = cf.stated {
                    let entry = stated.entry(case.clone()).or_insert_with(|| StatedFormulaCheck {
                        case: case.clone(),
                        stated: st.to_string(),
                        encoded: cf.formula.to_string(),
                        tuples: 0,
                        stated_mismatches: Vec::new(),
                    });
                    entry.tuples += 1;
                    let value = st.eval(&family.env(h, k, &p));
                    if value != actual {
                        entry.stated_mismatches.push(Mismatch {
                            params,
                            set: set.to_string(),
                            case,
                            predicted: value,
                            actual,
                        });
                    }
                }
            }
            Outcome::Uncovered => report.uncovered.push(UncoveredTuple {
                params,
                deleted: family.deleted_at(k, &p),
                actual,
                nearest: family.nearest_cases(h, k, &p),
                covered_by: None,
            }),
            Outcome::Ambiguous(cases) => report.ambiguous.push(AmbiguousTuple { params, actual, cases }),
        }
    }
    report.stated_checks = stated.into_values().collect();
    for u in &mut report.uncovered {
        u.covered_by = covered_elsewhere(family, h, k, &u.deleted);
    }
    Ok(report)
}

fn threshold_note(family: &Family, h: i64, k: i64) -> Option<String> {
    let env = Env { h, k, ..Env::default() };
    let looser: Vec<(&str, i64)> =
        family.cases.iter().filter_map(|c| c.k_min.map(|m| (c.label.as_str(), m.eval(&env)))).collect();
    if looser.is_empty() {
        return None;
    }
    let labels = looser.iter().map(|l| l.0).collect::<Vec<_>>().join(", ");
    let lo = looser.iter().map(|l| l.1).min().unwrap_or(0);
    Some(format!("binding threshold k >= {} (cases {labels} are stated from k >= {lo})", family.threshold(h)))
}

/// Looks for another family with the same extension that covers the same deleted set.
fn covered_elsewhere(family: &Family, h: i64, k: i64, deleted: &[i64]) -> Option<String> {
    for other in Catalog::standard().families() {
        if other.id == family.id || other.extension != family.extension || other.check_hk(h, k).is_err() {
            continue;
        }
        for p in other.enumerate_params(k) {
            if other.deleted_at(k, &p) == deleted {
                if let Ok(pred) = other.predicted_cardinality(h, k, &p) {
                    return Some(format!("{} ({}) case {}", other.id, other.format_params(&p), pred.case));
                }
            }
        }
    }
    None
}

/// A tuple whose prediction differs from the reflected tuple's prediction in the dual family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualDisagreement {
    pub params: String,
    pub dual_params: String,
    pub value: i64,
    pub dual_value: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DualReport {
    pub family: String,
    pub dual: String,
    pub h: i64,
    pub k: i64,
    /// Pairs where both sides have a prediction.
    pub compared: usize,
    pub disagreements: Vec<DualDisagreement>,
}

/// Reflects each tuple through `t -> k+e-t` and compares predictions with the dual family.
pub fn dual_consistency(family: &Family, h: i64, k: i64) -> Result<Option<DualReport>> {
    let Some(dual_id) = &family.dual else { return Ok(None) };
    let dual = Catalog::standard().family(dual_id)?;
    family.check_hk(h, k)?;
    dual.check_hk(h, k)?;
    let top = k + family.extension;
    let index: BTreeMap<Vec<i64>, Vec<i64>> =
        dual.enumerate_params(k).into_iter().map(|p| (dual.deleted_at(k, &p), p)).collect();
    let mut report =
        DualReport { family: family.id.clone(), dual: dual.id.clone(), h, k, compared: 0, disagreements: Vec::new() };
    for p in family.enumerate_params(k) {
        let mut reflected: Vec<i64> = family.deleted_at(k, &p).iter().map(|d| top - d).collect();
        reflected.sort_unstable();
        let Some(q) = index.get(&reflected) else { continue };
        let (Ok(a), Ok(b)) = (family.predicted_cardinality(h, k, &p), dual.predicted_cardinality(h, k, q)) else {
            continue;
        };
        report.compared += 1;
        if a.value != b.value {
            report.disagreements.push(DualDisagreement {
                params: family.format_params(&p),
                dual_params: dual.format_params(q),
                value: a.value,
                dual_value: b.value,
            });
        }
    }
    Ok(Some(report))
}

/// The `(h, k)` grid used for catalog verification: each admissible `h` in
/// `h_values` with `k` at the family's threshold, threshold + 1 and threshold + 2.
pub fn verification_grid(family: &Family, h_values: &[i64]) -> Vec<(i64, i64)> {
    let mut out = Vec::new();
    for &h in h_values {
        if !family.regime.admits(h) {
            continue;
        }
        let t = family.threshold(h);
        out.extend((t..=t + 2).map(|k| (h, k)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cat() -> &'static Catalog {
        Catalog::standard()
    }

    #[test]
    fn catalog_builds_with_all_families() {
        let ids: Vec<&str> = cat().families().iter().map(|f| f.id.as_str()).collect();
        assert_eq!(ids.len(), 21);
        for f in cat().families() {
            assert_eq!(f.deleted.len() as i64, f.extension + 1, "{}", f.id);
            if let Some(d) = &f.dual {
                assert!(cat().family(d).is_ok(), "{} dual {d}", f.id);
            }
        }
        assert!(matches!(cat().family("nope"), Err(Error::UnknownFamily(_))));
    }

    #[test]
    fn instantiate_examples() {
        let f = cat().family("one-deletion").unwrap();
        assert_eq!(f.instantiate(10, &[1]).unwrap(), IntSet::interval_minus(0, 10, &[1]));
        let f = cat().family("pair-x-k").unwrap();
        assert_eq!(f.instantiate(12, &[5]).unwrap(), IntSet::interval_minus(0, 13, &[5, 12]));
        let f = cat().family("triple-x-x1-x2").unwrap();
        let s = f.instantiate(13, &[4]).unwrap();
        assert_eq!(s, IntSet::interval_minus(0, 15, &[4, 5, 6]));
        assert_eq!(s.len(), 13);
    }

    #[test]
    fn instantiate_rejects_out_of_range() {
        let f = cat().family("one-deletion").unwrap();
        match f.instantiate(10, &[10]) {
            Err(Error::ParamOutOfRange { violated, .. }) => assert_eq!(violated, "1 <= x <= k-1"),
            other => panic!("{other:?}"),
        }
        assert!(f.instantiate(10, &[0]).is_err());
        assert!(f.instantiate(10, &[1, 2]).is_err());
        let g = cat().family("general-pair").unwrap();
        assert!(matches!(g.instantiate(15, &[3, 5]), Err(Error::ParamOutOfRange { .. })));
    }

    #[test]
    fn predicted_examples() {
        let f = cat().family("one-deletion").unwrap();
        let p = f.predicted_cardinality(3, 10, &[1]).unwrap();
        assert_eq!((p.value, p.case.as_str()), (23, "i"));
        let p = f.predicted_cardinality(3, 10, &[3]).unwrap();
        assert_eq!((p.value, p.case.as_str()), (24, "iii"));
        let p = f.predicted_cardinality(3, 10, &[5]).unwrap();
        assert_eq!((p.value, p.case.as_str()), (25, "iv"));
        let f = cat().family("pair-x-km1").unwrap();
        let p = f.predicted_cardinality(3, 13, &[9]).unwrap();
        assert_eq!((p.value, p.case.as_str()), (35, "iv.2"));
    }

    #[test]
    fn predicted_refuses_outside_hypotheses() {
        let f = cat().family("one-deletion").unwrap();
        assert!(matches!(f.predicted_cardinality(3, 9, &[1]), Err(Error::BelowThreshold { threshold: 10, .. })));
        assert!(matches!(f.predicted_cardinality(2, 10, &[1]), Err(Error::HRegime { .. })));
        let g = cat().family("h3-x-x1-z").unwrap();
        assert!(matches!(g.predicted_cardinality(4, 20, &[2, 5]), Err(Error::HRegime { .. })));
    }

    #[test]
    fn enumerate_examples() {
        let f = cat().family("one-deletion").unwrap();
        assert_eq!(f.enumerate_params(10), (1..=9).map(|x| vec![x]).collect::<Vec<_>>());
        let f = cat().family("pair-x-x1").unwrap();
        assert_eq!(f.enumerate_params(12), (1..=11).map(|x| vec![x]).collect::<Vec<_>>());
        let f = cat().family("general-pair").unwrap();
        let got = f.enumerate_params(15);
        let mut want = Vec::new();
        for x in 3..=13 {
            for y in 3..=13 {
                if y - x >= 3 {
                    want.push(vec![x, y]);
                }
            }
        }
        assert_eq!(got, want);
    }

    #[test]
    fn enumerated_sets_are_normalized_k_sets() {
        for f in cat().families() {
            let h = f.regime.min_h();
            let k = f.threshold(h);
            for p in f.enumerate_params(k) {
                let s = f.instantiate(k, &p).unwrap();
                assert_eq!(s.len() as i64, k, "{} {:?}", f.id, p);
                assert_eq!(s.min_elem(), Some(0));
                assert_eq!(s.gcd_of_differences().unwrap(), 1);
            }
        }
    }

    #[test]
    fn crosscheck_small_examples() {
        let cfg = EngineConfig::default();
        let r = crosscheck(cat().family("one-deletion").unwrap(), 3, 10, &cfg).unwrap();
        assert_eq!(r.tuples, 9);
        assert!(r.reproduced() && r.tiles(), "{r:?}");
        let r = crosscheck(cat().family("pair-x-x2").unwrap(), 4, 15, &cfg).unwrap();
        assert!(r.reproduced() && r.tiles(), "{r:?}");
    }

    #[test]
    fn dump_has_one_entry_per_case() {
        let n: usize = cat().families().iter().map(|f| f.cases.len()).sum();
        let entries = cat().entries();
        assert_eq!(entries.len(), n);
        let e = &entries[0];
        assert_eq!(e.family, "one-deletion");
        assert_eq!(e.formula, "hk-h^2+x+1");
        assert_eq!(e.domain, vec![vec!["1 <= x <= h-1".to_string()]]);
        assert_eq!(e.k_min, "3h+1");
    }

    #[test]
    fn cases_stated_from_a_lower_threshold_hold_below_the_family_threshold() {
        let f = cat().family("h3-general-triple").unwrap();
        let cfg = EngineConfig::default();
        for k in [11, 12] {
            let mut checked = 0;
            for p in f.enumerate_params(k) {
                let env = f.env(3, k, &p);
                for c in f.cases.iter().filter(|c| c.k_min.is_some() && c.active(&env) && c.domain.holds(&env)) {
                    let set = f.instantiate(k, &p).unwrap();
                    let actual = restricted_cardinality(&set, 3, &cfg).unwrap() as i64;
                    assert_eq!(c.formula.eval(&env), actual, "case {} at k={k}, {}", c.label, f.format_params(&p));
                    checked += 1;
                }
            }
            assert!(checked > 0);
        }
        let r = crosscheck(f, 3, 13, &cfg).unwrap();
        assert!(r.threshold_note.as_deref().is_some_and(|n| n.contains("k >= 13") && n.contains("k >= 11")));
    }
}
