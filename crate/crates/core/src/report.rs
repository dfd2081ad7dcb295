//! JSON, CSV and plain-text renderings of the run reports.
//!
//! JSON is the machine contract: pretty-printed, keys in declaration order, one
//! trailing newline. CSV has one row per listed item. Plain text is meant for
//! terminals. Timing fields are `Option`s so callers can redact them and get
//! byte-stable output.

use std::fmt::{self, Write as _};
use std::str::FromStr;

use serde::Serialize;

use crate::catalog::{CatalogEntry, CoverageReport};
use crate::classify::{ClassificationReport, ContainmentReport};
use crate::error::{Error, Result};
use crate::set::IntSet;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    #[default]
    Plain,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "plain" | "text" => Ok(Format::Plain),
            other => Err(Error::Parse(format!("unknown output format `{other}` (expected json, csv or plain)"))),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Csv => "csv",
            Format::Plain => "plain",
        })
    }
}

/// A report with three renderings.
pub trait Render {
    fn json(&self) -> String;
    fn csv(&self) -> String;
    fn plain(&self) -> String;

    fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.json(),
            Format::Csv => self.csv(),
            Format::Plain => self.plain(),
        }
    }
}

fn pretty<T: Serialize + ?Sized>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize infallibly");
    s.push('\n');
    s
}

fn csv_table<R: IntoIterator<Item = Vec<String>>>(header: &[&str], rows: R) -> String {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    w.write_record(header).expect("in-memory csv write");
    for row in rows {
        w.write_record(&row).expect("in-memory csv write");
    }
    String::from_utf8(w.into_inner().expect("in-memory csv flush")).expect("csv output is utf-8")
}

/// `{}`, `{5}`, `a..b` for intervals of two or more elements, else `{a,b,..}`.
pub fn compact(set: &IntSet) -> String {
    match (set.min_elem(), set.max_elem()) {
        (Some(lo), Some(hi)) if set.len() >= 2 && set.is_interval() => format!("{lo}..{hi}"),
        _ => format!("{{{set}}}"),
    }
}

/// Output of `compute`: one restricted sumset.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComputeResult {
    pub set: IntSet,
    pub h: usize,
    pub cardinality: usize,
    pub sumset: IntSet,
}

impl ComputeResult {
    pub fn new(set: IntSet, h: usize, sumset: IntSet) -> Self {
        Self { set, h, cardinality: sumset.len(), sumset }
    }
}

impl Render for ComputeResult {
    fn json(&self) -> String {
        pretty(self)
    }

    fn csv(&self) -> String {
        csv_table(
            &["set", "h", "cardinality", "sumset"],
            [vec![self.set.to_string(), self.h.to_string(), self.cardinality.to_string(), self.sumset.to_string()]],
        )
    }

    fn plain(&self) -> String {
        format!("{} ({})\n", compact(&self.sumset), self.cardinality)
    }
}

/// A bare list of sets.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct SetList(pub Vec<IntSet>);

impl Render for SetList {
    fn json(&self) -> String {
        pretty(self)
    }

    fn csv(&self) -> String {
        csv_table(&["set"], self.0.iter().map(|s| vec![s.to_string()]))
    }

    fn plain(&self) -> String {
        self.0.iter().map(|s| format!("{s}\n")).collect()
    }
}

fn ms(wall_ms: Option<u64>) -> String {
    wall_ms.map(|t| format!(", {t} ms")).unwrap_or_default()
}

impl Render for ClassificationReport {
    fn json(&self) -> String {
        pretty(self)
    }

    fn csv(&self) -> String {
        let theorem = self.theorem.clone().unwrap_or_default();
        let rows = self.found.iter().map(|s| {
            let listed = match &self.expected {
                Some(exp) => exp.binary_search(s).is_ok().to_string(),
                None => String::new(),
            };
            vec![
                theorem.clone(),
                self.h.to_string(),
                self.k.to_string(),
                self.dmax.to_string(),
                self.target.to_string(),
                s.to_string(),
                listed,
            ]
        });
        csv_table(&["theorem", "h", "k", "dmax", "target", "set", "listed"], rows)
    }

    fn plain(&self) -> String {
        let mut out = String::new();
        let title = self.theorem.as_deref().unwrap_or("classify");
        let _ = writeln!(out, "{title}: h={} k={} target={} dmax={}", self.h, self.k, self.target, self.dmax);
        if let (Some(v), Some(exp)) = (self.verdict, &self.expected) {
            let _ = writeln!(out, "verdict: {v} (found {}, expected {})", self.found.len(), exp.len());
        } else {
            let _ = writeln!(out, "found {}", self.found.len());
        }
        let _ = writeln!(out, "scanned {} sets, pruned {} branches{}", self.scanned, self.pruned, ms(self.wall_ms));
        for s in &self.found {
            let _ = writeln!(out, "  {s}");
        }
        for s in self.missing() {
            let _ = writeln!(out, "  missing {s}");
        }
        for s in self.extra() {
            let _ = writeln!(out, "  unlisted {s}");
        }
        out
    }
}

impl Render for ContainmentReport {
    fn json(&self) -> String {
        pretty(self)
    }

    fn csv(&self) -> String {
        let rows = self.violators.iter().map(|s| {
            vec![
                self.h.to_string(),
                self.k.to_string(),
                self.c.to_string(),
                self.dmax.to_string(),
                self.bound.to_string(),
                s.to_string(),
            ]
        });
        csv_table(&["h", "k", "c", "dmax", "bound", "violator"], rows)
    }

    fn plain(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "containment: h={} k={} c={} target={} dmax={}",
            self.h, self.k, self.c, self.target, self.dmax
        );
        let verdict = if self.holds() { "no violators" } else { "VIOLATED" };
        let _ = writeln!(
            out,
            "{verdict}: {} sets with the target cardinality, {} outside [0, {}]",
            self.found,
            self.violators.len(),
            self.bound
        );
        let _ = writeln!(out, "scanned {} sets, pruned {} branches{}", self.scanned, self.pruned, ms(self.wall_ms));
        for s in &self.violators {
            let _ = writeln!(out, "  {s}");
        }
        out
    }
}

/// Crosscheck reports of one `catalog` run plus the `(family, h, k)` combinations it skipped.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CatalogRun {
    pub reports: Vec<CoverageReport>,
    pub skipped: Vec<String>,
}

impl CatalogRun {
    pub fn mismatches(&self) -> usize {
        self.reports.iter().map(|r| r.mismatches.len()).sum()
    }
}

impl Render for CatalogRun {
    fn json(&self) -> String {
        pretty(self)
    }

    fn csv(&self) -> String {
        let mut rows = Vec::new();
        for r in &self.reports {
            let head = [r.family.clone(), r.h.to_string(), r.k.to_string()];
            let row = |kind: &str, params: &str, case: String, predicted: String, actual: i64| {
                let mut v = head.to_vec();
                v.extend([kind.to_string(), params.to_string(), case, predicted, actual.to_string()]);
                v
            };
            for m in &r.mismatches {
                rows.push(row("mismatch", &m.params, m.case.clone(), m.predicted.to_string(), m.actual));
            }
            for u in &r.uncovered {
                rows.push(row("uncovered", &u.params, u.nearest.join(" "), String::new(), u.actual));
            }
            for a in &r.ambiguous {
                let cases = a.cases.iter().map(|(c, _)| c.as_str()).collect::<Vec<_>>().join(" ");
                let values = a.cases.iter().map(|(_, v)| v.to_string()).collect::<Vec<_>>().join(" ");
                rows.push(row("ambiguous", &a.params, cases, values, a.actual));
            }
            for s in &r.stated_checks {
                for m in &s.stated_mismatches {
                    rows.push(row("stated-formula", &m.params, m.case.clone(), m.predicted.to_string(), m.actual));
                }
            }
        }
        csv_table(&["family", "h", "k", "kind", "params", "case", "predicted", "actual"], rows)
    }

    fn plain(&self) -> String {
        let mut out = String::new();
        for s in &self.skipped {
            let _ = writeln!(out, "skipped {s}");
        }
        for r in &self.reports {
            let status = if r.reproduced() { "ok" } else { "MISMATCH" };
            let _ = writeln!(
                out,
                "{} h={} k={}: {status}; {} tuples, {} covered, {} mismatches, {} uncovered, {} ambiguous",
                r.family,
                r.h,
                r.k,
                r.tuples,
                r.covered,
                r.mismatches.len(),
                r.uncovered.len(),
                r.ambiguous.len()
            );
            for m in &r.mismatches {
                let _ = writeln!(
                    out,
                    "  mismatch case {} at {}: predicted {}, actual {}",
                    m.case, m.params, m.predicted, m.actual
                );
            }
            for u in &r.uncovered {
                let elsewhere = u.covered_by.as_deref().map(|c| format!("; covered by {c}")).unwrap_or_default();
                let _ = writeln!(
                    out,
                    "  uncovered {} (actual {}, nearest {}){elsewhere}",
                    u.params,
                    u.actual,
                    u.nearest.join(", ")
                );
            }
            for a in &r.ambiguous {
                let cases = a.cases.iter().map(|(c, v)| format!("{c} -> {v}")).collect::<Vec<_>>().join(", ");
                let _ = writeln!(out, "  ambiguous {} (actual {}): {cases}", a.params, a.actual);
            }
            for s in &r.stated_checks {
                let _ = writeln!(
                    out,
                    "  case {} encoded as {}; stated {} disagrees at {} of {} tuples",
                    s.case,
                    s.encoded,
                    s.stated,
                    s.stated_mismatches.len(),
                    s.tuples
                );
            }
            if let Some(note) = &r.threshold_note {
                let _ = writeln!(out, "  note: {note}");
            }
        }
        let failing = self.reports.iter().filter(|r| !r.reproduced()).count();
        let _ = writeln!(
            out,
            "{} reports, {failing} with mismatches ({} mismatching tuples)",
            self.reports.len(),
            self.mismatches()
        );
        out
    }
}

/// The whole catalog as data.
#[derive(Clone, Debug, Serialize)]
#[serde(transparent)]
pub struct CatalogDump(pub Vec<CatalogEntry>);

impl Render for CatalogDump {
    fn json(&self) -> String {
        pretty(self)
    }

    fn csv(&self) -> String {
        let rows = self.0.iter().map(|e| {
            let domain = e.domain.iter().map(|alt| alt.join("; ")).collect::<Vec<_>>().join(" | ");
            vec![
                e.family.clone(),
                e.case.clone(),
                e.h_regime.clone(),
                e.k_min.clone(),
                domain,
                e.excluding.clone().unwrap_or_default(),
                e.formula.clone(),
                e.anchor.clone(),
                e.corrected.to_string(),
            ]
        });
        csv_table(
            &["family", "case", "h_regime", "k_min", "domain", "excluding", "formula", "anchor", "corrected"],
            rows,
        )
    }

    fn plain(&self) -> String {
        let mut out = String::new();
        let mut current = "";
        for e in &self.0 {
            if e.family != current {
                current = &e.family;
                let _ = writeln!(out, "{} {} ({}, k >= {})", e.family, e.shape, e.h_regime, e.k_min);
            }
            let domain = e.domain.iter().map(|alt| alt.join(", ")).collect::<Vec<_>>().join(" or ");
            let except = e.excluding.as_deref().map(|x| format!(" except {x}")).unwrap_or_default();
            let mark = if e.corrected { format!(" [stated: {}]", e.anchor) } else { String::new() };
            let _ = writeln!(out, "  ({}) {}: {domain}{except}{mark}", e.case, e.formula);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{crosscheck, Catalog};
    use crate::classify::{verify_classification, SearchOptions, Theorem};
    use crate::sumset::{restricted_sumset, EngineConfig};

    fn s(v: &[i64]) -> IntSet {
        IntSet::from_values(v.iter().copied()).0
    }

    fn compute(v: &[i64], h: usize) -> ComputeResult {
        let a = s(v);
        let sum = restricted_sumset(&a, h, &EngineConfig::default()).unwrap();
        ComputeResult::new(a, h, sum)
    }

    #[test]
    fn compute_plain_examples() {
        assert_eq!(compute(&[0, 1, 2, 3, 4], 2).plain(), "1..7 (7)\n");
        assert_eq!(compute(&[0, 1, 3], 0).plain(), "{0} (1)\n");
        assert_eq!(compute(&[0, 1, 3], 5).plain(), "{} (0)\n");
        assert_eq!(compute(&[0, 1, 3], 2).plain(), "{1,3,4} (3)\n");
    }

    #[test]
    fn compute_json_and_csv() {
        let r = compute(&[0, 1, 3], 2);
        let v: serde_json::Value = serde_json::from_str(&r.json()).unwrap();
        assert_eq!(v["sumset"], "1,3,4");
        assert_eq!(v["cardinality"], 3);
        assert_eq!(r.csv(), "set,h,cardinality,sumset\n\"0,1,3\",2,3,\"1,3,4\"\n");
    }

    #[test]
    fn formats_parse() {
        assert_eq!("JSON".parse::<Format>().unwrap(), Format::Json);
        assert_eq!("plain".parse::<Format>().unwrap(), Format::Plain);
        assert!("xml".parse::<Format>().is_err());
    }

    #[test]
    fn classification_json_schema() {
        let mut r = verify_classification(Theorem::OneElement, 3, 10, 13, &SearchOptions::default()).unwrap();
        r.redact_timing();
        let v: serde_json::Value = serde_json::from_str(&r.json()).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        let mut want =
            ["theorem", "h", "k", "dmax", "target", "found", "expected", "verdict", "scanned", "pruned", "wall_ms"];
        want.sort();
        assert_eq!(keys, want);
        assert_eq!(v["verdict"], "exact-match");
        assert_eq!(v["found"][0], "0,1,2,3,4,5,6,7,8,10");
        assert!(v["wall_ms"].is_null());
        assert_eq!(r.csv().lines().count(), 3);
        assert!(r.plain().contains("verdict: exact-match (found 2, expected 2)"));
    }

    #[test]
    fn catalog_run_renderings() {
        let f = Catalog::standard().family("pair-1-y").unwrap();
        let run =
            CatalogRun { reports: vec![crosscheck(f, 4, 15, &EngineConfig::default()).unwrap()], skipped: vec![] };
        assert_eq!(run.mismatches(), 0);
        let plain = run.plain();
        assert!(plain.starts_with("pair-1-y h=4 k=15: ok;"));
        assert!(plain.contains("case iv encoded as hk-h^2+y+1"));
        assert!(run.csv().lines().any(|l| l.contains("stated-formula")));
    }

    #[test]
    fn dump_renderings() {
        let dump = CatalogDump(Catalog::standard().entries());
        let v: serde_json::Value = serde_json::from_str(&dump.json()).unwrap();
        assert_eq!(v.as_array().unwrap().len(), dump.0.len());
        assert_eq!(dump.csv().lines().count(), dump.0.len() + 1);
        assert!(dump.plain().contains("one-deletion [0,k] \\ {x}"));
    }
}
