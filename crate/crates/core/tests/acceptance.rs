//! Acceptance suite: one `[PASS]`/`[FAIL]` line per criterion.
//!
//! The process exits 0 even when a criterion fails, so `cargo test` stays usable
//! while a known failure is tracked; set `ACCEPTANCE_STRICT=1` to turn any failure
//! into a nonzero exit.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use hsumset_core::catalog::{crosscheck, verification_grid};
use hsumset_core::classify::{direct_bound_sweep, lev_extremal_set, lev_sweep, ClassificationReport};
use hsumset_core::{
    restricted_cardinality, restricted_sumset, restricted_sumset_naive, verify_classification, verify_containment,
    Catalog, EngineConfig, IntSet, Render, Result, SearchOptions, Theorem, Verdict,
};
use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome { pass, detail: detail.into() })
}

fn cfg() -> EngineConfig {
    EngineConfig::default()
}

fn opts() -> SearchOptions {
    SearchOptions::default()
}

fn ac1_oracle() -> Result<Outcome> {
    let mut sets = 0;
    let mut comparisons = 0;
    let mut bad = Vec::new();
    for mask in 0u32..1 << 12 {
        if mask.count_ones() > 9 {
            continue;
        }
        let a = IntSet::from_values(std::iter::once(0).chain((1..=12).filter(|i| mask >> (i - 1) & 1 == 1))).0;
        sets += 1;
        for h in 0..=a.len() {
            comparisons += 1;
            if restricted_sumset(&a, h, &cfg())? != restricted_sumset_naive(&a, h, &cfg())? {
                bad.push(format!("{{{a}}} h={h}"));
            }
        }
    }
    outcome(bad.is_empty(), format!("{sets} sets, {comparisons} (A, h) pairs, {} disagreements {bad:?}", bad.len()))
}

fn random_normalized(rng: &mut ChaCha8Rng) -> IntSet {
    let k = rng.gen_range(1..=14usize);
    if k == 1 {
        return IntSet::interval(0, 0);
    }
    let d = rng.gen_range(k as i64 - 1..=25);
    let inner = sample(rng, (d - 1) as usize, k - 2).into_iter().map(|i| i as i64 + 1);
    let a = IntSet::from_values([0, d].into_iter().chain(inner)).0;
    a.normalize().expect("two or more elements").set
}

fn ac2_duality() -> Result<Outcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_2024);
    let mut bad = Vec::new();
    for _ in 0..1000 {
        let a = random_normalized(&mut rng);
        let k = a.len();
        let sigma = a.total().expect("small sets");
        for h in 0..=k {
            let s = restricted_sumset(&a, h, &cfg())?;
            let dual = restricted_sumset(&a, k - h, &cfg())?;
            if s.len() != dual.len() || dual != s.reflect(sigma) {
                bad.push(format!("{{{a}}} h={h}"));
            }
        }
    }
    outcome(bad.is_empty(), format!("1000 random sets (seeded), {} failures {bad:?}", bad.len()))
}

fn ac3_direct_bound() -> Result<Outcome> {
    let mut notes = Vec::new();
    let mut pass = true;
    for k in 5..=7 {
        let sweep = direct_bound_sweep(k, k as i64 + 4, &opts())?;
        let odd: Vec<_> = sweep
            .non_interval_extremal()
            .into_iter()
            .filter(|(h, _)| (2..=k - 2).contains(h))
            .map(|(h, a)| format!("h={h} {{{a}}}"))
            .collect();
        pass &= sweep.violations.is_empty() && odd.is_empty();
        notes.push(format!(
            "k={k}: {} sets, {} violations, {} extremal pairs, other extremal sets {odd:?}",
            sweep.scanned,
            sweep.violations.len(),
            sweep.extremal.len()
        ));
    }
    outcome(pass, notes.join("; "))
}

fn ac4_catalog() -> Result<Outcome> {
    let mut reports = 0;
    let mut tuples = 0;
    let mut mismatches = Vec::new();
    let (mut uncovered, mut ambiguous) = (0, 0);
    for family in Catalog::standard().families() {
        for (h, k) in verification_grid(family, &[3, 4, 5, 6]) {
            let r = crosscheck(family, h, k, &cfg())?;
            reports += 1;
            tuples += r.tuples;
            uncovered += r.uncovered.len();
            ambiguous += r.ambiguous.len();
            for m in &r.mismatches {
                mismatches.push(format!(
                    "{} h={h} k={k} ({}) {}: {} vs {}",
                    r.family, m.case, m.params, m.predicted, m.actual
                ));
            }
        }
    }
    let mut detail = format!(
        "{reports} (family, h, k) reports, {tuples} tuples, {} mismatches, {uncovered} uncovered, {ambiguous} ambiguous",
        mismatches.len()
    );
    if !mismatches.is_empty() {
        let shown = mismatches.iter().take(12).cloned().collect::<Vec<_>>().join("; ");
        detail.push_str(&format!("; first: {shown}"));
    }
    outcome(mismatches.is_empty(), detail)
}

fn exact(report: &ClassificationReport, want: usize) -> bool {
    report.verdict == Some(Verdict::ExactMatch) && report.found.len() == want
}

fn summary(r: &ClassificationReport) -> String {
    let verdict = r.verdict.map(|v| v.to_string()).unwrap_or_default();
    format!("h={} k={}: {} sets, {verdict}", r.h, r.k, r.found.len())
}

fn ac5_one_element() -> Result<Outcome> {
    let mut pass = true;
    let mut notes = Vec::new();
    for h in 3..=5 {
        let k = 3 * h + 1;
        let r = verify_classification(Theorem::OneElement, h, k, k as i64 + 3, &opts())?;
        let end = k as i64;
        let mut want = vec![IntSet::interval_minus(0, end, &[1]), IntSet::interval_minus(0, end, &[end - 1])];
        want.sort();
        pass &= exact(&r, 2) && r.found == want;
        notes.push(summary(&r));
    }
    outcome(pass, notes.join("; "))
}

fn ac6_two_element() -> Result<Outcome> {
    let runs = [
        (Theorem::TwoElementH3, 3, 12, 16, 7),
        (Theorem::TwoElement, 4, 15, 18, 5),
        (Theorem::TwoElement, 5, 18, 21, 5),
    ];
    let mut pass = true;
    let mut notes = Vec::new();
    for (theorem, h, k, dmax, want) in runs {
        let r = verify_classification(theorem, h, k, dmax, &opts())?;
        pass &= exact(&r, want) && r.target == theorem.target(h, k);
        notes.push(summary(&r));
    }
    outcome(pass, notes.join("; "))
}

fn ac7_three_element() -> Result<Outcome> {
    let runs = [
        (Theorem::ThreeElementH3, 3, 13, 18, 18),
        (Theorem::ThreeElementH4, 4, 16, 21, 12),
        (Theorem::ThreeElement, 5, 19, 24, 10),
    ];
    let mut pass = true;
    let mut notes = Vec::new();
    for (theorem, h, k, dmax, want) in runs {
        let r = verify_classification(theorem, h, k, dmax, &opts())?;
        pass &= exact(&r, want);
        notes.push(summary(&r));
        if h == 3 {
            pass &= r.target == 34;
            let family: Vec<IntSet> = (4..=9).map(|x| IntSet::interval_minus(0, 15, &[x, 14, 15])).collect();
            pass &= family.iter().all(|s| r.found.binary_search(s).is_ok());
            let unpruned = verify_classification(theorem, h, k, dmax, &SearchOptions { prune: false, ..opts() })?;
            let same = unpruned.found == r.found;
            pass &= same;
            notes.push(format!(
                "pruning off at h=3: identical={same}, scanned {} vs {} with cuts",
                unpruned.scanned, r.scanned
            ));
        }
    }
    outcome(pass, notes.join("; "))
}

fn ac8_containment() -> Result<Outcome> {
    let mut pass = true;
    let mut notes = Vec::new();
    for (c, ks) in [(2, [10, 13, 16]), (3, [12, 15, 18]), (4, [13, 16, 19])] {
        for (h, k) in (3..=5).zip(ks) {
            let r = verify_containment(h, k, c, (k + c) as i64 - 2 + 3, &opts())?;
            pass &= r.holds();
            notes.push(format!("c={c} h={h} k={k}: {} found, {} violators", r.found, r.violators.len()));
        }
    }
    outcome(pass, notes.join("; "))
}

fn ac9_lev() -> Result<Outcome> {
    let mut pass = true;
    let mut notes = Vec::new();
    for k in 8..=10 {
        let sweep = lev_sweep(k, k as i64 + 8, &opts())?;
        pass &= sweep.conjecture_violations.is_empty() && sweep.theorem_violations.is_empty();
        notes.push(format!(
            "k={k}: {} sets, {} conjecture violations, {} bound violations, {} tight",
            sweep.scanned,
            sweep.conjecture_violations.len(),
            sweep.theorem_violations.len(),
            sweep.conjecture_tight
        ));
    }
    let extremal = lev_extremal_set(10, 20)?;
    let n = restricted_cardinality(&extremal, 2, &cfg())?;
    pass &= n == 23;
    notes.push(format!("{{{extremal}}}: |2^A| = {n} (3k-7 = 23)"));
    outcome(pass, notes.join("; "))
}

fn theorem_json(threads: usize) -> Result<String> {
    let runs = [
        (Theorem::OneElement, 3, 10, 13),
        (Theorem::OneElement, 4, 13, 16),
        (Theorem::OneElement, 5, 16, 19),
        (Theorem::TwoElementH3, 3, 12, 16),
        (Theorem::TwoElement, 4, 15, 18),
        (Theorem::TwoElement, 5, 18, 21),
        (Theorem::ThreeElementH3, 3, 13, 18),
        (Theorem::ThreeElementH4, 4, 16, 21),
        (Theorem::ThreeElement, 5, 19, 24),
    ];
    let mut out = String::new();
    for (theorem, h, k, dmax) in runs {
        let mut r = verify_classification(theorem, h, k, dmax, &SearchOptions { threads, ..opts() })?;
        r.redact_timing();
        out.push_str(&r.json());
    }
    Ok(out)
}

fn ac10_determinism() -> Result<Outcome> {
    let n = std::thread::available_parallelism().map_or(4, |n| n.get()).max(4);
    let single = theorem_json(1)?;
    let many = theorem_json(n)?;
    outcome(
        single == many,
        format!("9 reports, {} bytes of JSON, 1 thread vs {n} threads identical={}", single.len(), single == many),
    )
}

type Criterion = (&'static str, &'static str, Duration, fn() -> Result<Outcome>);

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("AC1", "DP equals brute-force oracle", Duration::from_secs(60), ac1_oracle),
        ("AC2", "duality h <-> k-h", Duration::from_secs(10), ac2_duality),
        ("AC3", "direct lower bound and its extremal sets", Duration::from_secs(30), ac3_direct_bound),
        ("AC4", "catalog formulas reproduce engine cardinalities", Duration::from_secs(300), ac4_catalog),
        ("AC5", "one-element classification", Duration::from_secs(120), ac5_one_element),
        ("AC6", "two-element classification", Duration::from_secs(600), ac6_two_element),
        ("AC7", "three-element classification, lossless pruning", Duration::from_secs(1800), ac7_three_element),
        ("AC8", "containment, zero violators", Duration::from_secs(1800), ac8_containment),
        ("AC9", "Lev bound and 3k-7 conjecture", Duration::from_secs(300), ac9_lev),
        ("AC10", "thread-count independent JSON", Duration::from_secs(1800), ac10_determinism),
    ];
    let mut failed = Vec::new();
    for (id, title, budget, check) in criteria {
        let start = Instant::now();
        let result = check();
        let took = start.elapsed();
        let (pass, detail) = match result {
            Ok(o) => (o.pass && took <= budget, o.detail),
            Err(e) => (false, format!("error: {e}")),
        };
        let tag = if pass { "PASS" } else { "FAIL" };
        println!("[{tag}] {id} {title} ({:.2} s, budget {} s): {detail}", took.as_secs_f64(), budget.as_secs());
        if !pass {
            failed.push(id);
        }
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed.len(), criteria.len());
    if failed.is_empty() {
        return ExitCode::SUCCESS;
    }
    println!("failing: {}", failed.join(", "));
    if std::env::var("ACCEPTANCE_STRICT").is_ok_and(|v| v == "1") {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
