//! `hsumset`: compute restricted sumsets, crosscheck the formula catalog and
//! reproduce the classification of sets with small `|h^A|`.
//!
//! Exit codes: 0 success or match, 1 verification mismatch, 2 usage error,
//! 3 resource guard (overflow, bit window or enumeration cap).

mod config;

use std::fs::File;
use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use hsumset_core::catalog::{crosscheck, Catalog};
use hsumset_core::classify::{containment_k_min, enumerate_normalized_sets};
use hsumset_core::expr::{parse_target, Env};
use hsumset_core::report::{CatalogDump, CatalogRun, ComputeResult, SetList};
use hsumset_core::{
    classify_by_cardinality, parse_set, restricted_sumset, restricted_sumset_naive, verify_classification,
    verify_containment, EnumerationSpec, Error, Format, Render, Theorem, Verdict,
};

use crate::config::{Overrides, RunConfig};

#[derive(Parser, Debug)]
#[command(name = "hsumset", version, about = "Restricted h-fold sumsets and their extremal sets")]
struct Cli {
    /// Worker threads for catalog sweeps and searches.
    #[arg(long, global = true, env = "HSUMSET_THREADS")]
    threads: Option<usize>,
    /// Largest number of subsets the brute-force oracle may enumerate.
    #[arg(long, global = true, env = "HSUMSET_NAIVE_CAP")]
    naive_cap: Option<u64>,
    /// Largest bit index h*(max-min) of the DP window.
    #[arg(long, global = true, env = "HSUMSET_BITWINDOW_CAP")]
    bitwindow_cap: Option<u64>,
    /// Output format: json, csv or plain.
    #[arg(long, global = true, value_parser = parse_format)]
    format: Option<Format>,
    /// Write the report to this file instead of stdout.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    /// Config file with `key = value` lines (threads, naive_cap, bitwindow_cap, format, output).
    #[arg(long, global = true, env = "HSUMSET_CONFIG")]
    config: Option<PathBuf>,
    /// Omit wall-clock timings so reports are byte-stable.
    #[arg(long, global = true)]
    redact_timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute h^A for one set.
    Compute {
        /// Comma-separated integers, e.g. 0,1,3.
        #[arg(long, allow_hyphen_values = true)]
        set: String,
        #[arg(long)]
        h: usize,
        /// Use the brute-force subset enumeration instead of the DP.
        #[arg(long)]
        naive: bool,
    },
    /// Crosscheck catalog formulas against the engine.
    Catalog {
        /// Family id (see dump-catalog); all families when omitted.
        #[arg(long)]
        family: Option<String>,
        /// h value or inclusive range a..b.
        #[arg(long, default_value = "3..6", value_parser = parse_range)]
        h: RangeInclusive<i64>,
        /// k value or inclusive range; defaults to threshold..threshold+2.
        #[arg(long, value_parser = parse_range, conflicts_with = "k_max")]
        k: Option<RangeInclusive<i64>>,
        /// Sweep k from each family's threshold up to this value.
        #[arg(long)]
        k_max: Option<i64>,
    },
    /// Reproduce a classification theorem or check containment.
    Verify(VerifyArgs),
    /// List all normalized k-sets with |h^A| equal to a target.
    Classify {
        #[arg(long)]
        h: usize,
        #[arg(long)]
        k: usize,
        /// Integer or linear form in h and k, e.g. hk-h2+2.
        #[arg(long, allow_hyphen_values = true)]
        target: String,
        /// Largest diameter searched.
        #[arg(long)]
        dmax: i64,
        /// Disable the lossless bound cuts.
        #[arg(long)]
        no_prune: bool,
    },
    /// List normalized k-sets with diameter at most dmax.
    Enumerate {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        dmax: i64,
        /// Keep sets whose elements share a common factor.
        #[arg(long)]
        no_gcd_filter: bool,
    },
    /// Print every catalog case as data (JSON by default).
    DumpCatalog,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// one-element, two-element-h3, two-element, three-element-h3, three-element-h4, three-element or containment.
    #[arg(long)]
    theorem: String,
    /// Defaults to the smallest admissible h.
    #[arg(long)]
    h: Option<usize>,
    /// Defaults to the smallest admissible k.
    #[arg(long)]
    k: Option<usize>,
    /// Defaults to the interval end plus the margin.
    #[arg(long)]
    dmax: Option<i64>,
    /// Extra diameter searched beyond the theorem's interval.
    #[arg(long, default_value_t = 3)]
    margin: i64,
    /// Excess c in hk-h^2+c for containment (2, 3 or 4).
    #[arg(long, default_value_t = 2)]
    c: usize,
    #[arg(long)]
    no_prune: bool,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_range(s: &str) -> Result<RangeInclusive<i64>, String> {
    let bad = || format!("`{s}` is not an integer or a range a..b");
    match s.split_once("..") {
        Some((a, b)) => {
            let (a, b) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
            if a > b {
                return Err(format!("empty range `{s}`"));
            }
            Ok(a..=b)
        }
        None => s.trim().parse().map(|v| v..=v).map_err(|_| bad()),
    }
}

/// A failed run: message plus exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure { code: if e.is_resource_guard() { 3 } else { 2 }, message: e.to_string() }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure { code: 2, message: format!("cannot write output: {e}") }
    }
}

fn usage(message: String) -> Failure {
    Failure { code: 2, message }
}

/// Rendered report plus the exit code it implies.
struct Outcome {
    text: String,
    code: u8,
}

fn run(cli: Cli) -> Result<ExitCode, Failure> {
    let over = Overrides {
        threads: cli.threads,
        naive_cap: cli.naive_cap,
        bitwindow_cap: cli.bitwindow_cap,
        format: cli.format,
        output: cli.output.clone(),
    };
    let cfg = RunConfig::resolve(cli.config.as_deref(), over)?;
    let outcome = dispatch(&cli.command, &cfg, cli.redact_timing)?;
    let mut sink: Box<dyn Write> = match &cfg.output {
        Some(path) => {
            Box::new(File::create(path).map_err(|e| usage(format!("cannot create {}: {e}", path.display())))?)
        }
        None => Box::new(io::stdout().lock()),
    };
    match sink.write_all(outcome.text.as_bytes()).and_then(|()| sink.flush()) {
        // A closed pipe (`| head`) is not an error for a report writer.
        Err(e) if e.kind() != io::ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(ExitCode::from(outcome.code)),
    }
}

fn dispatch(command: &Command, cfg: &RunConfig, redact: bool) -> Result<Outcome, Failure> {
    let format = |default: Format| cfg.format.unwrap_or(default);
    match command {
        Command::Compute { set, h, naive } => {
            let (a, dropped) = parse_set(set)?;
            if dropped {
                eprintln!("note: duplicate elements in `{set}` were dropped");
            }
            let sum = if *naive {
                restricted_sumset_naive(&a, *h, &cfg.engine())?
            } else {
                restricted_sumset(&a, *h, &cfg.engine())?
            };
            Ok(Outcome { text: ComputeResult::new(a, *h, sum).render(format(Format::Plain)), code: 0 })
        }
        Command::Catalog { family, h, k, k_max } => {
            let run = cfg.search(true).run(|| catalog_run(family.as_deref(), h.clone(), k.clone(), *k_max, cfg))??;
            let code = if run.mismatches() > 0 { 1 } else { 0 };
            Ok(Outcome { text: run.render(format(Format::Plain)), code })
        }
        Command::Verify(args) => verify(args, cfg, redact, format(Format::Plain)),
        Command::Classify { h, k, target, dmax, no_prune } => {
            let value = parse_target(target)?.eval(&Env { h: *h as i64, k: *k as i64, ..Env::default() });
            if value < 1 {
                return Err(usage(format!("target `{target}` evaluates to {value}; it must be at least 1")));
            }
            let report = classify_by_cardinality(*h, *k, value as usize, *dmax, &cfg.search(!no_prune))?;
            Ok(Outcome { text: SetList(report.found).render(format(Format::Plain)), code: 0 })
        }
        Command::Enumerate { k, dmax, no_gcd_filter } => {
            let spec = EnumerationSpec { k: *k, dmax: *dmax, gcd_filter: !no_gcd_filter };
            let sets = SetList(enumerate_normalized_sets(spec).collect());
            Ok(Outcome { text: sets.render(format(Format::Plain)), code: 0 })
        }
        Command::DumpCatalog => {
            Ok(Outcome { text: CatalogDump(Catalog::standard().entries()).render(format(Format::Json)), code: 0 })
        }
    }
}

fn catalog_run(
    family: Option<&str>,
    hs: RangeInclusive<i64>,
    ks: Option<RangeInclusive<i64>>,
    k_max: Option<i64>,
    cfg: &RunConfig,
) -> Result<CatalogRun, Failure> {
    let catalog = Catalog::standard();
    let families = match family {
        Some(id) => vec![catalog.family(id)?],
        None => catalog.families().iter().collect(),
    };
    let mut run = CatalogRun::default();
    for f in families {
        for h in hs.clone() {
            if !f.regime.admits(h) {
                if family.is_some() {
                    run.skipped.push(format!("{} h={h}: outside {}", f.id, f.regime));
                }
                continue;
            }
            let threshold = f.threshold(h);
            let range = match (&ks, k_max) {
                (Some(r), _) => r.clone(),
                (None, Some(top)) => threshold..=top,
                (None, None) => threshold..=threshold + 2,
            };
            for k in range {
                if k < threshold {
                    run.skipped.push(format!("{} h={h} k={k}: below threshold k >= {threshold}", f.id));
                    continue;
                }
                run.reports.push(crosscheck(f, h, k, &cfg.engine())?);
            }
        }
    }
    Ok(run)
}

fn verify(args: &VerifyArgs, cfg: &RunConfig, redact: bool, format: Format) -> Result<Outcome, Failure> {
    let opts = cfg.search(!args.no_prune);
    if args.theorem == "containment" {
        let h = args.h.unwrap_or(3);
        let k = match args.k {
            Some(k) => k,
            None => containment_k_min(h, args.c)?,
        };
        let dmax = args.dmax.unwrap_or(k as i64 + args.c as i64 - 2 + args.margin);
        let mut report = verify_containment(h, k, args.c, dmax, &opts)?;
        if redact {
            report.redact_timing();
        }
        let code = if report.holds() { 0 } else { 1 };
        return Ok(Outcome { text: report.render(format), code });
    }
    let theorem: Theorem = args.theorem.parse()?;
    let h = args.h.or(theorem.fixed_h()).unwrap_or(theorem.h_min());
    let k = args.k.unwrap_or(theorem.k_min(h));
    let dmax = args.dmax.unwrap_or(theorem.default_dmax(k, args.margin));
    let mut report = verify_classification(theorem, h, k, dmax, &opts)?;
    if redact {
        report.redact_timing();
    }
    let code = if report.verdict == Some(Verdict::ExactMatch) { 0 } else { 1 };
    Ok(Outcome { text: report.render(format), code })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
