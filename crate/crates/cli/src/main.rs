//! `gaussdeg`: degrees of varieties of tangent spaces from the command line.
//!
//! Exit codes: 0 success, 1 verification failure, 2 bad parameters,
//! 3 non-positive total in general-variety mode.

mod output;

use std::io::{self, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gaussdeg::verify::{run_suite, SuiteConfig, SUITES};
use gaussdeg::{
    conjecture_scan, degree_by_method, degree_generic, grassmann_degree, grassmann_dim, sweep,
    syt_count_bruteforce_capped, syt_count_hook, veronese_integral_table, Error, GenericOutcome,
    Method, Partition, SegreIntegralTable, TableRow, VeroneseVariety, BRUTE_FORCE_CAP,
};
use serde::Serialize;

use crate::output::{emit, Format};

#[derive(Parser)]
#[command(name = "gaussdeg", version, about = "Exact degrees of varieties of tangent spaces")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Degree and dimension of X_m^* for v_d(P^n).
    Degree {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
        #[arg(long)]
        m: u32,
        #[arg(long, default_value = "main")]
        method: Method,
    },
    /// Every m = n..N-1 for one Veronese variety, with bounds.
    Table {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
    },
    /// Run the verification suites.
    Verify {
        /// One of identity, syt, schur, crossform, bounds, lemma, generic, all.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Largest n for the tableau identity.
        #[arg(long)]
        max_n: Option<u32>,
        /// Largest partition weight for the hook-length check.
        #[arg(long)]
        max_weight: Option<u32>,
        #[arg(long, env = "GAUSSDEG_BRUTE_CAP")]
        brute_cap: Option<u32>,
    },
    /// Scan the conjectured upper bound over ranges like `1..3` (inclusive).
    Conjecture {
        #[arg(long)]
        n: String,
        #[arg(long)]
        d: String,
    },
    /// Degree from a JSON table of Segre-class integrals.
    Generic {
        #[arg(long)]
        table: PathBuf,
        #[arg(long)]
        m: u32,
    },
    /// Export the integral table of v_d(P^n) in the `generic` input format.
    ExportTable {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        d: u32,
    },
    /// Standard Young tableaux of a shape, by hook length and brute force.
    Syt {
        /// Parts, e.g. `3,1`.
        #[arg(long)]
        shape: String,
        #[arg(long, env = "GAUSSDEG_BRUTE_CAP")]
        brute_cap: Option<u32>,
    },
    /// Dimension and Plücker degree of G(d, r).
    Grassmann {
        #[arg(long)]
        d: u32,
        #[arg(long)]
        r: u32,
    },
}

/// What went wrong, mapped onto the exit code contract.
enum Failure {
    Verification,
    BadInput(String),
    NonPositive(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NonIntegral(_) | Error::Inconsistent(_) => Failure::Internal(e.to_string()),
            _ => Failure::BadInput(e.to_string()),
        }
    }
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Internal(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Internal(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::BadInput(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::NonPositive(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli, out: &mut impl Write) -> Outcome {
    let format = cli.format;
    match cli.command {
        Command::Degree { n, d, m, method } => {
            let v = VeroneseVariety::new(n, d)?;
            let report = degree_by_method(&v, m, method)?;
            emit(out, format, &report)?;
        }
        Command::Table { n, d } => {
            let v = VeroneseVariety::new(n, d)?;
            let rows: Vec<TableRow> = sweep(&v)?.iter().map(TableRow::from).collect();
            emit(out, format, &rows)?;
        }
        Command::Verify {
            suite,
            max_n,
            max_weight,
            brute_cap,
        } => return verify(out, format, &suite, max_n, max_weight, brute_cap),
        Command::Conjecture { n, d } => {
            let scan = conjecture_scan(parse_range(&n)?, parse_range(&d)?)?;
            match format {
                Format::Json => emit(out, format, &scan_json(&scan))?,
                _ => {
                    emit(out, format, &scan.rows)?;
                    eprintln!("violations: {}", scan.violation_count());
                }
            }
        }
        Command::Generic { table, m } => {
            let text = std::fs::read_to_string(&table)
                .map_err(|e| Failure::BadInput(format!("{}: {e}", table.display())))?;
            let table = SegreIntegralTable::from_json(&text)?;
            match degree_generic(&table, m)? {
                GenericOutcome::Degree(report) => emit(out, format, &report)?,
                GenericOutcome::NonPositive { total } => {
                    return Err(Failure::NonPositive(format!(
                        "total {total} is not positive: the Gauss map is not generically finite or the table is invalid"
                    )))
                }
            }
        }
        Command::ExportTable { n, d } => {
            let v = VeroneseVariety::new(n, d)?;
            writeln!(out, "{}", veronese_integral_table(&v).to_json()).map_err(anyhow::Error::from)?;
        }
        Command::Syt { shape, brute_cap } => {
            let lam: Partition = shape.parse()?;
            let cap = brute_cap.unwrap_or(BRUTE_FORCE_CAP);
            #[derive(Serialize)]
            struct SytRow {
                shape: Partition,
                weight: u32,
                hook: String,
                brute_force: Option<String>,
            }
            let brute = match syt_count_bruteforce_capped(&lam, cap) {
                Ok(v) => Some(v.to_string()),
                Err(Error::SizeCap { .. }) => None,
                Err(e) => return Err(e.into()),
            };
            let row = SytRow {
                weight: lam.weight(),
                hook: syt_count_hook(&lam).to_string(),
                brute_force: brute,
                shape: lam,
            };
            emit(out, format, &row)?;
        }
        Command::Grassmann { d, r } => {
            #[derive(Serialize)]
            struct GrassmannRow {
                d: u32,
                r: u32,
                dim: u64,
                degree: String,
            }
            let row = GrassmannRow {
                d,
                r,
                dim: grassmann_dim(d, r)?,
                degree: grassmann_degree(d, r)?.to_string(),
            };
            emit(out, format, &row)?;
        }
    }
    Ok(())
}

fn verify(
    out: &mut impl Write,
    format: Format,
    suite: &str,
    max_n: Option<u32>,
    max_weight: Option<u32>,
    brute_cap: Option<u32>,
) -> Outcome {
    let mut config = SuiteConfig::default();
    if let Some(cap) = brute_cap {
        if cap == 0 {
            return Err(Failure::BadInput("brute-force cap must be at least 1".into()));
        }
        config.brute_cap = cap;
    }
    if let Some(n) = max_n {
        if n == 0 {
            return Err(Failure::BadInput("--max-n must be at least 1".into()));
        }
        config.identity_max_n = n;
        config.identity_brute_max_n = config.identity_brute_max_n.min(n);
    }
    if let Some(w) = max_weight {
        config.syt_max_weight = w;
    }
    let names: Vec<&str> = if suite == "all" {
        SUITES.to_vec()
    } else if SUITES.contains(&suite) {
        vec![suite]
    } else {
        return Err(Failure::BadInput(format!(
            "unknown suite {suite:?}; expected one of {} or all",
            SUITES.join(", ")
        )));
    };

    let results: Vec<_> = names
        .iter()
        .map(|name| run_suite(name, &config).expect("known suite"))
        .collect();
    let all_passed = results.iter().all(|r| r.passed());
    if format == Format::Json {
        emit(out, format, &results)?;
    } else {
        for result in &results {
            writeln!(out, "{result}").map_err(anyhow::Error::from)?;
            for failure in &result.failures {
                writeln!(out, "  {failure}").map_err(anyhow::Error::from)?;
            }
        }
    }
    if all_passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

#[derive(Serialize)]
struct ScanJson<'a> {
    rows: &'a [gaussdeg::BoundsReport],
    violation_count: usize,
    violations: &'a [gaussdeg::BoundsReport],
}

fn scan_json(scan: &gaussdeg::ScanReport) -> ScanJson<'_> {
    ScanJson {
        rows: &scan.rows,
        violation_count: scan.violation_count(),
        violations: &scan.violations,
    }
}

/// `a`, `a..b` or `a..=b`, all inclusive; an empty range is an error.
fn parse_range(text: &str) -> Result<RangeInclusive<u32>, Failure> {
    let bad = || Failure::BadInput(format!("bad range {text:?}; expected a, a..b or a..=b"));
    let parse = |s: &str| s.trim().parse::<u32>().map_err(|_| bad());
    let range = match text.split_once("..") {
        Some((lo, hi)) => parse(lo)?..=parse(hi.trim_start_matches('='))?,
        None => {
            let v = parse(text)?;
            v..=v
        }
    };
    if range.is_empty() {
        return Err(Failure::BadInput(format!("range {text:?} is empty")));
    }
    Ok(range)
}
