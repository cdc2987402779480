//! The `ce-lab` command line: build, analyze, suite, oracle.

mod analyze;
mod build;

use crate::error::{Error, Result};
use crate::oracle::{run_oracle, OracleConfig};
use crate::scalars::ScalarRing;
use crate::suite::run_suite;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};
use std::ffi::OsString;
use std::path::{Path, PathBuf};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "ce-lab", version, about = "Centrally essential rings and semirings: builders, analyzers, checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a named construction and write it as JSON.
    Build(BuildArgs),
    /// Run checks on an algebra or semiring file.
    Analyze(AnalyzeArgs),
    /// Run the reference cases.
    Suite(SuiteArgs),
    /// Cross-check strategies on seeded random algebras.
    Oracle(OracleArgs),
}

#[derive(Args, Debug, Default)]
pub struct BuildArgs {
    /// q8-group-algebra, group-algebra, grassmann, cayley-dickson, ce-matrix, t-algebra,
    /// skew-poly, uniserial, truncated, jelonek, powerset-semiring, boolean-group-semiring,
    /// triangular-semiring
    pub name: String,
    /// Scalars: F<p>, Z<n>, GF<q>, Q.
    #[arg(long)]
    pub field: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Comma-separated doubling parameters.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub alpha: Vec<String>,
    /// K, R, S or T.
    #[arg(long)]
    pub variant: Option<String>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub q: Option<u64>,
    #[arg(long)]
    pub p: Option<u64>,
    /// Q8, C<n>, D<n>, Q<n>, SD<n>, S<k>, H<p>, order32, order243, or a group JSON file.
    #[arg(long)]
    pub group: Option<String>,
    /// Monoid for powerset-semiring: "example" or a JSON file {"labels": [...], "table": [[...]]}.
    #[arg(long)]
    pub base: Option<String>,
    #[arg(long)]
    pub no_unit: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct AnalyzeArgs {
    file: PathBuf,
    /// Comma-separated check names.
    #[arg(long, value_delimiter = ',', default_value = "ce")]
    checks: Vec<String>,
    #[arg(long, default_value = "auto")]
    strategy: String,
    #[arg(long, default_value = "json")]
    format: Format,
}

#[derive(clap::ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Text,
}

#[derive(Args, Debug)]
struct SuiteArgs {
    /// Glob over case ids, e.g. "cd-*".
    #[arg(long)]
    filter: Option<String>,
    #[arg(long)]
    report: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct OracleArgs {
    #[arg(long, default_value_t = 200)]
    count: usize,
    #[arg(long, default_value_t = 3)]
    dim: usize,
    #[arg(long, default_value = "F2")]
    scalar: String,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Where the minimized failing algebras go.
    #[arg(long, default_value = "ce-lab-oracle-failure.json")]
    dump: PathBuf,
    #[arg(long)]
    report: Option<PathBuf>,
}

/// Parses `args` (program name first) and runs the command; returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let result = match cli.command {
        Command::Build(a) => cmd_build(&a),
        Command::Analyze(a) => cmd_analyze(&a),
        Command::Suite(a) => cmd_suite(&a),
        Command::Oracle(a) => cmd_oracle(&a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_INPUT
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Error::Io(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub(crate) fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

fn cmd_build(a: &BuildArgs) -> Result<i32> {
    let text = build::build(a)?;
    emit(a.out.as_deref(), &text)?;
    Ok(EXIT_OK)
}

fn cmd_analyze(a: &AnalyzeArgs) -> Result<i32> {
    let strategy = a.strategy.parse()?;
    let text = read(&a.file)?;
    let results = analyze::analyze(&text, &a.checks, strategy)?;
    match a.format {
        Format::Json => {
            let v = json!({ "file": a.file.display().to_string(), "results": results });
            print!("{}", pretty(&v));
        }
        Format::Text => {
            for r in &results {
                println!("{}", analyze::text_line(r));
            }
        }
    }
    Ok(EXIT_OK)
}

fn cmd_suite(a: &SuiteArgs) -> Result<i32> {
    let report = run_suite(a.filter.as_deref())?;
    for o in &report.outcomes {
        if o.ok() {
            println!("ok    {:<28} {:>6} ms", o.id, o.millis);
        } else {
            let mut why: Vec<String> = o.failed_checks().iter().map(|c| format!("{} (expected {}, got {})", c.name, c.expected, c.actual)).collect();
            why.extend(o.error.iter().map(|e| format!("error: {e}")));
            println!("FAIL  {:<28} {}", o.id, why.join("; "));
        }
    }
    let failed = report.failed_ids();
    println!("{} cases, {} passed", report.outcomes.len(), report.outcomes.len() - failed.len());
    if let Some(p) = &a.report {
        emit(Some(p), &pretty(&report.to_json()))?;
    }
    if failed.is_empty() {
        Ok(EXIT_OK)
    } else {
        eprintln!("failed cases: {}", failed.join(", "));
        Ok(EXIT_VIOLATION)
    }
}

fn cmd_oracle(a: &OracleArgs) -> Result<i32> {
    let config = OracleConfig { count: a.count, dim: a.dim, scalar: ScalarRing::from_name(&a.scalar)?, seed: a.seed };
    let outcome = run_oracle(&config)?;
    emit(a.report.as_deref(), &pretty(&outcome.to_json()))?;
    if outcome.ok() {
        return Ok(EXIT_OK);
    }
    let dump = json!({
        "failures": outcome.failures.iter().map(|f| json!({
            "index": f.index,
            "reason": f.reason,
            "algebra": serde_json::from_str::<Value>(&f.minimized.to_json()).expect("algebra json"),
        })).collect::<Vec<_>>(),
    });
    emit(Some(&a.dump), &pretty(&dump))?;
    eprintln!("{} failing algebra(s); minimized tables written to {}", outcome.failures.len(), a.dump.display());
    Ok(EXIT_VIOLATION)
}
