//! Command-line front end: `verify`, `ranks` and `lattice`.
//!
//! Exit codes: 0 when every check passes, 1 when a check fails, 2 for usage
//! errors, 3 when a case or enumeration exceeds its cap.

use std::fs;
use std::io::Write;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::fermat::{rank_table, verify_case, CaseReport, FermatCase, FermatError, RankEntry, Suite, DEFAULT_CAP};
use crate::lattice::{lattice_report, LatticeError, Which, DEFAULT_ENUMERATION_CAP};
use crate::statement::Statement;

pub const SCHEMA: u32 = 1;
pub const CAP_ENV: &str = "CYCLOCOVER_CAP";

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "cyclocover", version, about = "Exact checks on group-ring modules of Fermat covers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Verify the statement suites on a grid of (n, d) cases.
    Verify(VerifyArgs),
    /// Tabulate the ranks p_n(d).
    Ranks(RanksArgs),
    /// Root lattice checks at levels 3 and 2.
    Lattice(LatticeArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(clap::Args, Debug)]
struct VerifyArgs {
    /// Dimensions, `A..B` (inclusive) or a single value.
    #[arg(long, value_parser = parse_range, default_value = "1..3")]
    n: RangeInclusive<usize>,
    /// Degrees, `A..B` (inclusive) or a single value.
    #[arg(long, value_parser = parse_range, default_value = "2..5")]
    d: RangeInclusive<usize>,
    /// A statement key or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Largest ambient rank d^(n+1) allowed; overrides CYCLOCOVER_CAP.
    #[arg(long)]
    cap: Option<usize>,
    /// Worker threads.
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(clap::Args, Debug)]
struct RanksArgs {
    #[arg(long, value_parser = parse_range, default_value = "0..6")]
    n: RangeInclusive<usize>,
    #[arg(long, value_parser = parse_range, default_value = "2..7")]
    d: RangeInclusive<usize>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(clap::Args, Debug)]
struct LatticeArgs {
    /// `e6`, `e7` or `both`.
    #[arg(default_value = "both", value_parser = ["e6", "e7", "both"])]
    which: String,
    /// Largest group enumerated.
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_CAP)]
    cap: usize,
    #[arg(long)]
    out: Option<PathBuf>,
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let (a, b) = match s.split_once("..") {
        Some((a, b)) => (a, b.strip_prefix('=').unwrap_or(b)),
        None => (s, s),
    };
    let a: usize = a.trim().parse().map_err(|_| format!("bad range start in `{s}`"))?;
    let b: usize = b.trim().parse().map_err(|_| format!("bad range end in `{s}`"))?;
    if a > b {
        return Err(format!("empty range `{s}`"));
    }
    Ok(a..=b)
}

#[derive(Serialize)]
struct Span {
    from: usize,
    to: usize,
}

impl From<&RangeInclusive<usize>> for Span {
    fn from(r: &RangeInclusive<usize>) -> Self {
        Span {
            from: *r.start(),
            to: *r.end(),
        }
    }
}

#[derive(Serialize)]
struct VerifySpec {
    n: Span,
    d: Span,
    suite: String,
    cap: usize,
}

#[derive(Serialize)]
#[serde(untagged)]
enum CaseOutcome {
    Report(CaseReport),
    Error { n: usize, d: usize, error: String, passed: bool },
}

impl CaseOutcome {
    fn passed(&self) -> bool {
        match self {
            CaseOutcome::Report(r) => r.passed,
            CaseOutcome::Error { .. } => false,
        }
    }
}

#[derive(Serialize, Default)]
struct Summary {
    cases: usize,
    passed: usize,
    failed: usize,
    errors: usize,
}

#[derive(Serialize)]
struct CaseTiming {
    n: usize,
    d: usize,
    seconds: f64,
}

#[derive(Serialize)]
struct Timings {
    total_seconds: f64,
    cases: Vec<CaseTiming>,
}

#[derive(Serialize)]
struct VerifyOutput {
    schema: u32,
    version: &'static str,
    command: &'static str,
    spec: VerifySpec,
    summary: Summary,
    cases: Vec<CaseOutcome>,
    passed: bool,
    /// Wall-clock data; not part of the deterministic payload.
    timings: Timings,
}

#[derive(Serialize)]
struct CsvRow<'a> {
    n: usize,
    d: usize,
    statement: &'a str,
    pass: Option<bool>,
}

/// Parse `args` (including the program name), run, and return the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if e.use_stderr() { stderr } else { stdout };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let result = match cli.command {
        Command::Verify(a) => cmd_verify(a, stdout, stderr),
        Command::Ranks(a) => cmd_ranks(a, stdout),
        Command::Lattice(a) => cmd_lattice(a, stdout, stderr),
    };
    match result {
        Ok(code) => code,
        Err(CliError { code, message }) => {
            let _ = writeln!(stderr, "error: {message}");
            code
        }
    }
}

struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn usage(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_USAGE,
            message: message.into(),
        }
    }

    fn io(e: std::io::Error) -> Self {
        CliError {
            code: EXIT_FAIL,
            message: e.to_string(),
        }
    }
}

fn emit(text: &str, out: &Option<PathBuf>, stdout: &mut dyn Write) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(CliError::io),
        None => stdout.write_all(text.as_bytes()).map_err(CliError::io),
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report serializes");
    s.push('\n');
    s
}

fn resolve_cap(flag: Option<usize>) -> Result<usize, CliError> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var(CAP_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::usage(format!("{CAP_ENV}={v} is not a nonnegative integer"))),
        Err(_) => Ok(DEFAULT_CAP),
    }
}

fn cmd_verify(a: VerifyArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, CliError> {
    let suite = Suite::parse(&a.suite).ok_or_else(|| CliError::usage(format!("unknown suite `{}`", a.suite)))?;
    let cap = resolve_cap(a.cap)?;
    let mut cases = Vec::new();
    for n in a.n.clone() {
        for d in a.d.clone() {
            match FermatCase::new(n, d, cap) {
                Ok(c) => cases.push(c),
                Err(FermatError::CapExceeded { ambient, .. }) => {
                    return Err(CliError {
                        code: EXIT_CAP,
                        message: format!("case n={n}, d={d} needs ambient rank {ambient}, above the cap {cap}"),
                    })
                }
                Err(e) => return Err(CliError::usage(e.to_string())),
            }
        }
    }
    cases.sort();

    let pool = {
        let mut b = rayon::ThreadPoolBuilder::new();
        if let Some(j) = a.jobs {
            if j == 0 {
                return Err(CliError::usage("--jobs must be positive"));
            }
            b = b.num_threads(j);
        }
        b.build().map_err(|e| CliError::usage(e.to_string()))?
    };
    let start = Instant::now();
    let results: Vec<(CaseOutcome, f64)> = pool.install(|| {
        cases
            .par_iter()
            .map(|&case| {
                let t = Instant::now();
                let outcome = match verify_case(case, &suite) {
                    Ok(r) => CaseOutcome::Report(r),
                    Err(e) => CaseOutcome::Error {
                        n: case.n,
                        d: case.d,
                        error: e.to_string(),
                        passed: false,
                    },
                };
                (outcome, t.elapsed().as_secs_f64())
            })
            .collect()
    });
    let total = start.elapsed().as_secs_f64();

    let mut summary = Summary::default();
    let mut timings = Vec::new();
    let mut outcomes = Vec::new();
    for ((outcome, secs), case) in results.into_iter().zip(&cases) {
        summary.cases += 1;
        match &outcome {
            CaseOutcome::Error { error, .. } => {
                summary.errors += 1;
                let _ = writeln!(stderr, "n={}, d={}: {error}", case.n, case.d);
            }
            CaseOutcome::Report(r) if r.passed => summary.passed += 1,
            CaseOutcome::Report(r) => {
                summary.failed += 1;
                let _ = writeln!(stderr, "n={}, d={}: failed {}", case.n, case.d, r.failed_statements().join(", "));
            }
        }
        timings.push(CaseTiming {
            n: case.n,
            d: case.d,
            seconds: secs,
        });
        outcomes.push(outcome);
    }
    let passed = outcomes.iter().all(CaseOutcome::passed);

    let text = match a.format {
        Format::Json => to_json(&VerifyOutput {
            schema: SCHEMA,
            version: env!("CARGO_PKG_VERSION"),
            command: "verify",
            spec: VerifySpec {
                n: (&a.n).into(),
                d: (&a.d).into(),
                suite: a.suite.clone(),
                cap,
            },
            summary,
            cases: outcomes,
            passed,
            timings: Timings {
                total_seconds: total,
                cases: timings,
            },
        }),
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for o in &outcomes {
                match o {
                    CaseOutcome::Report(r) => {
                        for (key, st) in &r.statements {
                            w.serialize(CsvRow {
                                n: r.n,
                                d: r.d,
                                statement: key,
                                pass: st.pass,
                            })
                            .map_err(|e| CliError::io(e.into()))?;
                        }
                    }
                    CaseOutcome::Error { n, d, .. } => {
                        w.serialize(CsvRow {
                            n: *n,
                            d: *d,
                            statement: "error",
                            pass: Some(false),
                        })
                        .map_err(|e| CliError::io(e.into()))?;
                    }
                }
            }
            String::from_utf8(w.into_inner().map_err(|e| CliError::io(e.into_error()))?).expect("csv is utf-8")
        }
    };
    emit(&text, &a.out, stdout)?;
    Ok(if passed { EXIT_PASS } else { EXIT_FAIL })
}

#[derive(Serialize)]
struct RanksOutput<'a> {
    schema: u32,
    command: &'static str,
    entries: Vec<&'a RankEntry>,
    half_ranks_d3: &'a crate::fermat::HalfRankCheck,
    all_consistent: bool,
}

/// Rank table rows as CSV, one row per `(d, n)`.
pub fn ranks_csv(entries: &[&RankEntry]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for e in entries {
        w.serialize(e).expect("rank entry serializes");
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("csv is utf-8")
}

fn cmd_ranks(a: RanksArgs, stdout: &mut dyn Write) -> Result<i32, CliError> {
    if *a.d.start() < 2 {
        return Err(CliError::usage("degrees start at 2"));
    }
    let table = rank_table(*a.d.end(), *a.n.end());
    let entries: Vec<&RankEntry> = table
        .entries
        .iter()
        .filter(|e| a.d.contains(&(e.d as usize)) && a.n.contains(&(e.n as usize)))
        .collect();
    let all_consistent = entries.iter().all(|e| e.consistent);
    let text = match a.format {
        Format::Json => to_json(&RanksOutput {
            schema: SCHEMA,
            command: "ranks",
            entries: entries.clone(),
            half_ranks_d3: &table.half_ranks_d3,
            all_consistent,
        }),
        Format::Csv => ranks_csv(&entries),
    };
    emit(&text, &a.out, stdout)?;
    Ok(if all_consistent { EXIT_PASS } else { EXIT_FAIL })
}

#[derive(Serialize)]
struct LatticeOutput<'a> {
    schema: u32,
    version: &'static str,
    command: &'static str,
    which: &'a str,
    statements: &'a std::collections::BTreeMap<&'static str, Statement>,
    passed: bool,
    timings: Timings,
}

fn cmd_lattice(a: LatticeArgs, stdout: &mut dyn Write, stderr: &mut dyn Write) -> Result<i32, CliError> {
    let which = Which::parse(&a.which).ok_or_else(|| CliError::usage(format!("unknown lattice `{}`", a.which)))?;
    let start = Instant::now();
    let report = match lattice_report(which, a.cap) {
        Ok(r) => r,
        Err(LatticeError::EnumerationCap(cap)) => {
            return Err(CliError {
                code: EXIT_CAP,
                message: format!("lattice {}: group enumeration exceeded the cap {cap}", a.which),
            })
        }
        Err(e) => {
            return Err(CliError {
                code: EXIT_FAIL,
                message: e.to_string(),
            })
        }
    };
    for (key, st) in &report.statements {
        if st.failed() {
            let _ = writeln!(stderr, "lattice: failed {key}");
        }
    }
    let text = to_json(&LatticeOutput {
        schema: SCHEMA,
        version: env!("CARGO_PKG_VERSION"),
        command: "lattice",
        which: &a.which,
        statements: &report.statements,
        passed: report.passed,
        timings: Timings {
            total_seconds: start.elapsed().as_secs_f64(),
            cases: Vec::new(),
        },
    });
    emit(&text, &a.out, stdout)?;
    Ok(if report.passed { EXIT_PASS } else { EXIT_FAIL })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_capture(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("cyclocover").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("1..3"), Ok(1..=3));
        assert_eq!(parse_range("4"), Ok(4..=4));
        assert_eq!(parse_range("2..=5"), Ok(2..=5));
        assert!(parse_range("3..1").is_err());
        assert!(parse_range("a..2").is_err());
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_capture(&["verify", "--suite", "nope"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["verify", "--n", "3..1"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["lattice", "e8"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["frobnicate"]).0, EXIT_USAGE);
        assert_eq!(run_capture(&["verify", "--n", "0", "--d", "2"]).0, EXIT_USAGE);
    }

    #[test]
    fn cap_flag_names_the_case() {
        let (code, _, err) = run_capture(&["verify", "--n", "1..2", "--d", "3", "--cap", "10"]);
        assert_eq!(code, EXIT_CAP);
        assert!(err.contains("n=2, d=3"), "{err}");
    }

    #[test]
    fn small_verify_passes() {
        let (code, out, _) = run_capture(&["verify", "--n", "1", "--d", "2..3", "--jobs", "2"]);
        assert_eq!(code, EXIT_PASS);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["schema"], 1);
        assert_eq!(v["summary"]["cases"], 2);
    }
}
