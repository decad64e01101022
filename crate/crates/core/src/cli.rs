//! Command-line front end.
//!
//! ```text
//! gamma-sharp <command> [--a R] [--n N | --n-max N] [--method M] [--family F]
//!             [--side lo|hi] [--a-grid lo:hi:step] [--suite S] [--eps R]
//!             [--prec-terms K] [--format csv|json] [--out PATH]
//! ```
//!
//! Exit codes: 0 success, 1 verification failure (report still written),
//! 2 usage or precondition error, 3 numerical error.

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::format::{fmt_num, serialize_num_opt};
use crate::grid::{self, GridSpec};
use crate::proof_certificates;
use crate::report::ScanReport;
use crate::sequences;
use crate::sharp_bounds::{self, Family, Method, Side};
use crate::special_fn::AccuracyPolicy;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

pub const CSV_HEADER: [&str; 12] = [
    "a", "n", "x_n", "y_n", "res_x", "res_y", "family", "side", "bound", "lo", "hi", "method",
];

pub const REPORT_CSV_HEADER: [&str; 6] = [
    "suite",
    "grid",
    "points_checked",
    "failures",
    "max_violation",
    "passed",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// γ(a), plus the sequence values when --n is given
    Eval,
    /// x_n, y_n and residuals for n = 1..=n_max
    Seq,
    /// Certified enclosure of γ(a)
    Enclose,
    /// Every applicable bound family at (a, n)
    Compare,
    /// Run a verification suite
    Verify,
    /// Sharpness scan of the THM13/THM14 families
    Sharpness,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Lemmas,
    Chen,
    Inequalities,
    Sequences,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "gamma-sharp",
    version,
    about = "Sharp bounds for the generalized Euler-Mascheroni constant"
)]
pub struct RunConfig {
    #[arg(value_enum)]
    pub command: Command,
    /// Parameter a > 0
    #[arg(long)]
    pub a: Option<f64>,
    /// Single sequence index
    #[arg(long, conflicts_with = "n_max")]
    pub n: Option<u64>,
    /// Largest index for tables and scans
    #[arg(long)]
    pub n_max: Option<u64>,
    /// thm13x, thm13y, thm14x, thm14y or intersect (default)
    #[arg(long, value_parser = parse_method)]
    pub method: Option<Method>,
    /// Bound family, e.g. thm14y, sint_x, alzer
    #[arg(long, value_parser = parse_family)]
    pub family: Option<Family>,
    /// lo or hi
    #[arg(long, value_parser = parse_side)]
    pub side: Option<Side>,
    /// Grid of a values as lo:hi:step
    #[arg(long, value_parser = parse_grid)]
    pub a_grid: Option<GridSpec>,
    /// Verification suite
    #[arg(long, value_enum)]
    pub suite: Option<Suite>,
    /// Relative slack (verify) or attainment tolerance (sharpness)
    #[arg(long, value_parser = parse_eps)]
    pub eps: Option<f64>,
    /// Asymptotic series terms
    #[arg(long)]
    pub prec_terms: Option<usize>,
    /// Output format
    #[arg(long, value_enum, default_value_t)]
    pub format: OutputFormat,
    /// Write output to this file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn parse_method(s: &str) -> Result<Method, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_side(s: &str) -> Result<Side, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_grid(s: &str) -> Result<GridSpec, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_eps(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    if v.is_finite() && v > 0.0 {
        Ok(v)
    } else {
        Err(format!("eps must be > 0, got {s}"))
    }
}

/// One output row in the fixed column order of [`CSV_HEADER`]. JSON output
/// is an array of these objects with the same keys, `null` where CSV is empty.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Row {
    #[serde(serialize_with = "serialize_num_opt")]
    pub a: Option<f64>,
    pub n: Option<u64>,
    #[serde(serialize_with = "serialize_num_opt")]
    pub x_n: Option<f64>,
    #[serde(serialize_with = "serialize_num_opt")]
    pub y_n: Option<f64>,
    #[serde(serialize_with = "serialize_num_opt")]
    pub res_x: Option<f64>,
    #[serde(serialize_with = "serialize_num_opt")]
    pub res_y: Option<f64>,
    pub family: Option<String>,
    pub side: Option<String>,
    #[serde(serialize_with = "serialize_num_opt")]
    pub bound: Option<f64>,
    #[serde(serialize_with = "serialize_num_opt")]
    pub lo: Option<f64>,
    #[serde(serialize_with = "serialize_num_opt")]
    pub hi: Option<f64>,
    pub method: Option<String>,
}

impl Row {
    fn fields(&self) -> [String; 12] {
        let num = |v: Option<f64>| v.map(fmt_num).unwrap_or_default();
        [
            num(self.a),
            self.n.map(|n| n.to_string()).unwrap_or_default(),
            num(self.x_n),
            num(self.y_n),
            num(self.res_x),
            num(self.res_y),
            self.family.clone().unwrap_or_default(),
            self.side.clone().unwrap_or_default(),
            num(self.bound),
            num(self.lo),
            num(self.hi),
            self.method.clone().unwrap_or_default(),
        ]
    }

    fn point(p: &sequences::SeqPoint) -> Self {
        Row {
            a: Some(p.a),
            n: Some(p.n),
            x_n: Some(p.x_n),
            y_n: Some(p.y_n),
            res_x: Some(p.res_x),
            res_y: Some(p.res_y),
            ..Row::default()
        }
    }
}

enum Output {
    Rows(Vec<Row>),
    Reports(Vec<ScanReport>),
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Lib(Error),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.into())
    }
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Accuracy { .. } | Error::Inconsistent(_) => EXIT_NUMERIC,
        Error::Domain { .. }
        | Error::Policy(_)
        | Error::Resource { .. }
        | Error::Precondition(_) => EXIT_USAGE,
    }
}

fn missing(flag: &str, command: Command) -> Failure {
    let name = command.to_possible_value().expect("no skipped variants");
    Failure::Usage(format!(
        "missing required flag {flag} for {}",
        name.get_name()
    ))
}

fn require<T>(v: Option<T>, flag: &str, command: Command) -> Result<T, Failure> {
    v.ok_or_else(|| missing(flag, command))
}

fn a_values(cfg: &RunConfig) -> Result<Vec<f64>, Failure> {
    match (cfg.a, cfg.a_grid) {
        (Some(_), Some(_)) => Err(Failure::Usage(
            "--a and --a-grid are mutually exclusive".into(),
        )),
        (Some(a), None) => Ok(vec![a]),
        (None, Some(g)) => Ok(g.points()),
        (None, None) => Err(missing("--a", cfg.command)),
    }
}

fn policy(cfg: &RunConfig) -> Result<AccuracyPolicy, Failure> {
    let p = AccuracyPolicy::default();
    Ok(match cfg.prec_terms {
        Some(k) => p.with_series_terms(k)?,
        None => p,
    })
}

fn eval_rows(cfg: &RunConfig, p: &AccuracyPolicy) -> Result<Vec<Row>, Failure> {
    let mut rows = Vec::new();
    for a in a_values(cfg)? {
        let g = sequences::gamma_a(a, p)?;
        let mut row = match cfg.n {
            Some(n) => Row::point(&sequences::seq_point(a, n, p)?),
            None => Row {
                a: Some(a),
                ..Row::default()
            },
        };
        row.bound = Some(g.value);
        row.lo = Some(g.value - g.abs_error_bound);
        row.hi = Some(g.value + g.abs_error_bound);
        row.method = Some("eval".into());
        rows.push(row);
    }
    Ok(rows)
}

fn seq_rows(cfg: &RunConfig, p: &AccuracyPolicy) -> Result<Vec<Row>, Failure> {
    let n_max = require(cfg.n_max.or(cfg.n), "--n-max", cfg.command)?;
    let mut rows = Vec::new();
    for a in a_values(cfg)? {
        rows.extend(sequences::table(a, n_max, p)?.iter().map(Row::point));
    }
    Ok(rows)
}

fn enclose_rows(cfg: &RunConfig, p: &AccuracyPolicy) -> Result<Vec<Row>, Failure> {
    let n = require(cfg.n, "--n", cfg.command)?;
    let method = cfg.method.unwrap_or(Method::Intersect);
    let mut rows = Vec::new();
    for a in a_values(cfg)? {
        let e = sharp_bounds::enclose(a, n, method, p)?;
        let point = sequences::seq_point(a, n, p)?;
        rows.push(Row {
            family: method.family().map(|f| f.name().to_string()),
            lo: Some(e.lo),
            hi: Some(e.hi),
            method: Some(method.name().to_string()),
            ..Row::point(&point)
        });
    }
    Ok(rows)
}

fn compare_rows(cfg: &RunConfig, p: &AccuracyPolicy) -> Result<Vec<Row>, Failure> {
    let n = require(cfg.n, "--n", cfg.command)?;
    let families: Vec<Family> = match cfg.family {
        Some(f) => vec![f],
        None => Family::ALL.to_vec(),
    };
    let sides: Vec<Side> = match cfg.side {
        Some(s) => vec![s],
        None => vec![Side::Lo, Side::Hi],
    };
    let explicit = cfg.family.is_some();
    let mut rows = Vec::new();
    for a in a_values(cfg)? {
        let point = sequences::seq_point(a, n, p)?;
        for &family in &families {
            for &side in &sides {
                match sharp_bounds::bound_residual(a, n, family, side, p) {
                    Ok(bound) => rows.push(Row {
                        family: Some(family.name().to_string()),
                        side: Some(side.name().to_string()),
                        bound: Some(bound),
                        ..Row::point(&point)
                    }),
                    // Listing everything: skip families that do not apply here.
                    Err(Error::Precondition(_)) if !explicit => {}
                    Err(e) => return Err(e.into()),
                }
            }
        }
    }
    Ok(rows)
}

fn verify_reports(cfg: &RunConfig, p: &AccuracyPolicy) -> Result<Vec<ScanReport>, Failure> {
    let suite = require(cfg.suite, "--suite", cfg.command)?;
    let a_grid = match (cfg.a, cfg.a_grid) {
        (None, None) => None,
        _ => Some(a_values(cfg)?),
    };
    let n_max = cfg.n_max.or(cfg.n).unwrap_or(100_000);
    let suites = match suite {
        Suite::All => vec![
            Suite::Lemmas,
            Suite::Chen,
            Suite::Inequalities,
            Suite::Sequences,
        ],
        s => vec![s],
    };
    let mut reports = Vec::new();
    for s in suites {
        reports.push(match s {
            Suite::Lemmas => proof_certificates::lemma_suite(p)?,
            Suite::Chen => {
                proof_certificates::chen_certificates(&proof_certificates::default_chen_grid(), p)?
            }
            Suite::Inequalities => sharp_bounds::verify_sharp_inequalities(
                a_grid.as_deref().unwrap_or(&grid::default_a_grid()),
                &grid::default_n_grid(n_max),
                cfg.eps.unwrap_or(1e-13),
                p,
            )?,
            Suite::Sequences => match &a_grid {
                Some(a) => proof_certificates::sequence_suite(
                    a,
                    n_max.min(1000),
                    &grid::default_n_grid(n_max),
                    p,
                )?,
                None => proof_certificates::default_sequence_suite(p)?,
            },
            Suite::All => unreachable!(),
        });
    }
    Ok(reports)
}

fn sharpness_reports(cfg: &RunConfig, p: &AccuracyPolicy) -> Result<Vec<ScanReport>, Failure> {
    let families = match cfg.family {
        Some(f) => vec![f],
        None => Family::SHARP.to_vec(),
    };
    let n_max = cfg.n_max.or(cfg.n).unwrap_or(1_000_000);
    let eps = cfg.eps.unwrap_or(1e-12);
    let mut reports = Vec::new();
    for a in a_values(cfg)? {
        for &family in &families {
            reports.push(sharp_bounds::sharpness_scan(a, family, n_max, eps, p)?);
        }
    }
    Ok(reports)
}

fn write_output(out: &Output, format: OutputFormat, w: &mut dyn Write) -> Result<(), Failure> {
    match (out, format) {
        (Output::Rows(rows), OutputFormat::Csv) => {
            let mut csv = csv::Writer::from_writer(w);
            csv.write_record(CSV_HEADER)?;
            for r in rows {
                csv.write_record(r.fields())?;
            }
            csv.flush()?;
        }
        (Output::Rows(rows), OutputFormat::Json) => {
            serde_json::to_writer_pretty(&mut *w, rows).map_err(io::Error::from)?;
            writeln!(w)?;
        }
        (Output::Reports(reports), OutputFormat::Csv) => {
            let mut csv = csv::Writer::from_writer(w);
            csv.write_record(REPORT_CSV_HEADER)?;
            for r in reports {
                let max = if r.max_violation.is_finite() {
                    fmt_num(r.max_violation)
                } else {
                    String::new()
                };
                csv.write_record([
                    r.suite.clone(),
                    r.grid.clone(),
                    r.points_checked.to_string(),
                    r.failures.len().to_string(),
                    max,
                    r.passed.to_string(),
                ])?;
            }
            csv.flush()?;
        }
        (Output::Reports(reports), OutputFormat::Json) => {
            if let [single] = reports.as_slice() {
                serde_json::to_writer_pretty(&mut *w, single).map_err(io::Error::from)?;
            } else {
                serde_json::to_writer_pretty(&mut *w, reports).map_err(io::Error::from)?;
            }
            writeln!(w)?;
        }
    }
    Ok(())
}

fn execute(cfg: &RunConfig, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let p = policy(cfg)?;
    let output = match cfg.command {
        Command::Eval => Output::Rows(eval_rows(cfg, &p)?),
        Command::Seq => Output::Rows(seq_rows(cfg, &p)?),
        Command::Enclose => Output::Rows(enclose_rows(cfg, &p)?),
        Command::Compare => Output::Rows(compare_rows(cfg, &p)?),
        Command::Verify => Output::Reports(verify_reports(cfg, &p)?),
        Command::Sharpness => Output::Reports(sharpness_reports(cfg, &p)?),
    };
    // Assemble fully before writing so a late error leaves no partial output.
    let mut buf = Vec::new();
    write_output(&output, cfg.format, &mut buf)?;
    match &cfg.out {
        Some(path) => File::create(path)?.write_all(&buf)?,
        None => stdout.write_all(&buf)?,
    }
    let passed = match &output {
        Output::Reports(r) => r.iter().all(|r| r.passed),
        Output::Rows(_) => true,
    };
    Ok(if passed { EXIT_OK } else { EXIT_VERIFICATION })
}

/// Runs the CLI with explicit streams and returns the exit code.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match RunConfig::try_parse_from(args) {
        Ok(cfg) => cfg,
        Err(e) => {
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{}", e.render());
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cfg, stdout) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(stderr, "error: {e}");
            EXIT_USAGE
        }
    }
}

/// Runs the CLI against the process streams.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with(args, &mut io::stdout().lock(), &mut io::stderr().lock())
}
