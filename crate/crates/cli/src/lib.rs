//! Front end for `confbessel`: argument handling, solution dispatch and
//! CSV / JSON / plain-text output.
//!
//! Exit codes: 0 success, 1 a check failed, 2 usage or domain error.

pub mod config;

use std::ffi::OsString;
use std::fs::File;
use std::io::{self, BufWriter, Write};

use clap::error::ErrorKind;
use clap::Parser;
use confbessel_core::bessel::{
    build_j, build_j_neg, build_k, build_y2_zero, reduce_negative_integer_order,
};
use confbessel_core::verify::{self, linspace, suite, CheckReport};
use confbessel_core::{Alpha, EvalResult, Solution};
use serde::Serialize;

use crate::config::{
    check_tolerance, parse_alpha, CheckArgs, CheckName, Cli, CliConfig, Command, Format, Points,
    Target,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

pub const CSV_HEADER: &str = "x,value,terms_used,tail_estimate";
pub const CHECK_CSV_HEADER: &str = "check_name,mode,max_abs_err,max_rel_err,tolerance,passed";

/// Builds the solution object for a validated target.
pub fn build_target(target: Target, alpha: Alpha, terms: usize) -> confbessel_core::Result<Solution> {
    Ok(match target {
        Target::J(p) => build_j(p, alpha, terms)?.into(),
        Target::JNeg(p) => build_j_neg(p, alpha, terms)?.into(),
        Target::JNegInteger(m) => reduce_negative_integer_order(m, alpha, terms)?.into(),
        Target::Y2Zero => build_y2_zero(alpha, terms)?.into(),
        Target::K(m) => build_k(m, alpha, terms)?.into(),
    })
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct Row {
    pub x: f64,
    pub value: f64,
    pub terms_used: usize,
    pub tail_estimate: f64,
}

impl Row {
    fn new(x: f64, r: EvalResult) -> Self {
        Self {
            x,
            value: r.value,
            terms_used: r.terms_used,
            tail_estimate: r.tail_estimate,
        }
    }
}

/// 17 significant digits, enough to round-trip an `f64`.
pub fn fmt_float(v: f64) -> String {
    format!("{v:.16e}")
}

fn json_line<T: Serialize>(out: &mut dyn Write, value: &T) -> io::Result<()> {
    serde_json::to_writer(&mut *out, value)?;
    out.write_all(b"\n")
}

fn write_rows(out: &mut dyn Write, rows: &[Row], format: Format) -> io::Result<()> {
    match format {
        Format::Csv => {
            writeln!(out, "{CSV_HEADER}")?;
            for r in rows {
                writeln!(
                    out,
                    "{},{},{},{}",
                    fmt_float(r.x),
                    fmt_float(r.value),
                    r.terms_used,
                    fmt_float(r.tail_estimate)
                )?;
            }
        }
        Format::Json => {
            for r in rows {
                json_line(out, r)?;
            }
        }
        Format::Plain => {
            writeln!(out, "{:>24} {:>24} {:>10} {:>24}", "x", "value", "terms_used", "tail_estimate")?;
            for r in rows {
                writeln!(
                    out,
                    "{:>24} {:>24} {:>10} {:>24}",
                    fmt_float(r.x),
                    fmt_float(r.value),
                    r.terms_used,
                    fmt_float(r.tail_estimate)
                )?;
            }
        }
    }
    Ok(())
}

fn write_reports(out: &mut dyn Write, reports: &[CheckReport], format: Format) -> io::Result<()> {
    match format {
        Format::Json => {
            for r in reports {
                json_line(out, r)?;
            }
        }
        Format::Csv => {
            writeln!(out, "{CHECK_CSV_HEADER}")?;
            for r in reports {
                writeln!(
                    out,
                    "\"{}\",{},{},{},{},{}",
                    r.check_name.replace('"', "\"\""),
                    mode_name(r),
                    fmt_float(r.max_abs_err),
                    fmt_float(r.max_rel_err),
                    fmt_float(r.tolerance),
                    r.passed
                )?;
            }
        }
        Format::Plain => {
            for r in reports {
                writeln!(
                    out,
                    "{} {:<44} {:<8} abs={:.3e} rel={:.3e} tol={:.1e} points={}",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.check_name,
                    mode_name(r),
                    r.max_abs_err,
                    r.max_rel_err,
                    r.tolerance,
                    r.grid.len()
                )?;
            }
            let failed = reports.iter().filter(|r| !r.passed).count();
            writeln!(out, "{} checks, {} failed", reports.len(), failed)?;
        }
    }
    Ok(())
}

fn mode_name(r: &CheckReport) -> &'static str {
    match r.mode {
        verify::ErrorMode::Absolute => "absolute",
        verify::ErrorMode::Relative => "relative",
    }
}

/// Everything that ends a command early with exit code 2.
#[derive(Debug)]
pub struct UsageError(pub String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

fn grid_of(points: &Points) -> Vec<f64> {
    let mut xs = match *points {
        Points::Single(x) => vec![x],
        Points::Range(r) => linspace(r.start, r.stop, r.count),
    };
    xs.sort_by(f64::total_cmp);
    xs
}

fn evaluate(cfg: &CliConfig) -> Result<Vec<Row>, UsageError> {
    let solution = build_target(cfg.target, cfg.alpha, cfg.terms)?;
    grid_of(&cfg.points)
        .into_iter()
        .map(|x| Ok(Row::new(x, solution.eval(x)?)))
        .collect()
}

/// `eval`: a single record.
pub fn run_eval(cfg: &CliConfig, out: &mut dyn Write) -> Result<i32, UsageError> {
    if !matches!(cfg.points, Points::Single(_)) {
        return Err(UsageError("eval takes a single --x".into()));
    }
    let rows = evaluate(cfg)?;
    match cfg.format {
        Format::Json => json_line(out, &rows[0])?,
        Format::Plain => {
            let r = &rows[0];
            writeln!(out, "x             = {}", fmt_float(r.x))?;
            writeln!(out, "value         = {}", fmt_float(r.value))?;
            writeln!(out, "terms_used    = {}", r.terms_used)?;
            writeln!(out, "tail_estimate = {}", fmt_float(r.tail_estimate))?;
        }
        Format::Csv => write_rows(out, &rows, Format::Csv)?,
    }
    Ok(EXIT_OK)
}

/// `table`: one row per grid point, ascending in `x`.
pub fn run_table(cfg: &CliConfig, out: &mut dyn Write) -> Result<i32, UsageError> {
    let rows = evaluate(cfg)?;
    write_rows(out, &rows, cfg.format)?;
    Ok(EXIT_OK)
}

fn collect_reports(args: &CheckArgs) -> Result<Vec<CheckReport>, UsageError> {
    let tolerance = check_tolerance(args.tolerance)?;
    let xs = args.range.map(|r| {
        let mut v = linspace(r.start, r.stop, r.count);
        v.sort_by(f64::total_cmp);
        v
    });
    let mut reports = Vec::new();
    let wants = |n: CheckName| args.name == n || args.name == CheckName::All;

    if wants(CheckName::Residual) {
        match args.family {
            Some(family) => {
                let target = Target::new(family, args.order)?;
                let alpha = parse_alpha(args.alpha)?;
                let solution = build_target(target, alpha, confbessel_core::fracseries::DEFAULT_TERMS)?;
                let (default_grid, default_tol) = if target.is_log() {
                    (linspace(0.5, 3.0, 9), verify::LOG_RESIDUAL_TOLERANCE)
                } else {
                    (linspace(0.5, 5.0, 9), verify::SERIES_RESIDUAL_TOLERANCE)
                };
                let grid = xs.clone().unwrap_or(default_grid);
                reports.push(verify::residual_check(
                    format!("residual {} alpha={}", target.label(), alpha.value()),
                    target.equation_order(),
                    &solution,
                    &grid,
                    tolerance.unwrap_or(default_tol),
                )?);
            }
            None => reports.extend(suite::residual(tolerance)?),
        }
    }
    if wants(CheckName::Identities) {
        reports.extend(suite::identities(tolerance, xs.as_deref())?);
    }
    if wants(CheckName::Halforder) {
        reports.extend(suite::half_order(tolerance)?);
    }
    if wants(CheckName::Scaling) {
        reports.extend(suite::scaling(tolerance)?);
    }
    if wants(CheckName::Operator) {
        reports.extend(suite::operator(tolerance)?);
    }
    Ok(reports)
}

/// `check`: one report per executed check; exit 1 if any failed.
pub fn run_check(args: &CheckArgs, out: &mut dyn Write) -> Result<i32, UsageError> {
    let reports = collect_reports(args)?;
    write_reports(out, &reports, args.format)?;
    Ok(if reports.iter().all(|r| r.passed) {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    })
}

fn with_output<F>(path: Option<&std::path::Path>, stdout: &mut dyn Write, body: F) -> Result<i32, UsageError>
where
    F: FnOnce(&mut dyn Write) -> Result<i32, UsageError>,
{
    match path {
        Some(p) => {
            let file = File::create(p)
                .map_err(|e| UsageError(format!("cannot write {}: {e}", p.display())))?;
            let mut w = BufWriter::new(file);
            let code = body(&mut w)?;
            w.flush()?;
            Ok(code)
        }
        None => {
            let code = body(stdout)?;
            stdout.flush()?;
            Ok(code)
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
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

    let result = match &cli.command {
        Command::Eval(args) | Command::Table(args) => {
            CliConfig::from_args(args).map_err(UsageError).and_then(|cfg| {
                with_output(cfg.out.as_deref(), stdout, |out| match cli.command {
                    Command::Eval(_) => run_eval(&cfg, out),
                    _ => run_table(&cfg, out),
                })
            })
        }
        Command::Check(args) => with_output(args.out.as_deref(), stdout, |out| run_check(args, out)),
    };

    match result {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
    }
}
