use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use confbessel_core::bessel::{BesselOrder, OrderKind};
use confbessel_core::fracseries::DEFAULT_TERMS;
use confbessel_core::Alpha;

#[derive(Debug, Parser)]
#[command(
    name = "confbessel",
    version,
    about = "Evaluate, tabulate and verify conformable fractional Bessel functions"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one solution at a single point.
    Eval(CommonArgs),
    /// Tabulate one solution over a grid.
    Table(CommonArgs),
    /// Run verification checks.
    Check(CheckArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    #[value(name = "J")]
    J,
    #[value(name = "Jneg")]
    JNeg,
    #[value(name = "y2zero")]
    Y2Zero,
    #[value(name = "K")]
    K,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckName {
    Residual,
    Identities,
    Halforder,
    Scaling,
    Operator,
    All,
}

/// Inclusive, linearly spaced `start:stop:count`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RangeSpec {
    pub start: f64,
    pub stop: f64,
    pub count: usize,
}

impl FromStr for RangeSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(':').collect();
        let [start, stop, count] = parts.as_slice() else {
            return Err(format!("expected start:stop:count, got {s:?}"));
        };
        let start: f64 = start.trim().parse().map_err(|e| format!("bad start: {e}"))?;
        let stop: f64 = stop.trim().parse().map_err(|e| format!("bad stop: {e}"))?;
        let count: usize = count.trim().parse().map_err(|e| format!("bad count: {e}"))?;
        if count < 1 {
            return Err("range count must be at least 1".into());
        }
        if !start.is_finite() || !stop.is_finite() {
            return Err("range endpoints must be finite".into());
        }
        Ok(Self { start, stop, count })
    }
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    #[arg(long, value_enum, default_value = "J")]
    pub family: Family,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub order: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub alpha: f64,
    #[arg(long, allow_negative_numbers = true, conflicts_with = "range")]
    pub x: Option<f64>,
    #[arg(long)]
    pub range: Option<RangeSpec>,
    #[arg(long, default_value_t = DEFAULT_TERMS)]
    pub terms: usize,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct CheckArgs {
    #[arg(long, value_enum, default_value = "all")]
    pub name: CheckName,
    /// Restrict `residual` to one family instead of the full corpus.
    #[arg(long, value_enum)]
    pub family: Option<Family>,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub order: f64,
    #[arg(long, default_value_t = 1.0, allow_negative_numbers = true)]
    pub alpha: f64,
    /// Overrides every check's default tolerance.
    #[arg(long, allow_negative_numbers = true)]
    pub tolerance: Option<f64>,
    /// Point grid for `residual` (single family) and pointwise identities.
    #[arg(long)]
    pub range: Option<RangeSpec>,
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

/// The solution a command is about, validated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Target {
    J(f64),
    /// Non-integer negative order `−p`.
    JNeg(f64),
    /// `(J)_{−m} = (−1)^m (J)_m`.
    JNegInteger(u32),
    Y2Zero,
    K(u32),
}

impl Target {
    pub fn new(family: Family, order: f64) -> Result<Self, String> {
        if family == Family::Y2Zero {
            return Ok(Target::Y2Zero);
        }
        let order = BesselOrder::new(order).map_err(|e| e.to_string())?;
        match (family, order.kind()) {
            (Family::J, _) => Ok(Target::J(order.value())),
            (Family::JNeg, OrderKind::Zero) => Ok(Target::JNegInteger(0)),
            (Family::JNeg, OrderKind::PositiveInteger(m)) => Ok(Target::JNegInteger(m)),
            (Family::JNeg, _) => Ok(Target::JNeg(order.value())),
            (Family::K, OrderKind::PositiveInteger(m)) => Ok(Target::K(m)),
            (Family::K, _) => Err(format!(
                "family K requires an integer order >= 1, got {}",
                order.value()
            )),
            (Family::Y2Zero, _) => unreachable!(),
        }
    }

    /// Order `p` appearing in the differential equation.
    pub fn equation_order(&self) -> f64 {
        match *self {
            Target::J(p) | Target::JNeg(p) => p,
            Target::JNegInteger(m) | Target::K(m) => m as f64,
            Target::Y2Zero => 0.0,
        }
    }

    pub fn is_log(&self) -> bool {
        matches!(self, Target::Y2Zero | Target::K(_))
    }

    pub fn label(&self) -> String {
        match self {
            Target::J(p) => format!("J(p={p})"),
            Target::JNeg(p) => format!("Jneg(p={p})"),
            Target::JNegInteger(m) => format!("Jneg(p={m})"),
            Target::Y2Zero => "y2zero".into(),
            Target::K(m) => format!("K(m={m})"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Points {
    Single(f64),
    Range(RangeSpec),
}

/// Validated configuration for `eval` and `table`.
#[derive(Debug, Clone, PartialEq)]
pub struct CliConfig {
    pub target: Target,
    pub alpha: Alpha,
    pub points: Points,
    pub terms: usize,
    pub format: Format,
    pub out: Option<PathBuf>,
}

pub fn parse_alpha(alpha: f64) -> Result<Alpha, String> {
    Alpha::new(alpha).map_err(|e| e.to_string())
}

pub fn check_tolerance(tolerance: Option<f64>) -> Result<Option<f64>, String> {
    match tolerance {
        Some(t) if !(t.is_finite() && t > 0.0) => {
            Err(format!("tolerance must be positive, got {t}"))
        }
        other => Ok(other),
    }
}

impl CliConfig {
    pub fn from_args(args: &CommonArgs) -> Result<Self, String> {
        if args.terms < 1 {
            return Err("--terms must be at least 1".into());
        }
        let points = match (args.x, args.range) {
            (Some(x), None) => Points::Single(x),
            (None, Some(r)) => Points::Range(r),
            (None, None) => return Err("one of --x or --range is required".into()),
            (Some(_), Some(_)) => return Err("--x and --range are mutually exclusive".into()),
        };
        Ok(Self {
            target: Target::new(args.family, args.order)?,
            alpha: parse_alpha(args.alpha)?,
            points,
            terms: args.terms,
            format: args.format,
            out: args.out.clone(),
        })
    }
}
