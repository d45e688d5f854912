//! Numerical and coefficient-level checks of the constructed solutions:
//! ODE residuals, the recurrence/derivative identities of the first-kind
//! functions, the half-order closed forms, α-scaling of the second
//! solutions, and agreement with an independent quadrature oracle.

use std::f64::consts::PI;

use serde::Serialize;

use crate::bessel::{
    build_j, build_j_neg, build_k, build_y2_zero, reduce_negative_integer_order,
};
use crate::conformable::{conformable_diff_numeric, DiffConfig};
use crate::error::{Error, Result};
use crate::fracseries::{Alpha, FracSeries, Solution, DEFAULT_TERMS};
use crate::special::{factorial, reciprocal_gamma};

pub const POINTWISE_TOLERANCE: f64 = 1e-9;
pub const COEFFICIENT_TOLERANCE: f64 = 1e-14;
pub const SERIES_RESIDUAL_TOLERANCE: f64 = 1e-8;
pub const LOG_RESIDUAL_TOLERANCE: f64 = 1e-7;
pub const HALF_ORDER_TOLERANCE: f64 = 1e-10;
pub const ORACLE_TOLERANCE: f64 = 1e-9;
pub const SCALING_TOLERANCE: f64 = 1e-10;
pub const OPERATOR_TOLERANCE: f64 = 1e-5;

/// Number of leading coefficients compared by coefficient-wise checks.
pub const COMPARED_COEFFS: usize = 30;

/// Trapezoid panels used by [`classical_oracle_j`].
pub const ORACLE_PANELS: usize = 1024;

pub const IDENTITY_ORDERS: [u32; 3] = [1, 2, 3];
pub const IDENTITY_ALPHAS: [f64; 4] = [0.3, 0.5, 0.75, 1.0];
pub const IDENTITY_XS: [f64; 4] = [0.5, 1.0, 2.0, 4.0];
pub const HALF_ORDER_XS: [f64; 6] = [0.25, 0.5, 1.0, 2.0, 4.0, 8.0];
pub const RESIDUAL_ALPHAS: [f64; 3] = [0.4, 0.7, 1.0];
pub const SCALING_ALPHAS: [f64; 3] = [0.3, 0.5, 0.8];

/// `count` evenly spaced points on `[start, stop]`, endpoints included.
pub fn linspace(start: f64, stop: f64, count: usize) -> Vec<f64> {
    match count {
        0 => Vec::new(),
        1 => vec![start],
        _ => {
            let step = (stop - start) / (count - 1) as f64;
            (0..count)
                .map(|i| if i + 1 == count { stop } else { start + step * i as f64 })
                .collect()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ErrorMode {
    Absolute,
    Relative,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GridPoint {
    pub p: f64,
    pub alpha: f64,
    /// `None` for coefficient-level comparisons.
    pub x: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckReport {
    pub check_name: String,
    pub grid: Vec<GridPoint>,
    pub max_abs_err: f64,
    pub max_rel_err: f64,
    pub tolerance: f64,
    pub mode: ErrorMode,
    pub passed: bool,
}

impl CheckReport {
    /// Combines reports of the same mode into one under a new name.
    pub fn merge(name: impl Into<String>, reports: &[CheckReport]) -> Result<CheckReport> {
        let first = reports
            .first()
            .ok_or_else(|| Error::Invalid("nothing to merge".into()))?;
        let mut out = CheckBuilder::new(name, first.tolerance, first.mode);
        for r in reports {
            if r.mode != first.mode {
                return Err(Error::Invalid("cannot merge reports of different modes".into()));
            }
            out.grid.extend_from_slice(&r.grid);
            out.max_abs = sticky_max(out.max_abs, r.max_abs_err);
            out.max_rel = sticky_max(out.max_rel, r.max_rel_err);
            out.tolerance = out.tolerance.min(r.tolerance);
        }
        out.finish()
    }
}

// f64::max drops NaN; a NaN deviation must fail the check instead
fn sticky_max(acc: f64, v: f64) -> f64 {
    if acc.is_nan() || v.is_nan() {
        f64::NAN
    } else {
        acc.max(v)
    }
}

struct CheckBuilder {
    name: String,
    tolerance: f64,
    mode: ErrorMode,
    grid: Vec<GridPoint>,
    max_abs: f64,
    max_rel: f64,
}

impl CheckBuilder {
    fn new(name: impl Into<String>, tolerance: f64, mode: ErrorMode) -> Self {
        Self {
            name: name.into(),
            tolerance,
            mode,
            grid: Vec::new(),
            max_abs: 0.0,
            max_rel: 0.0,
        }
    }

    fn point(&mut self, p: f64, alpha: f64, x: Option<f64>) {
        self.grid.push(GridPoint { p, alpha, x });
    }

    fn deviation(&mut self, abs: f64, rel: f64) {
        // NaN must fail the check, so it is propagated rather than dropped by max()
        self.max_abs = sticky_max(self.max_abs, abs);
        self.max_rel = sticky_max(self.max_rel, rel);
    }

    /// Records `|got − want|` with relative error against `max(|got|, |want|)`.
    fn compare(&mut self, got: f64, want: f64) {
        let abs = (got - want).abs();
        let scale = got.abs().max(want.abs());
        let rel = if abs == 0.0 { 0.0 } else { abs / scale };
        self.deviation(abs, rel);
    }

    fn finish(self) -> Result<CheckReport> {
        if self.grid.is_empty() {
            return Err(Error::Invalid(format!("check {} has an empty grid", self.name)));
        }
        let err = match self.mode {
            ErrorMode::Absolute => self.max_abs,
            ErrorMode::Relative => self.max_rel,
        };
        Ok(CheckReport {
            check_name: self.name,
            grid: self.grid,
            max_abs_err: self.max_abs,
            max_rel_err: self.max_rel,
            tolerance: self.tolerance,
            mode: self.mode,
            passed: err <= self.tolerance,
        })
    }
}

fn check_grid(grid: &[f64]) -> Result<()> {
    match grid.iter().find(|&&x| !(x.is_finite() && x > 0.0)) {
        Some(&x) => Err(Error::Domain(x)),
        None if grid.is_empty() => Err(Error::Invalid("empty grid".into())),
        None => Ok(()),
    }
}

/// Left side of the conformable Bessel equation of order `p` at `x`,
/// given `y`, `T_α y` and `T_α T_α y`.
fn bessel_operator(p: f64, alpha: f64, x: f64, y: f64, dy: f64, ddy: f64) -> f64 {
    let t = x.powf(alpha);
    t * t * ddy + alpha * t * dy + alpha * alpha * (t * t - p * p) * y
}

/// Residual `|x^{2α}T T y + α x^α T y + α²(x^{2α} − p²) y| / (1 + |y|)` with
/// both derivatives taken exactly on the series.
pub fn residual_check(
    name: impl Into<String>,
    p: f64,
    solution: &Solution,
    grid: &[f64],
    tolerance: f64,
) -> Result<CheckReport> {
    check_grid(grid)?;
    let alpha = solution.alpha().value();
    let d1 = solution.conformable_diff()?;
    let d2 = d1.conformable_diff()?;
    let mut report = CheckBuilder::new(name, tolerance, ErrorMode::Relative);
    for &x in grid {
        let y = solution.eval(x)?.value;
        let r = bessel_operator(p, alpha, x, y, d1.eval(x)?.value, d2.eval(x)?.value);
        report.point(p, alpha, Some(x));
        report.deviation(r.abs(), r.abs() / (1.0 + y.abs()));
    }
    report.finish()
}

/// How an identity is probed.
#[derive(Debug, Clone, PartialEq)]
pub enum Probe {
    /// Compare the leading `n` coefficients after aligning offsets.
    Coefficients(usize),
    /// Compare values at these points.
    Points(Vec<f64>),
}

fn compare_series(report: &mut CheckBuilder, lhs: &FracSeries, rhs: &FracSeries, count: usize) -> Result<()> {
    let (lhs, rhs) = FracSeries::align(lhs, rhs)?;
    let count = count.min(lhs.len()).min(rhs.len());
    for k in 0..count {
        report.compare(lhs.coeff(k), rhs.coeff(k));
    }
    Ok(())
}

fn terms_for(count: usize) -> usize {
    DEFAULT_TERMS.max(count + 8)
}

fn require_positive(p: u32, what: &str) -> Result<()> {
    if p == 0 {
        Err(Error::Order(format!("{what} references order p-1 and needs p >= 1")))
    } else {
        Ok(())
    }
}

fn probe_mode(probe: &Probe) -> ErrorMode {
    match probe {
        Probe::Coefficients(_) => ErrorMode::Relative,
        Probe::Points(_) => ErrorMode::Absolute,
    }
}

/// `T_α(x^{pα} (J_α)_p) = α x^{pα} (J_α)_{p−1}`.
pub fn identity_check_i(p: u32, alpha: Alpha, probe: &Probe, tolerance: f64) -> Result<CheckReport> {
    require_positive(p, "identity (i)")?;
    let a = alpha.value();
    let pf = p as f64;
    let mut report = CheckBuilder::new("identity_i", tolerance, probe_mode(probe));
    match probe {
        Probe::Coefficients(count) => {
            let n = terms_for(*count);
            let lhs = build_j(pf, alpha, n)?.shift(pf).conformable_diff();
            let rhs = build_j(pf - 1.0, alpha, n)?.shift(pf).scale(a);
            compare_series(&mut report, &lhs, &rhs, *count)?;
            report.point(pf, a, None);
        }
        Probe::Points(grid) => {
            check_grid(grid)?;
            let lhs = build_j(pf, alpha, DEFAULT_TERMS)?.shift(pf).conformable_diff();
            let lower = build_j(pf - 1.0, alpha, DEFAULT_TERMS)?;
            for &x in grid {
                let want = a * x.powf(pf * a) * lower.eval(x)?.value;
                report.compare(lhs.eval(x)?.value, want);
                report.point(pf, a, Some(x));
            }
        }
    }
    report.finish()
}

/// `T_α(x^{−pα} (J_α)_p) = −α x^{−pα} (J_α)_{p+1}`.
pub fn identity_check_ii(p: u32, alpha: Alpha, probe: &Probe, tolerance: f64) -> Result<CheckReport> {
    let a = alpha.value();
    let pf = p as f64;
    let mut report = CheckBuilder::new("identity_ii", tolerance, probe_mode(probe));
    match probe {
        Probe::Coefficients(count) => {
            let n = terms_for(*count);
            let lhs = build_j(pf, alpha, n)?.shift(-pf).conformable_diff();
            let rhs = build_j(pf + 1.0, alpha, n)?.shift(-pf).scale(-a);
            compare_series(&mut report, &lhs, &rhs, *count)?;
            report.point(pf, a, None);
        }
        Probe::Points(grid) => {
            check_grid(grid)?;
            let lhs = build_j(pf, alpha, DEFAULT_TERMS)?.shift(-pf).conformable_diff();
            let upper = build_j(pf + 1.0, alpha, DEFAULT_TERMS)?;
            for &x in grid {
                let want = -a * x.powf(-pf * a) * upper.eval(x)?.value;
                report.compare(lhs.eval(x)?.value, want);
                report.point(pf, a, Some(x));
            }
        }
    }
    report.finish()
}

fn pointwise_identity<F>(
    name: &str,
    p: u32,
    alpha: Alpha,
    grid: &[f64],
    tolerance: f64,
    mut sides: F,
) -> Result<CheckReport>
where
    F: FnMut(f64) -> Result<(f64, f64)>,
{
    check_grid(grid)?;
    let mut report = CheckBuilder::new(name, tolerance, ErrorMode::Absolute);
    for &x in grid {
        let (lhs, rhs) = sides(x)?;
        report.compare(lhs, rhs);
        report.point(p as f64, alpha.value(), Some(x));
    }
    report.finish()
}

/// `T_α (J_α)_p = α (J_α)_{p−1} − (αp / x^α) (J_α)_p`, pointwise.
pub fn identity_check_iii(p: u32, alpha: Alpha, grid: &[f64], tolerance: f64) -> Result<CheckReport> {
    require_positive(p, "identity (iii)")?;
    let a = alpha.value();
    let pf = p as f64;
    let j = build_j(pf, alpha, DEFAULT_TERMS)?;
    let dj = j.conformable_diff();
    let lower = build_j(pf - 1.0, alpha, DEFAULT_TERMS)?;
    pointwise_identity("identity_iii", p, alpha, grid, tolerance, |x| {
        let t = x.powf(a);
        let rhs = a * lower.eval(x)?.value - a * pf / t * j.eval(x)?.value;
        Ok((dj.eval(x)?.value, rhs))
    })
}

/// `T_α (J_α)_p = (αp / x^α) (J_α)_p − α (J_α)_{p+1}`, pointwise.
pub fn identity_check_iv(p: u32, alpha: Alpha, grid: &[f64], tolerance: f64) -> Result<CheckReport> {
    let a = alpha.value();
    let pf = p as f64;
    let j = build_j(pf, alpha, DEFAULT_TERMS)?;
    let dj = j.conformable_diff();
    let upper = build_j(pf + 1.0, alpha, DEFAULT_TERMS)?;
    pointwise_identity("identity_iv", p, alpha, grid, tolerance, |x| {
        let t = x.powf(a);
        let rhs = a * pf / t * j.eval(x)?.value - a * upper.eval(x)?.value;
        Ok((dj.eval(x)?.value, rhs))
    })
}

/// `(J_α)_{p+1} = (2p / x^α) (J_α)_p − (J_α)_{p−1}`, pointwise.
pub fn identity_check_v(p: u32, alpha: Alpha, grid: &[f64], tolerance: f64) -> Result<CheckReport> {
    require_positive(p, "identity (v)")?;
    let a = alpha.value();
    let pf = p as f64;
    let j = build_j(pf, alpha, DEFAULT_TERMS)?;
    let lower = build_j(pf - 1.0, alpha, DEFAULT_TERMS)?;
    let upper = build_j(pf + 1.0, alpha, DEFAULT_TERMS)?;
    pointwise_identity("identity_v", p, alpha, grid, tolerance, |x| {
        let t = x.powf(a);
        let rhs = 2.0 * pf / t * j.eval(x)?.value - lower.eval(x)?.value;
        Ok((upper.eval(x)?.value, rhs))
    })
}

/// The negative-order series `Σ (−1)^n / (n! Γ(n−m+1)) (x^α/2)^{2n−m}` taken
/// literally with `1/Γ = 0` at the poles, i.e. the limit of the non-integer
/// construction. Built without the recurrence.
pub fn negative_order_limit_series(m: u32, alpha: Alpha, n_terms: usize) -> Result<FracSeries> {
    let mf = m as f64;
    let coeffs = (0..n_terms)
        .map(|k| {
            if k % 2 == 1 {
                return 0.0;
            }
            let n = (k / 2) as u32;
            let sign = if n.is_multiple_of(2) { 1.0 } else { -1.0 };
            sign * reciprocal_gamma(n as f64 - mf + 1.0)
                / (factorial(n) * 2f64.powi(2 * n as i32 - m as i32))
        })
        .collect();
    FracSeries::new(alpha, -mf, coeffs)
}

/// `(J_α)_{−m} = (−1)^m (J_α)_m`, checked coefficient-wise: the reduction
/// is compared with the literal negative-order series (whose first `m`
/// terms vanish through `1/Γ`), and with `(−1)^m (J_α)_m` directly.
pub fn identity_check_vi(m: u32, alpha: Alpha, count: usize, tolerance: f64) -> Result<CheckReport> {
    let a = alpha.value();
    let n = terms_for(count);
    let reduced = reduce_negative_integer_order(m, alpha, n)?;
    let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
    let direct = build_j(m as f64, alpha, n)?.scale(sign);
    let limit = negative_order_limit_series(m, alpha, n + 2 * m as usize)?;

    let mut report = CheckBuilder::new("identity_vi", tolerance, ErrorMode::Relative);
    compare_series(&mut report, &reduced, &direct, count)?;
    // the limit series starts 2m slots earlier; compare over the same span
    compare_series(&mut report, &limit, &reduced, count + 2 * m as usize)?;
    report.point(-(m as f64), a, None);
    report.finish()
}

/// `(J_α)_{±1/2}` against `√(2/(π x^α)) sin(x^α)` and `… cos(x^α)`.
pub fn half_order_check(alpha: Alpha, grid: &[f64], tolerance: f64) -> Result<CheckReport> {
    check_grid(grid)?;
    let a = alpha.value();
    let plus = build_j(0.5, alpha, DEFAULT_TERMS)?;
    let minus = build_j_neg(0.5, alpha, DEFAULT_TERMS)?;
    let mut report = CheckBuilder::new("half_order", tolerance, ErrorMode::Absolute);
    for &x in grid {
        let t = x.powf(a);
        let amp = (2.0 / (PI * t)).sqrt();
        report.compare(plus.eval(x)?.value, amp * t.sin());
        report.point(0.5, a, Some(x));
        report.compare(minus.eval(x)?.value, amp * t.cos());
        report.point(-0.5, a, Some(x));
    }
    report.finish()
}

/// Classical `J_n(z) = (1/π) ∫₀^π cos(nθ − z sin θ) dθ` by the trapezoid
/// rule. The integrand extends to a smooth 2π-periodic even function, so the
/// rule converges geometrically. Shares no code with the series engine.
pub fn classical_oracle_j(n: u32, z: f64) -> f64 {
    let panels = ORACLE_PANELS;
    let h = PI / panels as f64;
    let nf = n as f64;
    let f = |theta: f64| (nf * theta - z * theta.sin()).cos();
    let interior: f64 = (1..panels).map(|k| f(h * k as f64)).sum();
    (interior + 0.5 * (f(0.0) + f(PI))) * h / PI
}

/// Series `(J_α)_p(x)` against the quadrature oracle at `z = x^α`.
pub fn oracle_check(p: u32, alpha: Alpha, grid: &[f64], tolerance: f64) -> Result<CheckReport> {
    check_grid(grid)?;
    let a = alpha.value();
    let j = build_j(p as f64, alpha, DEFAULT_TERMS)?;
    let mut report = CheckBuilder::new("oracle", tolerance, ErrorMode::Absolute);
    for &x in grid {
        report.compare(j.eval(x)?.value, classical_oracle_j(p, x.powf(a)));
        report.point(p as f64, a, Some(x));
    }
    report.finish()
}

/// Which second solution a scaling check targets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SecondKind {
    /// The order-zero logarithmic solution.
    Y2Zero,
    /// `(K_α)_m`.
    K(u32),
}

impl SecondKind {
    pub fn build(self, alpha: Alpha) -> Result<Solution> {
        Ok(match self {
            SecondKind::Y2Zero => build_y2_zero(alpha, DEFAULT_TERMS)?.into(),
            SecondKind::K(m) => build_k(m, alpha, DEFAULT_TERMS)?.into(),
        })
    }

    fn order(self) -> f64 {
        match self {
            SecondKind::Y2Zero => 0.0,
            SecondKind::K(m) => m as f64,
        }
    }

    fn name(self) -> &'static str {
        match self {
            SecondKind::Y2Zero => "scaling_y2zero",
            SecondKind::K(_) => "scaling_k",
        }
    }
}

/// The α-instance against `(1/α)·(α = 1 instance at x^α)`.
pub fn second_solution_scaling_check(
    kind: SecondKind,
    alpha: Alpha,
    grid: &[f64],
    tolerance: f64,
) -> Result<CheckReport> {
    check_grid(grid)?;
    let a = alpha.value();
    let scaled = kind.build(alpha)?;
    let classical = kind.build(Alpha::one())?;
    let mut report = CheckBuilder::new(kind.name(), tolerance, ErrorMode::Absolute);
    for &x in grid {
        let want = classical.eval(x.powf(a))?.value / a;
        report.compare(scaled.eval(x)?.value, want);
        report.point(kind.order(), a, Some(x));
    }
    report.finish()
}

/// Both halves of the scaling property for integer order `p`: the
/// first-kind series against the oracle, and the second solution of the
/// same order (`y_2` for `p = 0`, `(K_α)_p` otherwise) against its rescaled
/// classical instance.
pub fn scaling_check(p: u32, alpha: Alpha, grid: &[f64], tolerance: f64) -> Result<Vec<CheckReport>> {
    let kind = if p == 0 { SecondKind::Y2Zero } else { SecondKind::K(p) };
    Ok(vec![
        oracle_check(p, alpha, grid, tolerance)?,
        second_solution_scaling_check(kind, alpha, grid, tolerance)?,
    ])
}

/// Numeric conformable derivative of the evaluated solution against the
/// exact series derivative, absolute deviation.
pub fn operator_check(
    name: impl Into<String>,
    p: f64,
    solution: &Solution,
    grid: &[f64],
    tolerance: f64,
) -> Result<CheckReport> {
    check_grid(grid)?;
    let alpha = solution.alpha();
    let exact = solution.conformable_diff()?;
    let cfg = DiffConfig::first(alpha);
    let f = |x: f64| solution.eval(x).map(|r| r.value).unwrap_or(f64::NAN);
    let mut report = CheckBuilder::new(name, tolerance, ErrorMode::Absolute);
    for &x in grid {
        let numeric = conformable_diff_numeric(f, x, &cfg)?;
        report.compare(numeric, exact.eval(x)?.value);
        report.point(p, alpha.value(), Some(x));
    }
    report.finish()
}

/// A labelled member of the standard solution corpus.
#[derive(Debug, Clone)]
pub struct CorpusEntry {
    pub label: String,
    pub order: f64,
    pub solution: Solution,
    pub is_log: bool,
}

/// The constructed solutions used by residual and operator checks:
/// `J` at `p ∈ {0, 1/2, 1, 5/2, 3}`, `J_neg` at `p ∈ {1/2, 5/2}`, `y_2`,
/// and `K` at `m ∈ {1, 2}`.
pub fn solution_corpus(alpha: Alpha) -> Result<Vec<CorpusEntry>> {
    let mut out = Vec::new();
    for p in [0.0, 0.5, 1.0, 2.5, 3.0] {
        out.push(CorpusEntry {
            label: format!("J(p={p})"),
            order: p,
            solution: build_j(p, alpha, DEFAULT_TERMS)?.into(),
            is_log: false,
        });
    }
    for p in [0.5, 2.5] {
        out.push(CorpusEntry {
            label: format!("Jneg(p={p})"),
            order: p,
            solution: build_j_neg(p, alpha, DEFAULT_TERMS)?.into(),
            is_log: false,
        });
    }
    out.push(CorpusEntry {
        label: "y2zero".into(),
        order: 0.0,
        solution: build_y2_zero(alpha, DEFAULT_TERMS)?.into(),
        is_log: true,
    });
    for m in [1, 2] {
        out.push(CorpusEntry {
            label: format!("K(m={m})"),
            order: m as f64,
            solution: build_k(m, alpha, DEFAULT_TERMS)?.into(),
            is_log: true,
        });
    }
    Ok(out)
}

/// Ready-made suites over the default grids. A `tolerance` of `None` uses
/// each check's own default.
pub mod suite {
    use super::*;

    fn tol(over: Option<f64>, default: f64) -> f64 {
        over.unwrap_or(default)
    }

    /// Residuals of the whole corpus: series solutions on 9 points of
    /// `[0.5, 5]`, log solutions on 9 points of `[0.5, 3]`.
    pub fn residual(tolerance: Option<f64>) -> Result<Vec<CheckReport>> {
        let mut out = Vec::new();
        for &a in &RESIDUAL_ALPHAS {
            for entry in solution_corpus(Alpha::new(a)?)? {
                out.push(residual_for(&entry, tolerance)?);
            }
        }
        Ok(out)
    }

    pub fn residual_for(entry: &CorpusEntry, tolerance: Option<f64>) -> Result<CheckReport> {
        let (grid, default) = if entry.is_log {
            (linspace(0.5, 3.0, 9), LOG_RESIDUAL_TOLERANCE)
        } else {
            (linspace(0.5, 5.0, 9), SERIES_RESIDUAL_TOLERANCE)
        };
        residual_check(
            format!("residual {} alpha={}", entry.label, entry.solution.alpha().value()),
            entry.order,
            &entry.solution,
            &grid,
            tol(tolerance, default),
        )
    }

    /// Identities (i)–(vi) over `p ∈ {1,2,3}` (and `p = 0` where defined),
    /// `α ∈ {0.3, 0.5, 0.75, 1}`. Pointwise probes use `x ∈ {0.5, 1, 2, 4}`
    /// unless `xs` is given.
    pub fn identities(tolerance: Option<f64>, xs: Option<&[f64]>) -> Result<Vec<CheckReport>> {
        let grid: Vec<f64> = xs.unwrap_or(&IDENTITY_XS).to_vec();
        let points = Probe::Points(grid.clone());
        let coeffs = Probe::Coefficients(COMPARED_COEFFS);
        let pt = tol(tolerance, POINTWISE_TOLERANCE);
        let ct = tol(tolerance, COEFFICIENT_TOLERANCE);
        let mut out = Vec::new();
        for &a in &IDENTITY_ALPHAS {
            let alpha = Alpha::new(a)?;
            for &p in &IDENTITY_ORDERS {
                out.push(identity_check_i(p, alpha, &coeffs, ct)?);
                out.push(identity_check_i(p, alpha, &points, pt)?);
                out.push(identity_check_ii(p, alpha, &coeffs, ct)?);
                out.push(identity_check_ii(p, alpha, &points, pt)?);
                out.push(identity_check_iii(p, alpha, &grid, pt)?);
                out.push(identity_check_iv(p, alpha, &grid, pt)?);
                out.push(identity_check_v(p, alpha, &grid, pt)?);
                out.push(identity_check_vi(p, alpha, COMPARED_COEFFS, ct)?);
            }
            out.push(identity_check_ii(0, alpha, &coeffs, ct)?);
            out.push(identity_check_iv(0, alpha, &grid, pt)?);
            out.push(identity_check_vi(0, alpha, COMPARED_COEFFS, ct)?);
        }
        Ok(out)
    }

    pub fn half_order(tolerance: Option<f64>) -> Result<Vec<CheckReport>> {
        IDENTITY_ALPHAS
            .iter()
            .map(|&a| half_order_check(Alpha::new(a)?, &HALF_ORDER_XS, tol(tolerance, HALF_ORDER_TOLERANCE)))
            .collect()
    }

    /// Oracle agreement for `p ∈ {0,1,2}`, `α ∈ {0.5, 1}`, `x^α ≤ 8`, and
    /// second-solution scaling for `y_2`, `K_1`, `K_2` at
    /// `α ∈ {0.3, 0.5, 0.8}`, `x ∈ [0.5, 3]`.
    pub fn scaling(tolerance: Option<f64>) -> Result<Vec<CheckReport>> {
        let mut out = Vec::new();
        for a in [0.5, 1.0] {
            let alpha = Alpha::new(a)?;
            let xmax = 8f64.powf(1.0 / a);
            let grid = linspace(0.25, xmax, 17);
            for p in 0..=2 {
                out.push(oracle_check(p, alpha, &grid, tol(tolerance, ORACLE_TOLERANCE))?);
            }
        }
        let grid = linspace(0.5, 3.0, 11);
        for &a in &SCALING_ALPHAS {
            let alpha = Alpha::new(a)?;
            for kind in [SecondKind::Y2Zero, SecondKind::K(1), SecondKind::K(2)] {
                out.push(second_solution_scaling_check(
                    kind,
                    alpha,
                    &grid,
                    tol(tolerance, SCALING_TOLERANCE),
                )?);
            }
        }
        Ok(out)
    }

    /// Numeric against exact conformable derivative over the corpus.
    pub fn operator(tolerance: Option<f64>) -> Result<Vec<CheckReport>> {
        let grid = linspace(0.5, 3.0, 6);
        let mut out = Vec::new();
        for &a in &RESIDUAL_ALPHAS {
            for entry in solution_corpus(Alpha::new(a)?)? {
                out.push(operator_check(
                    format!("operator {} alpha={a}", entry.label),
                    entry.order,
                    &entry.solution,
                    &grid,
                    tol(tolerance, OPERATOR_TOLERANCE),
                )?);
            }
        }
        Ok(out)
    }
}
