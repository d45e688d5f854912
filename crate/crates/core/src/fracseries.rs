//! Truncated fractional power series `Σ c_n x^{(n+r)α}` and their logarithmic
//! companions `L(x)·ln x + P(x)`.
//!
//! Coefficients are stored densely: index `n` carries the exponent `(n+r)·α`
//! even when the series only populates every other slot.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::sum::CompensatedSum;

/// Offsets closer than this are treated as equal.
pub const OFFSET_TOLERANCE: f64 = 1e-12;

/// Relative size below which a term ends evaluation early.
pub const EARLY_STOP_RATIO: f64 = 1e-18;

/// Default number of stored coefficients for constructed solutions.
pub const DEFAULT_TERMS: usize = 60;

/// Fractional order of the conformable derivative, `0 < α ≤ 1`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
pub struct Alpha(f64);

impl Alpha {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && value > 0.0 && value <= 1.0 {
            Ok(Self(value))
        } else {
            Err(Error::InvalidAlpha(value))
        }
    }

    /// The classical case `α = 1`.
    pub fn one() -> Self {
        Self(1.0)
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

impl TryFrom<f64> for Alpha {
    type Error = Error;

    fn try_from(value: f64) -> Result<Self> {
        Self::new(value)
    }
}

/// Value of a series at a point together with truncation bookkeeping.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvalResult {
    pub value: f64,
    /// Number of coefficients consumed (zeros included).
    pub terms_used: usize,
    /// Magnitude of the last nonzero term that was summed. For alternating
    /// series with eventually decreasing terms this bounds the truncation
    /// error.
    pub tail_estimate: f64,
}

fn offsets_equal(a: f64, b: f64) -> bool {
    (a - b).abs() <= OFFSET_TOLERANCE
}

/// Returns `Some(k)` when `value` is within tolerance of the integer `k`.
fn as_integer(value: f64) -> Option<i64> {
    let rounded = value.round();
    ((value - rounded).abs() <= OFFSET_TOLERANCE).then_some(rounded as i64)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FracSeries {
    alpha: Alpha,
    offset: f64,
    coeffs: Vec<f64>,
}

impl FracSeries {
    pub fn new(alpha: Alpha, offset: f64, coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Invalid("a series needs at least one coefficient".into()));
        }
        if !offset.is_finite() {
            return Err(Error::Invalid(format!("offset must be finite, got {offset}")));
        }
        if let Some(bad) = coeffs.iter().position(|c| !c.is_finite()) {
            return Err(Error::Invalid(format!(
                "coefficient {bad} is not finite ({})",
                coeffs[bad]
            )));
        }
        Ok(Self {
            alpha,
            offset,
            coeffs,
        })
    }

    /// Series with `len` zero coefficients.
    pub fn zero(alpha: Alpha, offset: f64, len: usize) -> Self {
        Self {
            alpha,
            offset,
            coeffs: vec![0.0; len.max(1)],
        }
    }

    /// The single term `x^{kα}`.
    pub fn monomial(alpha: Alpha, k: f64) -> Self {
        Self {
            alpha,
            offset: k,
            coeffs: vec![1.0],
        }
    }

    pub fn alpha(&self) -> Alpha {
        self.alpha
    }

    pub fn offset(&self) -> f64 {
        self.offset
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    /// Always false; a series holds at least one coefficient.
    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient `n`, zero past the stored length.
    pub fn coeff(&self, n: usize) -> f64 {
        self.coeffs.get(n).copied().unwrap_or(0.0)
    }

    fn check_aligned(&self, other: &Self) -> Result<()> {
        if self.alpha == other.alpha && offsets_equal(self.offset, other.offset) {
            Ok(())
        } else {
            Err(Error::Alignment {
                alpha_a: self.alpha.value(),
                alpha_b: other.alpha.value(),
                offset_a: self.offset,
                offset_b: other.offset,
            })
        }
    }

    /// Coefficient-wise sum; the shorter series is padded with zeros.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_aligned(other)?;
        let len = self.len().max(other.len());
        let coeffs = (0..len).map(|n| self.coeff(n) + other.coeff(n)).collect();
        Ok(Self {
            alpha: self.alpha,
            offset: self.offset,
            coeffs,
        })
    }

    pub fn scale(&self, k: f64) -> Self {
        Self {
            alpha: self.alpha,
            offset: self.offset,
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Multiplies by `x^{dr·α}`.
    ///
    /// A positive integer `dr` is absorbed by prepending `dr` zero
    /// coefficients so the offset stays put; any other `dr` moves the offset.
    pub fn shift(&self, dr: f64) -> Self {
        match as_integer(dr) {
            Some(0) => self.clone(),
            Some(k) if k > 0 => {
                let mut coeffs = vec![0.0; k as usize];
                coeffs.extend_from_slice(&self.coeffs);
                Self {
                    alpha: self.alpha,
                    offset: self.offset,
                    coeffs,
                }
            }
            _ => Self {
                alpha: self.alpha,
                offset: self.offset + dr,
                coeffs: self.coeffs.clone(),
            },
        }
    }

    /// Re-expresses the series at a lower offset by prepending zeros.
    ///
    /// Fails unless `self.offset - offset` is a non-negative integer.
    pub fn rebase(&self, offset: f64) -> Result<Self> {
        match as_integer(self.offset - offset) {
            Some(k) if k >= 0 => {
                let mut coeffs = vec![0.0; k as usize];
                coeffs.extend_from_slice(&self.coeffs);
                Ok(Self {
                    alpha: self.alpha,
                    offset,
                    coeffs,
                })
            }
            _ => Err(Error::Alignment {
                alpha_a: self.alpha.value(),
                alpha_b: self.alpha.value(),
                offset_a: self.offset,
                offset_b: offset,
            }),
        }
    }

    /// Brings two series to the smaller of their offsets so they can be
    /// combined.
    pub fn align(a: &Self, b: &Self) -> Result<(Self, Self)> {
        if a.alpha != b.alpha {
            return Err(Error::Alignment {
                alpha_a: a.alpha.value(),
                alpha_b: b.alpha.value(),
                offset_a: a.offset,
                offset_b: b.offset,
            });
        }
        let offset = a.offset.min(b.offset);
        Ok((a.rebase(offset)?, b.rebase(offset)?))
    }

    /// Drops trailing zero coefficients, keeping at least one.
    pub fn trim(&self) -> Self {
        let keep = self
            .coeffs
            .iter()
            .rposition(|&c| c != 0.0)
            .map_or(1, |i| i + 1);
        Self {
            alpha: self.alpha,
            offset: self.offset,
            coeffs: self.coeffs[..keep].to_vec(),
        }
    }

    /// Exact conformable derivative, term by term:
    /// `c_n x^{(n+r)α} ↦ α(n+r) c_n x^{(n+r-1)α}`.
    pub fn conformable_diff(&self) -> Self {
        let a = self.alpha.value();
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, &c)| a * (n as f64 + self.offset) * c)
            .collect();
        Self {
            alpha: self.alpha,
            offset: self.offset - 1.0,
            coeffs,
        }
    }

    /// Evaluates with the adaptive early stop over all stored coefficients.
    pub fn eval(&self, x: f64) -> Result<EvalResult> {
        self.eval_truncated(x, self.len())
    }

    /// Evaluates using at most the first `max_terms` coefficients.
    pub fn eval_truncated(&self, x: f64, max_terms: usize) -> Result<EvalResult> {
        if !(x.is_finite() && x > 0.0) {
            return Err(Error::Domain(x));
        }
        let t = x.powf(self.alpha.value());
        let mut sum = CompensatedSum::new();
        let mut terms_used = 0;
        let mut last_nonzero = 0.0_f64;
        for (n, &c) in self.coeffs.iter().take(max_terms).enumerate() {
            terms_used = n + 1;
            if c == 0.0 {
                continue;
            }
            let term = c * t.powf(n as f64 + self.offset);
            sum.add(term);
            let decreasing = last_nonzero == 0.0 || term.abs() <= last_nonzero;
            last_nonzero = term.abs();
            if decreasing && term.abs() < EARLY_STOP_RATIO * sum.total().abs() {
                break;
            }
        }
        Ok(EvalResult {
            value: sum.total(),
            terms_used,
            tail_estimate: last_nonzero,
        })
    }
}

/// `log_part(x)·ln x + plain_part(x)` for `x > 0`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LogSolution {
    log_part: FracSeries,
    plain_part: FracSeries,
}

impl LogSolution {
    pub fn new(log_part: FracSeries, plain_part: FracSeries) -> Result<Self> {
        if log_part.alpha != plain_part.alpha {
            return Err(Error::Alignment {
                alpha_a: log_part.alpha.value(),
                alpha_b: plain_part.alpha.value(),
                offset_a: log_part.offset,
                offset_b: plain_part.offset,
            });
        }
        Ok(Self {
            log_part,
            plain_part,
        })
    }

    pub fn alpha(&self) -> Alpha {
        self.log_part.alpha
    }

    pub fn log_part(&self) -> &FracSeries {
        &self.log_part
    }

    pub fn plain_part(&self) -> &FracSeries {
        &self.plain_part
    }

    pub fn scale(&self, k: f64) -> Self {
        Self {
            log_part: self.log_part.scale(k),
            plain_part: self.plain_part.scale(k),
        }
    }

    /// Exact conformable derivative using `T_α(ln x) = x^{-α}`:
    /// `T(L ln x + P) = T(L) ln x + (x^{-α} L + T(P))`.
    ///
    /// Fails when the two plain contributions cannot be brought to a common
    /// offset by an integer reindex.
    pub fn conformable_diff(&self) -> Result<Self> {
        let log_part = self.log_part.conformable_diff();
        let from_log = self.log_part.shift(-1.0);
        let from_plain = self.plain_part.conformable_diff();
        let (a, b) = FracSeries::align(&from_log, &from_plain)?;
        Ok(Self {
            log_part,
            plain_part: a.add(&b)?,
        })
    }

    pub fn eval(&self, x: f64) -> Result<EvalResult> {
        let log = self.log_part.eval(x)?;
        let plain = self.plain_part.eval(x)?;
        let ln = x.ln();
        Ok(EvalResult {
            value: log.value * ln + plain.value,
            terms_used: log.terms_used.max(plain.terms_used),
            tail_estimate: log.tail_estimate * ln.abs() + plain.tail_estimate,
        })
    }
}

/// Either kind of constructed solution.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "form", rename_all = "snake_case")]
pub enum Solution {
    Series(FracSeries),
    Log(LogSolution),
}

impl Solution {
    pub fn alpha(&self) -> Alpha {
        match self {
            Solution::Series(s) => s.alpha(),
            Solution::Log(s) => s.alpha(),
        }
    }

    pub fn eval(&self, x: f64) -> Result<EvalResult> {
        match self {
            Solution::Series(s) => s.eval(x),
            Solution::Log(s) => s.eval(x),
        }
    }

    pub fn conformable_diff(&self) -> Result<Self> {
        Ok(match self {
            Solution::Series(s) => Solution::Series(s.conformable_diff()),
            Solution::Log(s) => Solution::Log(s.conformable_diff()?),
        })
    }

    pub fn scale(&self, k: f64) -> Self {
        match self {
            Solution::Series(s) => Solution::Series(s.scale(k)),
            Solution::Log(s) => Solution::Log(s.scale(k)),
        }
    }
}

impl From<FracSeries> for Solution {
    fn from(s: FracSeries) -> Self {
        Solution::Series(s)
    }
}

impl From<LogSolution> for Solution {
    fn from(s: LogSolution) -> Self {
        Solution::Log(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(alpha: f64, offset: f64, coeffs: &[f64]) -> FracSeries {
        FracSeries::new(Alpha::new(alpha).unwrap(), offset, coeffs.to_vec()).unwrap()
    }

    #[test]
    fn alpha_bounds() {
        assert!(Alpha::new(1.0).is_ok());
        assert!(Alpha::new(1e-3).is_ok());
        for bad in [0.0, -0.5, 1.0000001, f64::NAN, f64::INFINITY] {
            assert!(matches!(Alpha::new(bad), Err(Error::InvalidAlpha(_))));
        }
    }

    #[test]
    fn rejects_empty_and_non_finite() {
        let a = Alpha::one();
        assert!(FracSeries::new(a, 0.0, vec![]).is_err());
        assert!(FracSeries::new(a, 0.0, vec![1.0, f64::NAN]).is_err());
        assert!(FracSeries::new(a, f64::INFINITY, vec![1.0]).is_err());
    }

    #[test]
    fn add_pads_with_zeros() {
        let s = series(1.0, 0.0, &[1.0, 2.0]).add(&series(1.0, 0.0, &[3.0])).unwrap();
        assert_eq!(s.coeffs(), &[4.0, 2.0]);
        assert_eq!(s.offset(), 0.0);

        let a = series(0.5, 0.0, &[1.0, -2.0, 0.5]);
        let zero = FracSeries::zero(a.alpha(), 0.0, 1);
        assert_eq!(a.add(&zero).unwrap(), a);
    }

    #[test]
    fn add_rejects_misaligned() {
        let a = series(0.5, 1.0, &[1.0]);
        let b = series(0.5, 0.0, &[1.0]);
        assert!(matches!(a.add(&b), Err(Error::Alignment { .. })));
        let c = series(0.25, 1.0, &[1.0]);
        assert!(a.add(&c).is_err());
        // within the offset tolerance
        let d = series(0.5, 1.0 + 1e-14, &[2.0]);
        assert_eq!(a.add(&d).unwrap().coeffs(), &[3.0]);
    }

    #[test]
    fn scale_cases() {
        let a = series(1.0, 0.0, &[1.0, -0.25]);
        assert_eq!(a.scale(0.0).coeffs(), &[0.0, 0.0]);
        assert_eq!(a.scale(1.0), a);
        assert_eq!(a.scale(2.0).coeffs(), &[2.0, -0.5]);
    }

    #[test]
    fn shift_cases() {
        let a = series(1.0, 0.0, &[1.0, 2.0]);
        let s = a.shift(2.0);
        assert_eq!(s.coeffs(), &[0.0, 0.0, 1.0, 2.0]);
        assert_eq!(s.offset(), 0.0);
        assert_eq!(a.shift(0.0), a);

        let m = series(0.5, 0.0, &[1.0]).shift(-0.5);
        assert_eq!(m.offset(), -0.5);
        assert_eq!(m.coeffs(), &[1.0]);

        let neg = a.shift(-3.0);
        assert_eq!(neg.offset(), -3.0);
        assert_eq!(neg.coeffs(), a.coeffs());
    }

    #[test]
    fn rebase_and_align() {
        let a = series(1.0, 2.0, &[1.0]);
        let r = a.rebase(-1.0).unwrap();
        assert_eq!(r.offset(), -1.0);
        assert_eq!(r.coeffs(), &[0.0, 0.0, 0.0, 1.0]);
        assert!(a.rebase(2.5).is_err());
        assert!(a.rebase(1.5).is_err());

        let b = series(1.0, 0.0, &[5.0]);
        let (x, y) = FracSeries::align(&a, &b).unwrap();
        assert_eq!(x.offset(), 0.0);
        assert_eq!(x.coeffs(), &[0.0, 0.0, 1.0]);
        assert_eq!(y, b);
    }

    #[test]
    fn trim_keeps_offset() {
        let a = series(1.0, 0.5, &[1.0, 0.0, 3.0, 0.0, 0.0]);
        let t = a.trim();
        assert_eq!(t.coeffs(), &[1.0, 0.0, 3.0]);
        assert_eq!(t.offset(), 0.5);
        assert_eq!(series(1.0, 0.0, &[0.0, 0.0]).trim().coeffs(), &[0.0]);
    }

    #[test]
    fn diff_of_constant_vanishes() {
        let d = series(0.3, 0.0, &[7.5]).conformable_diff();
        assert_eq!(d.offset(), -1.0);
        assert_eq!(d.coeffs(), &[0.0]);
    }

    #[test]
    fn diff_of_x_alpha_is_alpha() {
        let alpha = 0.6;
        let d = series(alpha, 1.0, &[1.0]).conformable_diff();
        assert_eq!(d.offset(), 0.0);
        assert_eq!(d.coeffs(), &[alpha]);
    }

    #[test]
    fn second_diff_coefficients() {
        let alpha = 0.7;
        let r = 0.4;
        let c = [1.0, -2.0, 0.5, 3.0];
        let dd = series(alpha, r, &c).conformable_diff().conformable_diff();
        assert!((dd.offset() - (r - 2.0)).abs() < 1e-15);
        for (n, &cn) in c.iter().enumerate() {
            let nr = n as f64 + r;
            let want = alpha * alpha * nr * (nr - 1.0) * cn;
            assert!((dd.coeff(n) - want).abs() <= 1e-15 * want.abs().max(1.0));
        }
    }

    #[test]
    fn power_rule_by_coefficients() {
        let alpha = Alpha::new(0.45).unwrap();
        for k in [0.0, 1.0, 2.0, 5.0] {
            let d = FracSeries::monomial(alpha, k).conformable_diff();
            assert_eq!(d.offset(), k - 1.0);
            assert_eq!(d.coeffs(), &[k * alpha.value()]);
        }
    }

    #[test]
    fn eval_domain() {
        let a = series(1.0, 0.0, &[1.0]);
        for x in [0.0, -1.0, f64::NAN] {
            assert!(matches!(a.eval(x), Err(Error::Domain(_))));
        }
    }

    #[test]
    fn eval_near_origin() {
        let j0 = series(1.0, 0.0, &[1.0, 0.0, -0.25]);
        let r = j0.eval(1e-9).unwrap();
        assert!((r.value - 1.0).abs() < 1e-15);
    }

    #[test]
    fn eval_skips_zero_terms_without_stopping() {
        // x^0 + 0·x + x^2 at x=1 must see the last coefficient.
        let s = series(1.0, 0.0, &[1.0, 0.0, 1.0]);
        let r = s.eval(1.0).unwrap();
        assert_eq!(r.value, 2.0);
        assert_eq!(r.terms_used, 3);
        assert_eq!(r.tail_estimate, 1.0);
    }

    #[test]
    fn eval_truncated_limits_terms() {
        let s = series(1.0, 0.0, &[1.0, 1.0, 1.0, 1.0]);
        let r = s.eval_truncated(2.0, 2).unwrap();
        assert_eq!(r.value, 3.0);
        assert_eq!(r.terms_used, 2);
    }

    #[test]
    fn log_solution_at_one_is_plain_part() {
        let a = Alpha::new(0.5).unwrap();
        let l = FracSeries::new(a, 0.0, vec![3.0, 1.0]).unwrap();
        let p = FracSeries::new(a, 0.0, vec![0.25, -1.0]).unwrap();
        let s = LogSolution::new(l, p.clone()).unwrap();
        assert_eq!(s.eval(1.0).unwrap().value, p.eval(1.0).unwrap().value);
    }

    #[test]
    fn log_solution_with_zero_log_part() {
        let a = Alpha::new(0.8).unwrap();
        let p = FracSeries::new(a, 0.0, vec![1.0, 2.0, -0.5]).unwrap();
        let s = LogSolution::new(FracSeries::zero(a, 0.0, 1), p.clone()).unwrap();
        for x in [0.3, 2.0, 7.0] {
            assert_eq!(s.eval(x).unwrap().value, p.eval(x).unwrap().value);
        }
        assert!(s.eval(0.0).is_err());
    }

    #[test]
    fn log_solution_rejects_mixed_alpha() {
        let l = series(0.5, 0.0, &[1.0]);
        let p = series(0.6, 0.0, &[1.0]);
        assert!(LogSolution::new(l, p).is_err());
    }

    #[test]
    fn log_diff_of_ln() {
        // y = ln x; T y = x^{-α}
        let a = Alpha::new(0.4).unwrap();
        let y = LogSolution::new(
            FracSeries::monomial(a, 0.0),
            FracSeries::zero(a, 0.0, 1),
        )
        .unwrap();
        let d = y.conformable_diff().unwrap();
        for x in [0.5f64, 1.0, 3.0] {
            let want = x.powf(-0.4);
            let got = d.eval(x).unwrap().value;
            assert!((got - want).abs() < 1e-14, "{got} vs {want}");
        }
    }
}
