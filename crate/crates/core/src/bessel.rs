//! Frobenius-series solutions of the conformable Bessel equation
//!
//! ```text
//! x^{2α} T_α T_α y + α x^α T_α y + α² (x^{2α} − p²) y = 0,   x > 0.
//! ```
//!
//! With `t = x^α` the operator `T_α` acts as `α d/dt`, so every series here
//! is a classical Bessel series in `t`. Coefficients come from the
//! two-step recurrence; the gamma function is only used for the leading
//! coefficient.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fracseries::{Alpha, FracSeries, LogSolution};
use crate::special::{factorial, gamma, harmonic};

/// Tolerance for deciding that a user-supplied order is an integer.
pub const INTEGER_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "m")]
pub enum OrderKind {
    Zero,
    Generic,
    /// `2p` is a positive integer but `p` is not (half-integer orders).
    TwoPIntegerNonIntP,
    PositiveInteger(u32),
}

fn nearest_integer(v: f64) -> Option<i64> {
    let r = v.round();
    ((v - r).abs() <= INTEGER_TOLERANCE).then_some(r as i64)
}

/// A non-negative Bessel order with its case classification.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BesselOrder {
    p: f64,
    kind: OrderKind,
}

impl BesselOrder {
    /// Orders within [`INTEGER_TOLERANCE`] of an integer are snapped to it.
    pub fn new(p: f64) -> Result<Self> {
        if !p.is_finite() || p < 0.0 {
            return Err(Error::Order(format!(
                "order must be finite and non-negative, got {p}"
            )));
        }
        let (p, kind) = match nearest_integer(p) {
            Some(0) => (0.0, OrderKind::Zero),
            Some(m) => (m as f64, OrderKind::PositiveInteger(m as u32)),
            None => match nearest_integer(2.0 * p) {
                Some(k) => (k as f64 / 2.0, OrderKind::TwoPIntegerNonIntP),
                None => (p, OrderKind::Generic),
            },
        };
        Ok(Self { p, kind })
    }

    pub fn value(&self) -> f64 {
        self.p
    }

    pub fn kind(&self) -> OrderKind {
        self.kind
    }

    /// `Some(m)` for integer orders, including zero.
    pub fn as_integer(&self) -> Option<u32> {
        match self.kind {
            OrderKind::Zero => Some(0),
            OrderKind::PositiveInteger(m) => Some(m),
            _ => None,
        }
    }
}

/// Roots of the indicial polynomial `I(r) = α²(r(r−1) + r − p²)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct IndicialData {
    pub roots: (f64, f64),
    p: f64,
    alpha: Alpha,
}

impl IndicialData {
    /// Evaluates `I(r)`; this is also the denominator scale in the
    /// coefficient recurrence `c_n = −α² c_{n−2} / I(r+n)`.
    pub fn eval(&self, r: f64) -> f64 {
        let a = self.alpha.value();
        a * a * (r * (r - 1.0) + r - self.p * self.p)
    }
}

pub fn indicial(p: f64, alpha: Alpha) -> Result<IndicialData> {
    if !p.is_finite() || p < 0.0 {
        return Err(Error::Order(format!(
            "indicial roots take |p|, got {p}"
        )));
    }
    Ok(IndicialData {
        roots: (p, -p),
        p,
        alpha,
    })
}

fn check_terms(n_terms: usize) -> Result<()> {
    if n_terms == 0 {
        Err(Error::Invalid("n_terms must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// Even coefficients from `c_n = −c_{n−2} / (n (n + 2r))`, odd ones zero.
fn frobenius_coeffs(c0: f64, r: f64, n_terms: usize) -> Vec<f64> {
    let mut coeffs = vec![0.0; n_terms];
    coeffs[0] = c0;
    for n in (2..n_terms).step_by(2) {
        let nf = n as f64;
        coeffs[n] = -coeffs[n - 2] / (nf * (nf + 2.0 * r));
    }
    coeffs
}

/// First-kind function `(J_α)_p`, offset `p`, normalised so that
/// `c_0 = 1 / (2^p Γ(p+1))`.
pub fn build_j(p: f64, alpha: Alpha, n_terms: usize) -> Result<FracSeries> {
    check_terms(n_terms)?;
    let order = BesselOrder::new(p)?;
    let p = order.value();
    let c0 = 1.0 / (2f64.powf(p) * gamma(p + 1.0)?);
    FracSeries::new(alpha, p, frobenius_coeffs(c0, p, n_terms))
}

/// `(J_α)_{−p}` for `p > 0` not an integer, offset `−p`.
///
/// Integer orders have no independent series of this shape; use
/// [`reduce_negative_integer_order`].
pub fn build_j_neg(p: f64, alpha: Alpha, n_terms: usize) -> Result<FracSeries> {
    check_terms(n_terms)?;
    let order = BesselOrder::new(p)?;
    match order.kind() {
        OrderKind::Zero => Err(Error::Order("build_j_neg needs p > 0".into())),
        OrderKind::PositiveInteger(m) => Err(Error::Order(format!(
            "order {m} is a positive integer; (J)_-{m} = (-1)^{m} (J)_{m}, \
             use reduce_negative_integer_order"
        ))),
        OrderKind::Generic | OrderKind::TwoPIntegerNonIntP => {
            let p = order.value();
            let c0 = 2f64.powf(p) / gamma(1.0 - p)?;
            FracSeries::new(alpha, -p, frobenius_coeffs(c0, -p, n_terms))
        }
    }
}

/// `(J_α)_{−m} = (−1)^m (J_α)_m` for integer `m ≥ 0`.
pub fn reduce_negative_integer_order(m: u32, alpha: Alpha, n_terms: usize) -> Result<FracSeries> {
    let sign = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
    Ok(build_j(m as f64, alpha, n_terms)?.scale(sign))
}

/// Order-zero logarithmic solution
/// `y_2 = (J_α)_0 ln x + (1/α) Σ_{n≥1} (−1)^{n+1} H_n / (2^{2n} n!²) x^{2nα}`.
pub fn build_y2_zero(alpha: Alpha, n_terms: usize) -> Result<LogSolution> {
    check_terms(n_terms)?;
    let log_part = build_j(0.0, alpha, n_terms)?;
    let inv_alpha = 1.0 / alpha.value();
    let mut plain = vec![0.0; n_terms];
    // d_n = (−1)^{n+1} / (4^n n!²)
    let mut d = -1.0;
    for n in 1..n_terms.div_ceil(2) {
        let nf = n as f64;
        d = -d / (4.0 * nf * nf);
        plain[2 * n] = inv_alpha * d * harmonic(n as u32);
    }
    LogSolution::new(log_part, FracSeries::new(alpha, 0.0, plain)?)
}

/// The free constant `b_0` and log coefficient `C` of the integer-order
/// second solution, tied by `C = −α b_0 / (2^{m−1} (m−1)!)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SecondSolutionParams {
    pub m: u32,
    pub b0: f64,
    pub c: f64,
}

impl SecondSolutionParams {
    pub fn from_b0(m: u32, alpha: Alpha, b0: f64) -> Result<Self> {
        if m == 0 {
            return Err(Error::Order("second-solution parameters need m >= 1".into()));
        }
        let c = -alpha.value() * b0 / (2f64.powi(m as i32 - 1) * factorial(m - 1));
        Ok(Self { m, b0, c })
    }

    /// The normalisation `C = 1` used for `(K_α)_m`.
    pub fn unit_log(m: u32, alpha: Alpha) -> Result<Self> {
        if m == 0 {
            return Err(Error::Order("second-solution parameters need m >= 1".into()));
        }
        let b0 = -2f64.powi(m as i32 - 1) * factorial(m - 1) / alpha.value();
        Ok(Self { m, b0, c: 1.0 })
    }
}

/// Ratios `b_{2j} / b_0 = 1 / (2^{2j} j! (m−1)(m−2)…(m−j))` for
/// `j = 0..m−1`. Odd-index `b` vanish and are not listed.
pub fn intermediate_b_chain(m: u32) -> Vec<f64> {
    let mut chain = Vec::with_capacity(m.max(1) as usize);
    let mut ratio = 1.0;
    chain.push(ratio);
    for j in 1..m {
        ratio /= 4.0 * j as f64 * (m - j) as f64;
        chain.push(ratio);
    }
    chain
}

/// How the `x^{mα}` coefficient of `(K_α)_m` is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum KReading {
    /// `b_{2m} = −(C/2α) c_0 H_m` with `c_0 = 1/(2^m m!)`.
    #[default]
    Derived,
    /// The closed display with an additional `1/m!` on that term. Kept only
    /// to show that it does not solve the equation.
    ExtraFactorial,
}

/// Integer-order second solution `(K_α)_m` with `C = 1`:
///
/// ```text
/// (K_α)_m = ln x (J_α)_m
///         − (1/2α) Σ_{j<m} ((m−j−1)!/j!) (x^α/2)^{2j−m}
///         − (1/2α) Σ_{n≥0} c_{2n} (H_n + H_{m+n}) x^{(2n+m)α}
/// ```
///
/// where `c_{2n}` are the coefficients of `(J_α)_m`.
pub fn build_k(m: u32, alpha: Alpha, n_terms: usize) -> Result<LogSolution> {
    build_k_with(m, alpha, n_terms, KReading::Derived)
}

pub fn build_k_with(m: u32, alpha: Alpha, n_terms: usize, reading: KReading) -> Result<LogSolution> {
    if m < 1 {
        return Err(Error::Order("(K)_m needs an integer order m >= 1".into()));
    }
    check_terms(n_terms)?;
    let j_m = build_j(m as f64, alpha, n_terms)?;
    let params = SecondSolutionParams::unit_log(m, alpha)?;
    let half_c_over_alpha = params.c / (2.0 * alpha.value());

    // Plain part has offset −m: slot k carries x^{(k−m)α}.
    let shift = 2 * m as usize;
    let mut plain = vec![0.0; shift + n_terms];
    for (j, ratio) in intermediate_b_chain(m).into_iter().enumerate() {
        plain[2 * j] = params.b0 * ratio;
    }
    for (k, &c) in j_m.coeffs().iter().enumerate() {
        if k % 2 == 1 {
            continue;
        }
        let n = (k / 2) as u32;
        let mut h = harmonic(n) + harmonic(m + n);
        if n == 0 && reading == KReading::ExtraFactorial {
            h /= factorial(m);
        }
        plain[shift + k] = -half_c_over_alpha * c * h;
    }
    LogSolution::new(j_m.scale(params.c), FracSeries::new(alpha, -(m as f64), plain)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(v: f64) -> Alpha {
        Alpha::new(v).unwrap()
    }

    #[test]
    fn classification() {
        assert_eq!(BesselOrder::new(0.0).unwrap().kind(), OrderKind::Zero);
        assert_eq!(BesselOrder::new(1e-12).unwrap().kind(), OrderKind::Zero);
        assert_eq!(
            BesselOrder::new(3.0).unwrap().kind(),
            OrderKind::PositiveInteger(3)
        );
        assert_eq!(
            BesselOrder::new(2.0 + 5e-10).unwrap().kind(),
            OrderKind::PositiveInteger(2)
        );
        assert_eq!(
            BesselOrder::new(0.5).unwrap().kind(),
            OrderKind::TwoPIntegerNonIntP
        );
        assert_eq!(
            BesselOrder::new(2.5).unwrap().kind(),
            OrderKind::TwoPIntegerNonIntP
        );
        assert_eq!(BesselOrder::new(1.0 / 3.0).unwrap().kind(), OrderKind::Generic);
        assert_eq!(BesselOrder::new(2.0 + 1e-6).unwrap().kind(), OrderKind::Generic);
        assert!(BesselOrder::new(-1.0).is_err());
        assert!(BesselOrder::new(f64::NAN).is_err());
    }

    #[test]
    fn indicial_roots() {
        for (p, roots) in [(0.0, (0.0, 0.0)), (0.5, (0.5, -0.5)), (2.0, (2.0, -2.0))] {
            let d = indicial(p, a(0.7)).unwrap();
            assert_eq!(d.roots, roots);
            assert_eq!(d.eval(d.roots.0), 0.0);
            assert_eq!(d.eval(d.roots.1), 0.0);
        }
        assert!(indicial(-1.0, a(1.0)).is_err());
    }

    #[test]
    fn j0_leading_coefficients() {
        let j = build_j(0.0, a(0.5), 60).unwrap();
        assert_eq!(j.offset(), 0.0);
        assert_eq!(&j.coeffs()[..5], &[1.0, 0.0, -0.25, 0.0, 1.0 / 64.0]);
    }

    #[test]
    fn even_coefficient_ratio() {
        for p in [0.0, 0.5, 1.0, 1.7, 3.0] {
            let j = build_j(p, a(1.0), 40).unwrap();
            for n in 0..19 {
                let ratio = j.coeff(2 * n + 2) / j.coeff(2 * n);
                let nf = n as f64;
                let want = -1.0 / (4.0 * (nf + 1.0) * (nf + 1.0 + p));
                assert!(((ratio - want) / want).abs() < 1e-15, "p={p} n={n}");
            }
        }
    }

    #[test]
    fn j_neg_third_order() {
        let p = 1.0 / 3.0;
        let j = build_j_neg(p, a(1.0), 10).unwrap();
        let c0 = 2f64.powf(p) / gamma(2.0 / 3.0).unwrap();
        assert!((j.coeff(0) - c0).abs() < 1e-15);
        assert!((j.coeff(2) - (-c0 / (8.0 / 3.0))).abs() < 1e-15);
        assert_eq!(j.offset(), -p);
    }

    #[test]
    fn j_neg_rejects_integers() {
        assert!(matches!(build_j_neg(1.0, a(1.0), 10), Err(Error::Order(_))));
        assert!(matches!(build_j_neg(0.0, a(1.0), 10), Err(Error::Order(_))));
        assert!(build_j_neg(1.5, a(1.0), 10).is_ok());
    }

    #[test]
    fn negative_integer_reduction_signs() {
        let alpha = a(0.6);
        let j1 = build_j(1.0, alpha, 20).unwrap();
        assert_eq!(reduce_negative_integer_order(1, alpha, 20).unwrap(), j1.scale(-1.0));
        let j2 = build_j(2.0, alpha, 20).unwrap();
        assert_eq!(reduce_negative_integer_order(2, alpha, 20).unwrap(), j2);
        let j0 = build_j(0.0, alpha, 20).unwrap();
        assert_eq!(reduce_negative_integer_order(0, alpha, 20).unwrap(), j0);
    }

    #[test]
    fn y2_zero_coefficients() {
        for alpha in [0.5, 1.0] {
            let y = build_y2_zero(a(alpha), 60).unwrap();
            let plain = y.plain_part();
            assert_eq!(plain.coeff(0), 0.0);
            assert!((plain.coeff(2) - 1.0 / (4.0 * alpha)).abs() < 1e-16);
            assert!((plain.coeff(4) + 3.0 / (128.0 * alpha)).abs() < 1e-16);
            // b_5 in the derivation: (1/α) H_3 / (2² 4² 6²)
            let b5 = harmonic(3) / (alpha * 4.0 * 16.0 * 36.0);
            assert!((plain.coeff(6) - b5).abs() < 1e-17);
            assert!(plain.coeffs().iter().skip(1).step_by(2).all(|&c| c == 0.0));
            assert_eq!(y.log_part(), &build_j(0.0, a(alpha), 60).unwrap());
        }
    }

    #[test]
    fn b_chain_values() {
        assert_eq!(intermediate_b_chain(1), vec![1.0]);
        assert_eq!(intermediate_b_chain(2), vec![1.0, 0.25]);
        let c3 = intermediate_b_chain(3);
        assert_eq!(c3.len(), 3);
        assert_eq!(c3[2], 1.0 / 64.0);
    }

    #[test]
    fn second_solution_params() {
        let alpha = a(0.5);
        for m in 1..6 {
            let p = SecondSolutionParams::unit_log(m, alpha).unwrap();
            let q = SecondSolutionParams::from_b0(m, alpha, p.b0).unwrap();
            assert!((q.c - 1.0).abs() < 1e-15);
        }
        // m = 1: α b_0 = −C
        let p = SecondSolutionParams::unit_log(1, alpha).unwrap();
        assert_eq!(alpha.value() * p.b0, -1.0);
        assert!(SecondSolutionParams::from_b0(0, alpha, 1.0).is_err());
    }

    #[test]
    fn k_negative_block_matches_display() {
        // −(1/2α) (m−j−1)!/j! (x^α/2)^{2j−m}
        for alpha in [0.4, 1.0] {
            for m in 1..5u32 {
                let k = build_k(m, a(alpha), 20).unwrap();
                for j in 0..m {
                    let want = -(1.0 / (2.0 * alpha)) * factorial(m - j - 1) / factorial(j)
                        * 2f64.powi(m as i32 - 2 * j as i32);
                    let got = k.plain_part().coeff(2 * j as usize);
                    assert!(((got - want) / want).abs() < 1e-15, "m={m} j={j}");
                }
            }
        }
    }

    #[test]
    fn k_one_leading_term() {
        // j = 0 term for m = 1 is −1/(α x^α)
        let alpha = 0.5;
        let k = build_k(1, a(alpha), 20).unwrap();
        assert_eq!(k.plain_part().offset(), -1.0);
        assert_eq!(k.plain_part().coeff(0), -1.0 / alpha);
    }

    #[test]
    fn k_middle_term() {
        let alpha = 0.8;
        for m in 1..4u32 {
            let k = build_k(m, a(alpha), 20).unwrap();
            let c0 = 1.0 / (2f64.powi(m as i32) * factorial(m));
            let want = -c0 * harmonic(m) / (2.0 * alpha);
            let got = k.plain_part().coeff(2 * m as usize);
            assert!(((got - want) / want).abs() < 1e-15);

            let alt = build_k_with(m, a(alpha), 20, KReading::ExtraFactorial).unwrap();
            let alt_got = alt.plain_part().coeff(2 * m as usize);
            assert!(((alt_got - want / factorial(m)) / want).abs() < 1e-15);
        }
    }

    #[test]
    fn k_rejects_zero_order() {
        assert!(matches!(build_k(0, a(1.0), 10), Err(Error::Order(_))));
    }

    #[test]
    fn zero_terms_rejected() {
        assert!(build_j(0.0, a(1.0), 0).is_err());
        assert!(build_y2_zero(a(1.0), 0).is_err());
    }
}
