//! Gamma function and harmonic numbers.

use std::f64::consts::PI;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)]
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Largest integer argument for which `Γ(n) = (n-1)!` is finite in `f64`.
const MAX_FACTORIAL_ARG: f64 = 171.0;

fn is_nonpositive_integer(z: f64) -> bool {
    z <= 0.0 && z == z.floor()
}

/// `sin(πz)` with the argument reduced first so large |z| keeps full accuracy.
fn sin_pi(z: f64) -> f64 {
    let n = z.round();
    let r = z - n;
    let s = (PI * r).sin();
    if (n as i64) % 2 == 0 {
        s
    } else {
        -s
    }
}

fn lanczos(z: f64) -> f64 {
    // Γ(z) for z ≥ 0.5
    let z = z - 1.0;
    let mut acc = LANCZOS_COEFFS[0];
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    // split the power to avoid overflow before the exp factor is applied
    let half = t.powf((z + 0.5) / 2.0);
    (2.0 * PI).sqrt() * half * (half * (-t).exp()) * acc
}

/// `n!` as a float, built by repeated multiplication.
pub fn factorial(n: u32) -> f64 {
    (2..=n).fold(1.0, |acc, k| acc * k as f64)
}

/// The gamma function.
///
/// Positive integer arguments are returned as exact factorial products;
/// everything else goes through the Lanczos approximation, with the
/// reflection formula below one half.
pub fn gamma(z: f64) -> Result<f64> {
    if z.is_nan() || is_nonpositive_integer(z) {
        return Err(Error::Pole(z));
    }
    if z == z.floor() && z <= MAX_FACTORIAL_ARG {
        return Ok(factorial(z as u32 - 1));
    }
    if z < 0.5 {
        Ok(PI / (sin_pi(z) * lanczos(1.0 - z)))
    } else {
        Ok(lanczos(z))
    }
}

/// `1/Γ(z)`, which is entire: zero at the poles of `Γ`.
pub fn reciprocal_gamma(z: f64) -> f64 {
    match gamma(z) {
        Ok(g) => 1.0 / g,
        Err(_) => 0.0,
    }
}

/// `H_n = 1 + 1/2 + … + 1/n`, with `H_0 = 0`.
pub fn harmonic(n: u32) -> f64 {
    (1..=n).map(|k| 1.0 / k as f64).sum()
}
