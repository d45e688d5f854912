//! Pointwise conformable derivative of black-box functions.
//!
//! For differentiable `f` the conformable derivative reduces to
//! `T_α f(x) = x^{1-α} f'(x)`, which is what is computed here with central
//! differences. It serves as an independent check on the exact series
//! operator in [`crate::fracseries`].

use crate::error::{Error, Result};
use crate::fracseries::Alpha;

/// Relative step for first derivatives.
pub const DEFAULT_STEP: f64 = 1e-6;

/// Relative step for the composed second derivative. Nesting two central
/// differences divides rounding noise by `h²`, so a larger step is used.
pub const DEFAULT_STEP_SECOND: f64 = 1e-4;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiffConfig {
    step_scale: f64,
    alpha: Alpha,
}

impl DiffConfig {
    pub fn new(alpha: Alpha, step_scale: f64) -> Result<Self> {
        if !(step_scale.is_finite() && step_scale > 0.0) {
            return Err(Error::Invalid(format!(
                "step scale must be positive, got {step_scale}"
            )));
        }
        Ok(Self { step_scale, alpha })
    }

    /// First-derivative configuration with [`DEFAULT_STEP`].
    pub fn first(alpha: Alpha) -> Self {
        Self {
            step_scale: DEFAULT_STEP,
            alpha,
        }
    }

    /// Second-derivative configuration with [`DEFAULT_STEP_SECOND`].
    pub fn second(alpha: Alpha) -> Self {
        Self {
            step_scale: DEFAULT_STEP_SECOND,
            alpha,
        }
    }

    pub fn alpha(&self) -> Alpha {
        self.alpha
    }

    pub fn step_scale(&self) -> f64 {
        self.step_scale
    }

    fn step(&self, x: f64) -> f64 {
        self.step_scale * x.max(1.0)
    }
}

fn checked<F: Fn(f64) -> f64>(f: &F, x: f64) -> Result<f64> {
    let v = f(x);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite(x))
    }
}

/// `x^{1-α}·(f(x+h) - f(x-h)) / 2h` with `h = step_scale·max(x, 1)`.
pub fn conformable_diff_numeric<F>(f: F, x: f64, cfg: &DiffConfig) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if !(x.is_finite() && x > 0.0) {
        return Err(Error::Domain(x));
    }
    let h = cfg.step(x);
    if x - h <= 0.0 {
        return Err(Error::Domain(x - h));
    }
    let forward = checked(&f, x + h)?;
    let backward = checked(&f, x - h)?;
    Ok(x.powf(1.0 - cfg.alpha.value()) * (forward - backward) / (2.0 * h))
}

/// Sequential second derivative `T_α T_α f`, computed as the numeric
/// derivative of the numeric derivative. Uses `f` at `x`, `x ± 2h` (the
/// two inner evaluations at `x` coincide).
pub fn conformable_diff2_numeric<F>(f: F, x: f64, cfg: &DiffConfig) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    if !(x.is_finite() && x > 0.0) {
        return Err(Error::Domain(x));
    }
    let h = cfg.step(x);
    if x - 2.0 * h <= 0.0 {
        return Err(Error::Domain(x - 2.0 * h));
    }
    let a = cfg.alpha.value();
    let inner = |u: f64| -> Result<f64> {
        let forward = checked(&f, u + h)?;
        let backward = checked(&f, u - h)?;
        Ok(u.powf(1.0 - a) * (forward - backward) / (2.0 * h))
    };
    let forward = inner(x + h)?;
    let backward = inner(x - h)?;
    Ok(x.powf(1.0 - a) * (forward - backward) / (2.0 * h))
}
