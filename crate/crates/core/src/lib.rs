//! Solutions of the conformable fractional Bessel equation
//!
//! ```text
//! x^{2α} T_α T_α y + α x^α T_α y + α² (x^{2α} − p²) y = 0,   0 < α ≤ 1,
//! ```
//!
//! as truncated fractional power series in `x^α`: first-kind functions of
//! order `±p`, the order-zero logarithmic solution and the integer-order
//! second solution `(K_α)_m`, plus the checks that tie them to the classical
//! `α = 1` theory.
//!
//! ```
//! use confbessel_core::{bessel, Alpha};
//!
//! let alpha = Alpha::new(0.5).unwrap();
//! let j = bessel::build_j(0.5, alpha, 60).unwrap();
//! // x^α = 2 at x = 4
//! let closed = (1.0 / std::f64::consts::PI).sqrt() * 2f64.sin();
//! assert!((j.eval(4.0).unwrap().value - closed).abs() < 1e-12);
//! ```

pub mod bessel;
pub mod conformable;
pub mod error;
pub mod fracseries;
pub mod special;
pub mod sum;
pub mod verify;

pub use error::{Error, Result};
pub use fracseries::{Alpha, EvalResult, FracSeries, LogSolution, Solution};
