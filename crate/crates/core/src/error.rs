use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("alpha must lie in (0, 1], got {0}")]
    InvalidAlpha(f64),

    #[error("series are not aligned: alpha {alpha_a} vs {alpha_b}, offset {offset_a} vs {offset_b}")]
    Alignment {
        alpha_a: f64,
        alpha_b: f64,
        offset_a: f64,
        offset_b: f64,
    },

    #[error("x must be strictly positive, got {0}")]
    Domain(f64),

    #[error("function value is not finite at x = {0}")]
    NonFinite(f64),

    #[error("gamma has a pole at {0}")]
    Pole(f64),

    #[error("invalid order: {0}")]
    Order(String),

    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
