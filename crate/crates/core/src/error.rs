use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors raised by the numeric kernels and configuration checks.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("gamma is undefined at the pole x = {0}")]
    PoleArgument(f64),

    #[error("0 raised to the non-positive power {0} is undefined")]
    SingularPower(f64),

    #[error("fractional derivative of order {alpha} is singular at z = 0")]
    SingularPoint { alpha: f64 },

    #[error("derivative order alpha = {0} is outside the open interval (0, 2)")]
    DomainAlpha(f64),

    #[error("evaluation diverged (magnitude exceeded {limit:e})")]
    Divergence { limit: f64 },

    #[error("fractional derivative modulus {modulus:e} is below the floor {floor:e}")]
    DerivativeVanished { modulus: f64, floor: f64 },

    #[error("second difference is zero; the sequence is stationary")]
    DegenerateDifference,

    #[error("need at least 3 usable error pairs to estimate the order, found {0}")]
    InsufficientData(usize),

    #[error("leading coefficient is zero")]
    DegenerateLeadingCoefficient,

    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
