use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("pole at non-positive integer (x = {0})")]
    Pole(f64),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("gamma overflows f64 at x = {0}")]
    Overflow(f64),

    #[error("order alpha = 0 is the identity operator; no transform pair exists")]
    DegenerateOrder,

    #[error("invalid order alpha = {0}; expected a finite value in [0, 1]")]
    InvalidOrder(f64),

    #[error("invalid horizon t = {0}; expected a finite value > 0")]
    InvalidHorizon(f64),

    #[error("integrand `{0}` is not strictly monotone")]
    NonMonotone(String),

    #[error("height y = {y} lies outside the range [{lo}, {hi}] of the integrand")]
    Range { y: f64, lo: f64, hi: f64 },

    #[error(
        "evaluation budget of {evaluations} exhausted; best value {best} (error estimate {error_estimate:e})"
    )]
    BudgetExhausted {
        best: f64,
        error_estimate: f64,
        evaluations: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("nested oracle supports n in {{1, 2, 3}}, got {0}")]
    UnsupportedOrder(u32),

    #[error("incompatible sampling: {0}")]
    IncompatibleSampling(String),

    #[error("non-finite value encountered: {0}")]
    NonFinite(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// Numerical failures as opposed to bad input.
    pub fn is_numerical(&self) -> bool {
        matches!(self, Error::BudgetExhausted { .. } | Error::NonFinite(_))
    }
}
