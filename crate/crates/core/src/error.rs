use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    /// The divisor does not divide the dividend in the Laurent ring.
    #[error("non-exact division")]
    NonExactDivision,

    #[error("value is not an integral Laurent polynomial: {0}")]
    IntegralityViolation(String),

    #[error("parameters not covered by either closed-form case: {0}")]
    CaseNotCovered(String),

    #[error("invalid pretzel knot: {0}")]
    InvalidKnot(String),

    #[error("insufficient data: need at least {needed} values, got {got}")]
    InsufficientData { needed: usize, got: usize },

    #[error("no quasi-polynomial fit with period <= {period_cap} and cutoff <= {cutoff_cap}")]
    NoFit {
        period_cap: usize,
        cutoff_cap: usize,
    },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("state sum did not resolve the top degree within a window of {0} coefficients")]
    WindowExhausted(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
