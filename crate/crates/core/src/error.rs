//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the engine.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Unrecognized root-system selector or invalid family/rank combination.
    #[error("invalid root system `{0}`")]
    InvalidSystem(String),

    /// A vector does not have the rank of the root system it is used with.
    #[error("dimension mismatch: expected length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// An operation required a lattice element in the nonnegative cone.
    #[error("lattice element has a negative coefficient: {0:?}")]
    NegativeCoefficient(Vec<i64>),

    /// Division by the zero polynomial or rational function.
    #[error("division by zero")]
    DivisionByZero,

    /// `q → q⁻¹` substitution applied to the zero function.
    #[error("zero input")]
    ZeroInput,

    /// Series expansion at `q = 0` of a function with a pole there.
    #[error("denominator vanishes at q = 0")]
    DenominatorVanishesAtZero,

    /// A quantity proved to be an integer polynomial reduced to a polynomial
    /// with non-integer coefficients. Falsifies the integrality theorem.
    #[error("numerator of J_{alpha:?} has non-integer coefficients")]
    NonIntegerCoefficient { alpha: Vec<i64> },

    /// A quantity proved to be a polynomial did not reduce to one.
    /// Falsifies the denominator theorem.
    #[error("(q)_α² · J_α is not a polynomial for alpha = {alpha:?}")]
    NotPolynomial { alpha: Vec<i64> },

    /// A type-A-only operation was invoked on another family.
    #[error("operation requires type A, got {0}")]
    NotTypeA(String),

    /// A simply-laced-only operation was invoked on a multiply-laced system.
    #[error("operation requires a simply-laced system, got {0}")]
    NotSimplyLaced(String),

    /// The Toda left coefficient vanished identically.
    #[error("degenerate Toda recursion for alpha = {alpha:?}")]
    TodaDegenerate { alpha: Vec<i64> },

    /// A monopole-formula summand with negative charge was encountered.
    /// Contradicts the Hilbert-series interpretation; never silently summed.
    #[error("negative monopole charge {charge} for alpha = {alpha:?}")]
    NegativeMonopoleCharge { alpha: Vec<i64>, charge: i64 },

    /// The monopole sum failed to stabilize below the enumeration cap.
    #[error("monopole sum did not stabilize through order {order} (bound {bound})")]
    StabilizationFailed { order: usize, bound: u64 },

    /// A theorem-tier check failed during a scan.
    #[error("theorem check `{check}` failed at alpha = {alpha:?}: {detail}")]
    TheoremViolation {
        check: String,
        alpha: Vec<i64>,
        detail: String,
    },

    /// Scan range exceeds the configured degree/entry budget.
    #[error("resource budget exceeded: {0}")]
    BudgetExceeded(String),

    /// Label universe too large for the bitmask fixed-point enumeration.
    #[error("label set of size {0} exceeds the 64-bit mask limit")]
    LabelSetTooLarge(usize),

    /// Cache or report I/O failure.
    #[error("io error: {0}")]
    Io(String),

    /// Malformed cache or report document.
    #[error("malformed document: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Malformed(e.to_string())
    }
}
