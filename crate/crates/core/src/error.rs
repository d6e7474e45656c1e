use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Series inversion needs a constant term of +1 or -1.
    #[error("constant term `{0}` is not a unit")]
    NonUnitConstantTerm(String),

    /// A quotient that must be exact left a remainder. Every quotient the
    /// library forms is known to be exact, so this signals a bug.
    #[error("inexact division: {dividend} / {divisor}")]
    InexactDivision { dividend: String, divisor: String },

    #[error("division by zero")]
    DivisionByZero,

    #[error("matrix is not square: {rows} rows, row of length {cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix dimension {dim} exceeds the cofactor-expansion bound {bound}")]
    DimensionTooLarge { dim: usize, bound: usize },

    /// Condensation met a vanishing connected minor and cannot divide by it.
    #[error("zero interior minor at condensation step {step}, position ({row}, {col})")]
    ZeroInteriorMinor { step: usize, row: usize, col: usize },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("truncation order {order} is below the required {required}")]
    OrderTooSmall { order: usize, required: usize },

    #[error("enumeration budget exceeded: {0}")]
    EnumerationBudgetExceeded(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("parse error: {0}")]
    Parse(String),
}
