use thiserror::Error;

/// Errors produced by the calendar engine.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum Error {
    #[error("denominator must be nonzero")]
    ZeroDenominator,

    #[error("division by zero rational")]
    DivisionByZero,

    #[error("progress must lie in [0, 1), got {0}")]
    ProgressOutOfRange(String),

    #[error("value must lie strictly between 0 and 1, got {0}")]
    NotProperFraction(String),

    #[error("invalid yuga parameters: {0}")]
    InvalidParameters(String),

    #[error("invalid nakṣatra name table: {0}")]
    InvalidNameTable(String),

    #[error("invalid intercalary schedule: {0}")]
    InvalidSchedule(String),

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },
}
