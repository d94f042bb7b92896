use thiserror::Error;

use crate::graph::ValidationReport;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("rational arithmetic overflow in {0}")]
    Overflow(&'static str),

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("graph of groups failed validation:\n{0}")]
    Validation(ValidationReport),

    #[error("{invariant} undefined: {reason}")]
    Undefined { invariant: &'static str, reason: String },

    #[error("incomplete chi assignment: no value for vertex {0}")]
    IncompleteAssignment(String),

    #[error("missing value for factor label {0}")]
    MissingLabel(String),

    #[error("{0}")]
    Divisibility(String),

    #[error("unknown group {0:?}")]
    UnknownGroup(String),

    #[error("invalid group table: {0}")]
    InvalidTable(String),

    #[error("ambiguous character data: {0} candidate dimension multisets")]
    AmbiguousCharacterData(usize),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),

    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("empty sample")]
    EmptySample,
}
