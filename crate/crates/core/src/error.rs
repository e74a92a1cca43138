use std::fmt;

use thiserror::Error;

use crate::axioms::Axiom;

/// Errors raised by constructors, loaders and witness builders.
///
/// Individual and component indices carried by variants are 1-based, the
/// same convention used throughout the public API.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("bad dimension: {what} = {value} (expected {expected})")]
    BadDimension {
        what: &'static str,
        value: usize,
        expected: &'static str,
    },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("column {0} is a preference cycle, not a weak order")]
    CycleColumn(usize),

    #[error("unsupported alternative count {0}: only 3 alternatives are supported here")]
    UnsupportedAlternativeCount(usize),

    #[error("row must be strict but contains an indifference entry")]
    NonStrictRow,

    #[error("index {index} out of range 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("{what}: {n} individuals exceeds the supported maximum of {max}")]
    TooLarge { what: &'static str, n: usize, max: usize },

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("precondition failed: {0} does not hold")]
    PreconditionFailed(Axiom),

    #[error("neither Arrow case applies after the lemma stages (minimal Votes1 set covers all individuals)")]
    InternalDichotomy,

    #[error("construction unavailable: {0}")]
    ConstructionUnavailable(String),

    #[error("invalid {what}: {message}")]
    Invalid { what: &'static str, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A parse failure with a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }

    pub(crate) fn at_column(column: usize, message: impl Into<String>) -> Self {
        ParseError::new(1, column, message)
    }

    /// Moves a single-line error onto `line`, shifting its column by `offset`.
    pub(crate) fn relocate(mut self, line: usize, offset: usize) -> Self {
        self.line = line;
        self.column += offset;
        self
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at {}:{}: {}", self.line, self.column, self.message)
    }
}
