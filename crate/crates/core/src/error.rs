use thiserror::Error;

/// Errors raised by ring construction, space operations and the search harnesses.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid ring specification: {0}")]
    InvalidSpec(String),

    #[error("usage: {0}")]
    Usage(String),

    #[error("variable x[{color},{index}] does not exist in this ring")]
    InvalidVariable { color: usize, index: usize },

    #[error("color {0} is out of range")]
    InvalidColor(usize),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: u32, right: u32 },

    #[error("monomials belong to rings with different variable sets")]
    RingMismatch,

    #[error("monomial {0} is not a member of the graded piece")]
    NotInPiece(String),

    #[error("{what} = {value} is out of range (maximum {max})")]
    OutOfRange {
        what: &'static str,
        value: usize,
        max: usize,
    },

    #[error("the lower shadow of a degree-0 space is undefined")]
    DegreeZeroShadow,

    #[error("classification is only decided for untruncated rings")]
    TruncatedClassification,

    #[error("deleted-color rings need at least two colors")]
    SingleColor,

    #[error("monomial {0} is not supported on the deleted color")]
    NotColorSupported(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("not a multicomplex: {monomial} has divisor {missing} outside the set")]
    NotClosed { monomial: String, missing: String },

    #[error("invalid f-vector: {0}")]
    InvalidFVector(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("internal invariant failed: {0}")]
    Internal(String),

    #[error("replay mismatch: {0}")]
    ReplayMismatch(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
