use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("variable sets differ: {left:?} vs {right:?}")]
    VariableMismatch {
        left: Vec<String>,
        right: Vec<String>,
    },

    #[error("series is not invertible: {0}")]
    NonInvertible(String),

    #[error("infinite product with base {0} of q-degree 0 does not converge formally")]
    FormalDivergence(String),

    #[error("dilation maps {monomial} to negative q-power {q_exp}")]
    InvalidDilation { monomial: String, q_exp: i64 },

    #[error("dilated matrix entry ({row},{col}) = {value} permits an increasing step")]
    InconsistentDilation {
        row: String,
        col: String,
        value: i64,
    },

    #[error(
        "coefficient of q^{requested} requested but series is exact only up to q^{truncation}"
    )]
    TruncationExceeded { requested: u32, truncation: u32 },

    #[error("truncation {truncation} is smaller than n_max {n_max}")]
    TruncationTooSmall { n_max: u32, truncation: u32 },

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("unknown case `{0}`")]
    UnknownCase(String),

    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    pub(crate) fn parse(column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            column,
            message: message.into(),
        }
    }
}
