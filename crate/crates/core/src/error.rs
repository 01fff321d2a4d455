use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// `K_{m-p-2}` needs `m >= p + 2`.
    #[error("construction undefined: m = {m} < p + 2 = {}", p + 2)]
    ConstructionUndefined { m: usize, p: usize },

    #[error("out of theorem range: {0}")]
    OutOfTheoremRange(String),

    #[error("instance too large: {0}")]
    InstanceTooLarge(String),

    #[error("search budget of {budget} nodes exceeded")]
    BudgetExceeded { budget: u64 },

    #[error("graph6 parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("certificate rejected: {0}")]
    Certificate(String),

    #[error("io error: {0}")]
    Io(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }

    pub(crate) fn parse(offset: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            offset,
            message: msg.into(),
        }
    }

    /// True for errors caused by a guard or search budget rather than bad input.
    pub fn is_resource_limit(&self) -> bool {
        matches!(
            self,
            Error::InstanceTooLarge(_) | Error::BudgetExceeded { .. }
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
