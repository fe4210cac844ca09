use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("the zero ring is not a valid input here")]
    ZeroRing,

    #[error("operands belong to different rings")]
    RingMismatch,

    #[error("resource cap exceeded: {what} is {actual}, cap is {cap}")]
    CapExceeded {
        what: &'static str,
        actual: usize,
        cap: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("polynomial modulus is not monic")]
    NotMonic,

    #[error("ring is not a field: {0}")]
    NotAField(String),

    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid literal at {line}:{column}: {message}")]
    Elaboration {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn cap(what: &'static str, actual: usize, cap: usize) -> Self {
        Error::CapExceeded { what, actual, cap }
    }
}
