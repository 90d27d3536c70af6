use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported Lie type: {0}")]
    UnsupportedType(String),

    #[error("weight {0} is not in the root lattice")]
    NotInRootLattice(String),

    #[error("domain error: {0}")]
    DomainError(String),

    #[error("monomial {0} is not below {1}")]
    NotComparable(String, String),

    #[error("monomial {monomial} is not {node}-dominant")]
    NotDominant { monomial: String, node: usize },

    #[error("spectral separation violated: root {first} precedes root {second}")]
    SeparationViolation { first: i32, second: i32 },

    #[error("inconsistent expansion at {0}")]
    InconsistentExpansion(String),

    #[error("internal error: {0}")]
    InternalError(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}
