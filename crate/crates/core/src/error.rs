use thiserror::Error;

/// Errors produced by graph constructors, the isomorphism engine and the
/// recognition checks.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed arguments: out-of-range vertices, loops, illegal ranks, ...
    #[error("invalid input: {0}")]
    Input(String),

    /// Input that is well formed but outside what an operation supports.
    #[error("unsupported input: {0}")]
    Unsupported(String),

    /// A size cap was exceeded.
    #[error("{what} is {size}, which exceeds the limit of {limit}")]
    Resource {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    /// A structural property required by an operation does not hold.
    /// `witness` lists the vertices (or blocks) exhibiting the failure.
    #[error("structure violation: {message} (witness {witness:?})")]
    Structure { message: String, witness: Vec<usize> },

    /// Text input could not be parsed.
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub(crate) fn input(msg: impl Into<String>) -> Self {
        Error::Input(msg.into())
    }

    pub(crate) fn structure(msg: impl Into<String>, witness: Vec<usize>) -> Self {
        Error::Structure {
            message: msg.into(),
            witness,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
