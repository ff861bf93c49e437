use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("io error: {0}")]
    Io(String),

    #[error("degree sequence is not graphical: {0}")]
    NotGraphical(String),

    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("mapping is not injective: vertex {0} is the image of more than one vertex")]
    NotInjective(usize),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("malformed label: {0}")]
    MalformedLabel(String),

    #[error("empty tail: no vertex has degree >= {xmin}")]
    EmptyTail { xmin: usize },

    #[error("invalid seed graph: {0}")]
    InvalidSeedGraph(String),

    #[error("infeasible construction: {0}")]
    Infeasible(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
