use thiserror::Error;

/// Errors raised by graph construction, parsing and the analysis routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid parameter for {family}: {message}")]
    InvalidParameter {
        family: &'static str,
        message: String,
    },

    #[error("not a matching of the host graph: {0}")]
    NotAMatching(String),

    #[error("target size {k} outside the admissible range [{low}, {high}]")]
    SizeOutOfRange { k: usize, low: usize, high: usize },

    #[error("certificate rejected: {0}")]
    Certificate(String),

    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("graph on {n} vertices exceeds the cap of {cap} for {what}")]
    ScaleCap {
        n: usize,
        cap: usize,
        what: &'static str,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
