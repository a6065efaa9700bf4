use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input; `offset` is the byte position where decoding failed.
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    /// Well-formed input whose declared sizes disagree with its contents.
    #[error("format error: {0}")]
    Format(String),

    /// An argument lies outside the operation's domain (missing edge, bad vertex, wrong class).
    #[error("domain error: {0}")]
    Domain(String),

    /// Exhaustive search refused because the instance exceeds a configured limit.
    #[error("capacity exceeded: {what} is {size}, limit is {limit}")]
    Capacity {
        what: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("invalid witness structure: {0}")]
    InvalidStructure(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("graph is not a cograph: vertices {0:?} induce a P4")]
    NotCograph([usize; 4]),

    #[error("graph is not a bipartite permutation graph")]
    NotBipartitePermutation,

    #[error("graph is not AT-free: {0:?} is an asteroidal triple")]
    NotAtFree([usize; 3]),

    #[error("graph is disconnected and cannot be contracted to a graph of finite diameter")]
    Disconnected,

    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn capacity(what: &'static str, size: usize, limit: usize) -> Self {
        Error::Capacity { what, size, limit }
    }
}
