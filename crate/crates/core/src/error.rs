use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("vertices must be pairwise distinct, got s={s}, t={t}, v={v}")]
    NotDistinct { s: usize, t: usize, v: usize },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("graph is not a tree: {0}")]
    NotATree(String),

    #[error("graph has {n} vertices, brute-force engine is capped at {cap}")]
    TooLarge { n: usize, cap: usize },
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }
}
