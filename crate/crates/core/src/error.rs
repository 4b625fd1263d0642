use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid quiver: {0}")]
    InvalidQuiver(String),

    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("unknown arrow label `{0}`")]
    UnknownArrow(String),

    #[error("vertex {0} is out of range")]
    VertexOutOfRange(usize),

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("zero dimension vector")]
    ZeroVector,

    #[error("path is not composable: {0}")]
    NotComposable(String),

    #[error("path is not closed: starts at e{start} and ends at e{end}")]
    NotClosed { start: usize, end: usize },

    #[error("vertex {0} carries a loop, reflection undefined")]
    LoopAtVertex(usize),

    #[error("bound exceeded: {0}")]
    BoundExceeded(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("invalid number `{0}`")]
    InvalidNumber(String),

    #[error("derivation image for `{arrow}` is not endpoint compatible")]
    IncompatibleDerivation { arrow: String },
}

pub type Result<T> = std::result::Result<T, Error>;
