use thiserror::Error;

/// Errors surfaced by parsing, contract checks, and integrity guards.
#[derive(Debug, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    #[error("{context}: not a vertex cover (edge {u}-{v} uncovered)")]
    NotVertexCover { context: &'static str, u: u32, v: u32 },

    #[error("supplied set is not a feedback vertex set (a cycle remains)")]
    NotFeedbackVertexSet,

    #[error("oracle refused: {vertices} vertices exceeds limit {limit} (raise the limit to force)")]
    OracleRefused { vertices: usize, limit: usize },

    #[error("feedback vertex search exhausted budget {budget}")]
    FvsBudgetExhausted { budget: usize },

    #[error("unsupported parameter: {0}")]
    UnsupportedParameter(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("replacement table integrity failure: {0}")]
    TableIntegrity(String),

    #[error("internal integrity failure: {0}")]
    Integrity(String),
}

pub type Result<T> = std::result::Result<T, Error>;
