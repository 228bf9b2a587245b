use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("bad edge ({u}, {v}) for a graph on {n} vertices")]
    BadEdge { u: usize, v: usize, n: usize },
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    BadVertex { v: usize, n: usize },
    #[error("vertex set over {found} vertices used with a graph on {expected}")]
    UniverseMismatch { expected: usize, found: usize },
    #[error("product would have {vertices} vertices, limit is {limit}")]
    SizeOverflow { vertices: usize, limit: usize },
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("malformed graph6 at byte {offset}: {reason}")]
    BadGraph6 { offset: usize, reason: String },
    #[error("malformed edge list at line {line}: {reason}")]
    BadEdgeList { line: usize, reason: String },
    #[error("{what} too large: {size} exceeds limit {limit}")]
    TooLarge {
        what: &'static str,
        size: u128,
        limit: u128,
    },
    #[error("node budget of {budget} exhausted; best known upper bound {best_upper}")]
    BudgetExhausted { budget: u64, best_upper: usize },
    #[error("vertex set does not dominate the graph")]
    NotDominating,
    #[error("projection of the dominating set onto the first factor is not minimal")]
    ProjectionNotMinimal,
    #[error("invalid domination hint: {0}")]
    BadHint(String),
    #[error("bad graph spec `{spec}`: {reason}")]
    BadSpec { spec: String, reason: String },
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl Error {
    /// Errors caused by resource limits rather than malformed input.
    pub fn is_limit(&self) -> bool {
        matches!(
            self,
            Error::SizeOverflow { .. } | Error::TooLarge { .. } | Error::BudgetExhausted { .. }
        )
    }
}
