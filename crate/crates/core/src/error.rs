use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed textual input (graph6, edge list, coloring file).
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("graph is not connected")]
    Disconnected,

    #[error("graph is not {k}-connected")]
    NotKConnected { k: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A backtracking search ran out of nodes before reaching a verdict.
    #[error("search budget of {budget} nodes exhausted in {search}")]
    BudgetExceeded { search: &'static str, budget: u64 },

    /// Proper-path enumeration for a pair hit its cap before deciding.
    #[error("enumeration cap of {cap} paths reached for pair ({u}, {v})")]
    EnumerationCap { u: usize, v: usize, cap: usize },

    /// A structure whose existence is guaranteed was not found, or a
    /// construction failed its own re-verification.
    #[error("defect: {0}")]
    Defect(String),
}

impl Error {
    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn defect(msg: impl Into<String>) -> Self {
        Error::Defect(msg.into())
    }
}
