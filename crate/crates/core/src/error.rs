use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid set: {0}")]
    InvalidSet(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid coloring: {0}")]
    InvalidColoring(String),

    /// The witness itself is ill-formed (wrong lengths, repeats, dangling
    /// references). Distinct from a well-formed witness that fails to verify.
    #[error("malformed witness: {0}")]
    MalformedWitness(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An input does not have the shape an operation requires, e.g. a
    /// coloring of a different graph or a host that is not `B_{n,k}`.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("budget exceeded during {task}: needs {needed} checks, limit is {limit}")]
    BudgetExceeded {
        task: &'static str,
        needed: u64,
        limit: u64,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded { .. })
    }
}
