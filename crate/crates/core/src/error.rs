use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has {n} vertices, exceeding the cap of {cap}")]
    TooLarge { n: usize, cap: usize },
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("family is empty")]
    EmptyFamily,
    #[error("family contains a graph from S, so it has no hardness witness")]
    NotHard,
    #[error("graph is not subcubic")]
    NotSubcubic,
    #[error("invalid layout: {0}")]
    InvalidLayout(String),
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("literal {literal} occurs {count} times, at most 2 allowed")]
    OccurrenceBound { literal: i64, count: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("framework violation: {0}")]
    FrameworkViolation(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    pub fn is_budget(&self) -> bool {
        matches!(self, Error::BudgetExceeded(_) | Error::TooLarge { .. })
    }
}
