use thiserror::Error;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph must have at least one node")]
    NoNodes,
    #[error("self-loop at node {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("node {node} out of range for a graph with {n} nodes")]
    NodeOutOfRange { node: usize, n: usize },
    #[error("({0}, {1}) is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("expected {expected} entries, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("orientation contains a directed cycle")]
    Cyclic,
    #[error("graph has no edges")]
    Edgeless,
    #[error("graph has no simple cycles")]
    NoCycles,
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is a forest")]
    Forest,
    #[error("k must be at least 1")]
    InvalidK,
    #[error("nodes {0} and {1} are adjacent but share a color")]
    ImproperColoring(usize, usize),
    #[error("invalid coloring: {0}")]
    InvalidColoring(&'static str),
    #[error("invalid cycle: {0}")]
    InvalidCycle(&'static str),
    #[error("no repeated state within {0} steps")]
    NoPeriod(usize),
    #[error("nodes operate at different rates within one period")]
    NonUniformRate,
    #[error("{what} exceeds the limit of {limit}")]
    CapExceeded { what: &'static str, limit: usize },
}

impl Error {
    /// True for errors that signal an input too large for exhaustive analysis.
    pub fn is_cap_exceeded(&self) -> bool {
        matches!(self, Error::CapExceeded { .. })
    }
}
