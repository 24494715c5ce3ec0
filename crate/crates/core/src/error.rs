use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("format error at byte {offset}: {message}")]
    Format { offset: usize, message: String },

    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop on vertex {0} is not allowed")]
    SelfLoop(usize),

    #[error("the empty graph has no connectivity invariants")]
    EmptyGraph,

    #[error("graph is disconnected ({components} components); split it with connected_components first")]
    Disconnected { components: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("search budget of {budget} nodes exhausted")]
    Inconclusive { budget: u64 },

    #[error("graph on {n} vertices exceeds the enumeration limit of {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("invalid CNF: {0}")]
    Cnf(String),

    #[error("assignment does not satisfy clause {clause}")]
    Unsatisfied { clause: usize },

    #[error("set is not resolving: vertices {0} and {1} share a representation")]
    NotResolving(usize, usize),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
