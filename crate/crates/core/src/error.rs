use thiserror::Error;

/// Errors produced by graph construction, queries and transforms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("node labels must be non-empty")]
    EmptyLabel,
    #[error("loop edge at node `{0}`")]
    LoopEdge(String),
    #[error("unknown node `{0}`")]
    UnknownNode(String),
    #[error("graph is not a chain graph")]
    NotAChainGraph,
    #[error("graph is not a chain mixed graph")]
    NotACmg,
    #[error("graph is not an anterial graph")]
    NotAnAng,
    #[error("malformed query: {0}")]
    MalformedQuery(String),
    #[error("start node `{0}` is blocked")]
    BlockedStart(String),
    #[error("walk bound {maxlen} is below the sufficient bound {required}")]
    BoundTooSmall { maxlen: usize, required: usize },
    #[error("graph has {nodes} nodes, enumeration cap is {cap}")]
    TooLarge { nodes: usize, cap: usize },
    #[error("independence models are over different ground sets")]
    GroundSetMismatch,
    #[error("invalid generator config: {0}")]
    InvalidConfig(String),
    #[error("invalid walk: {0}")]
    InvalidWalk(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
