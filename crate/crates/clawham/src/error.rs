use thiserror::Error;

/// Errors surfaced by parsing, predicates, and the cycle machinery.
#[derive(Debug, Error)]
pub enum Error {
    #[error("graph6 parse error: {0}")]
    Graph6(String),
    #[error("edge list parse error: {0}")]
    EdgeList(String),
    #[error("vertex {v} out of range for graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("vertex set is empty")]
    EmptyVertexSet,
    #[error("vertex {0} is not on the cycle")]
    NotOnCycle(usize),
    #[error("not a cycle: {0}")]
    NotACycle(String),
    #[error("not an o-cycle: {0}")]
    NotAnOCycle(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not {k}-connected")]
    NotKConnected { k: usize },
    #[error("graph is acyclic")]
    Acyclic,
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("no (u,C)-fan: fewer than three internally disjoint paths from {u} to the cycle")]
    NoFan { u: usize },
    #[error("no attachment path through the component")]
    NoAttachmentPath,
    #[error("internal invariant violated: {0}")]
    Invariant(String),
    #[error("theorem contradiction: {0}")]
    TheoremContradiction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
