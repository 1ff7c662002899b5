use thiserror::Error;

/// Errors shared by the enumeration, witness and solver layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An enumeration grew past its configured cap; `partial` is the count
    /// reached when it stopped.
    #[error("{what} capacity exceeded: more than {cap} (stopped at {partial})")]
    CapacityExceeded { what: &'static str, cap: usize, partial: usize },
    #[error("oracle limit exceeded: n = {n} > {limit}")]
    OracleLimit { n: usize, limit: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A structural witness that exists on long-hole-free graphs was not found.
    #[error("witness not found: {0}")]
    WitnessNotFound(String),
    #[error("witness has {size} vertices, bound is {bound}")]
    BoundExceeded { size: usize, bound: usize },
    #[error("no set of at most three vertices dominates the clique")]
    NoDomination,
    #[error("input graph is disconnected")]
    Disconnected,
    #[error("graph plus fill-in is not chordal (hole {0:?})")]
    NotChordal(Vec<usize>),
    #[error("bag of size {size} exceeds the limit {limit}")]
    WidthTooLarge { size: usize, limit: usize },
    #[error("total weight is zero")]
    ZeroTotalWeight,
    #[error("internal check failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
