use thiserror::Error;

use crate::covering::CoveringViolation;
use crate::graph::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("malformed word {token:?}: {message}")]
    Word { token: String, message: String },

    #[error("invalid graph: {0}")]
    InvalidGraph(Violation),

    #[error("invalid graph map: {0}")]
    InvalidMorphism(String),

    #[error("not a covering: {0}")]
    NotCovering(CoveringViolation),

    #[error("graph is not connected")]
    Disconnected,

    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),

    #[error("arc {0} out of range")]
    ArcOutOfRange(usize),

    #[error("invalid subgraph: {0}")]
    InvalidSubgraph(String),

    #[error("subgraphs {0} and {1} overlap")]
    Overlap(usize, usize),

    #[error("subgraph {0} is not a tree")]
    NotATree(usize),

    #[error("preimage component {0} does not map bijectively onto the tree")]
    ExcisionFailed(usize),

    #[error("generator index {index} out of range for rank {rank}")]
    GeneratorOutOfRange { index: usize, rank: usize },

    #[error("ambient ranks differ: {0} vs {1}")]
    RankMismatch(usize, usize),

    #[error("ambient rank must be 2, got {0}")]
    AmbientRankNotTwo(usize),

    #[error("ambient rank must be at least 1")]
    ZeroRank,

    #[error("invalid core: {0}")]
    InvalidCore(String),

    #[error("core is incomplete (infinite index)")]
    IncompleteCore,

    #[error("undecided for incomplete cores")]
    GaloisUndecided,

    #[error("core is not Galois")]
    NotGalois,

    #[error("trivial subgroup not allowed here")]
    TrivialSubgroup,

    #[error("word {0} already lies in the subgroup")]
    AlreadyContained(String),

    #[error("element set is not a subgroup of the deck group")]
    NotASubgroup,

    #[error("group of order {order} exceeds the enumeration limit {limit}")]
    TooLarge { order: usize, limit: usize },

    #[error("lattice check failed: {0}")]
    LatticeCheck(String),

    #[error("rank bound violated: lhs={lhs} exceeds rhs={rhs}")]
    BoundViolated { lhs: i64, rhs: i64 },
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    /// True for input-syntax failures (as opposed to domain failures).
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. } | Error::Word { .. })
    }
}
