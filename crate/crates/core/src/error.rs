use thiserror::Error;

use crate::graph::{Edge, Vertex};

/// Errors raised while building or querying a [`Graph`](crate::Graph).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge {0} listed more than once")]
    DuplicateEdge(Edge),
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("edge {0} is not present")]
    EdgeNotPresent(Edge),
    #[error("graph is disconnected")]
    Disconnected,
}

/// Errors raised by the structural predicates.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

/// Errors raised by the 2-cutset machinery.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("vertices {0} and {1} are adjacent")]
    AdjacentPair(Vertex, Vertex),
    #[error("invalid partition: {0}")]
    BadPartition(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("no qualifying split found")]
    NoSplitFound,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Errors raised by the coloring engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("graph is not chordless; {witness} is a chord")]
    NotChordless { witness: Edge },
    #[error("edge {0} is not present")]
    EdgeNotPresent(Edge),
    #[error("edge {0} is already colored")]
    EdgeAlreadyColored(Edge),
    #[error("bichromatic cycle through vertex {0}")]
    BichromaticCycle(Vertex),
    #[error(
        "exchange at vertex {vertex}: needs exactly one edge of each color {first} and {second}"
    )]
    InvalidExchange {
        vertex: Vertex,
        first: u32,
        second: u32,
    },
    #[error("palette of {palette} colors is too small; {needed} needed")]
    PaletteTooSmall { palette: u32, needed: u32 },
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("internal invariant broken: {0}")]
    Internal(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Decomposition(#[from] DecompositionError),
}

/// Errors raised by the verifiers and the exhaustive oracle.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("coloring is not proper: {0} and {1} share a color at a common endpoint")]
    NotProper(Edge, Edge),
    #[error("coloring is incomplete: {0} has no color")]
    Unassigned(Edge),
    #[error("colors {first} and {second} form a cycle through {}", fmt_cycle(.cycle))]
    BichromaticCycle {
        first: u32,
        second: u32,
        cycle: Vec<Vertex>,
    },
    #[error("coloring mentions {0}, which is not an edge of the graph")]
    EdgeMismatch(Edge),
    #[error("search space too large: {m} edges exceeds the limit of {limit}")]
    SearchSpaceTooLarge { m: usize, limit: usize },
    #[error("no acyclic coloring with at most {0} colors")]
    NoColoringWithinKMax(u32),
}

fn fmt_cycle(cycle: &[Vertex]) -> String {
    let vs: Vec<String> = cycle.iter().map(|v| v.to_string()).collect();
    vs.join("-")
}

/// Errors raised while reading the plain-text graph and coloring formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct FormatError {
    pub line: usize,
    pub message: String,
}

impl FormatError {
    pub(crate) fn new(line: usize, message: impl Into<String>) -> Self {
        FormatError {
            line,
            message: message.into(),
        }
    }
}
