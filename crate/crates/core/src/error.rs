use thiserror::Error;

use crate::graph::Multigraph;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },

    #[error("line {line}: loop edge at vertex {vertex} (loops are not allowed)")]
    LoopEdge { line: usize, vertex: usize },

    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop edge requested at vertex {vertex}")]
    LoopRequested { vertex: usize },

    #[error("header declares {declared} edges but {found} were listed")]
    EdgeCountMismatch { declared: usize, found: usize },

    #[error("vertex sets overlap at vertex {vertex}")]
    OverlappingSets { vertex: usize },

    #[error("edge id {edge} out of range for graph with {m} edges")]
    EdgeOutOfRange { edge: usize, m: usize },

    #[error("palette of {k} colors exceeds the supported cap of {cap}")]
    PaletteTooLarge { k: usize, cap: usize },

    #[error("coloring covers {found} {kind} but the graph has {expected}")]
    ColoringShape {
        kind: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("color {color} on {element} is outside the palette [1..{k}]")]
    ColorOutOfRange { element: String, color: usize, k: usize },

    #[error("coloring is not proper: {0}")]
    NotProper(String),

    #[error("{what} of {size} exceeds the configured cap of {cap}")]
    TooLarge {
        what: &'static str,
        size: usize,
        cap: usize,
    },

    #[error("search budget of {budget} nodes exhausted")]
    BudgetExceeded { budget: u64 },

    #[error(
        "hypothesis not met: chromatic index {chi_prime} must be at least max(delta+2, n+1) = max({delta_plus_2}, {n_plus_1})"
    )]
    HypothesisNotMet {
        chi_prime: usize,
        delta_plus_2: usize,
        n_plus_1: usize,
    },

    #[error("vertex set is not {k}-dense")]
    NotKDense { k: usize },

    #[error("vertices {u} and {v} share missing color {color}; the set is not elementary")]
    NotElementary { u: usize, v: usize, color: usize },

    #[error("vertex {vertex} has no missing color (degree reaches the palette size)")]
    DegreeCapViolated { vertex: usize },

    #[error("saturated at {m} edges without reaching the {k}-dense count {target}; maximal graph attached")]
    SaturationWithoutDensity {
        k: usize,
        m: usize,
        target: usize,
        graph: Box<Multigraph>,
    },

    #[error("expected chromatic index {expected}, oracle returned {found}")]
    ChromaticIndexMismatch { expected: usize, found: usize },

    #[error("graph is not an id-prefix subgraph of the embedding: {0}")]
    IdMappingMismatch(String),

    #[error("internal guarantee violated: {0}")]
    GuaranteeViolated(String),

    #[error("{0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
