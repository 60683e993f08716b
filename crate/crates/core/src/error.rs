use thiserror::Error;

use crate::semigraph::Element;

pub type Result<T> = std::result::Result<T, GraphError>;

/// Errors for construction, parsing and solver preconditions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range (graph has {n} vertices)")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} not present")]
    MissingEdge(usize, usize),
    #[error("duplicate semi-edge at vertex {0}")]
    DuplicateSemiEdge(usize),
    #[error("vertex {0} carries no semi-edge")]
    MissingSemiEdge(usize),
    #[error("element {0} is not a semi-edge")]
    NotASemiEdge(Element),
    #[error("element {0} does not belong to the graph")]
    UnknownElement(Element),
    #[error("vertex {0} would exceed degree 3")]
    DegreeOverflow(usize),
    #[error("duplicate port name `{0}`")]
    DuplicatePort(String),
    #[error("no port named `{0}`")]
    MissingPort(String),
    #[error("closure pairing invalid: {0}")]
    BadPairing(String),
    #[error("{left} semi-edges left unpaired; closure needs 0, 1 or 3")]
    BadLeftoverCount { left: usize },
    #[error("embedding invalid: {0}")]
    BadEmbedding(String),
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("input has semi-edges but a plain graph is required")]
    HasSemiEdges,
    #[error("graph is not cubic")]
    NotCubic,
    #[error("maximum degree exceeds 3")]
    DegreeTooLarge,
    #[error("path {0}-{1}-{2} is not a path of the graph")]
    InvalidPath(usize, usize, usize),
    #[error("no 1-factor exists")]
    NoOneFactor,
    #[error("no 1-factor containing {0} exists (bridgeless cubic input would guarantee one)")]
    NoOneFactorContaining(Element),
    #[error("no 2-factor exists")]
    NoTwoFactor,
    #[error("no proper core found (every cubic semi-graph with a 1-factor has one)")]
    NoProperCore,
    #[error("factor is not a 1-factor of the graph: {0}")]
    InvalidFactor(String),
    #[error("core component violates the cycle/semi-path/subdivision trichotomy: {0}")]
    CoreClassification(String),
    #[error("conflicting-subgraph bound needs a non-3-edge-colourable subgraph")]
    SubgraphColourable,
    #[error("gadget contract violated: {0}")]
    Contract(String),
    #[error("composition plan invalid: {0}")]
    BadPlan(String),
    #[error("search exhausted its budget before an exact answer was reached")]
    BudgetExhausted,
    #[error("{0}")]
    Unsupported(String),
}
