use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {0} is outside the supported range 1..=10")]
    OrderOutOfRange(usize),
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),
    #[error("vertex set is empty")]
    EmptyVertexSet,
    #[error("deleting the only vertex would leave an empty graph")]
    WouldBeEmpty,
    #[error("malformed graph6 string {input:?}: {detail}")]
    Graph6 { input: String, detail: String },
    #[error("enumeration supports orders 1..=7, got {0}")]
    EnumerationOrder(usize),
    #[error("expected a graph of order {expected}, got order {actual}")]
    WrongOrder { expected: usize, actual: usize },
    #[error("occurrence status is defined for orders up to 7, got {0}")]
    StatusOrder(usize),
    #[error("graph is not eligible: its complement is not bipartite")]
    Ineligible,
    #[error("graph does not have diameter three")]
    NotDiameterThree,
    #[error("{0}")]
    Arithmetic(String),
    #[error("{path}:{line}: {detail}")]
    Parse {
        path: String,
        line: usize,
        detail: String,
    },
    #[error("appendix data mismatch: {0}")]
    AppendixMismatch(String),
    #[error("knowledge base conflict: {0}")]
    Conflict(String),
    #[error("construction {label} failed: {detail}")]
    Construction { label: String, detail: String },
    #[error("io error on {path}: {detail}")]
    Io { path: String, detail: String },
}
