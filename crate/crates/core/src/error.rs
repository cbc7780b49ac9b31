use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop on vertex {vertex}")]
    SelfLoop { vertex: usize },
    #[error("cannot contract adjacent vertices {a} and {b}")]
    AdjacentPair { a: usize, b: usize },
    #[error("cannot contract vertex {vertex} with itself")]
    SameVertex { vertex: usize },
}

/// The guarantee of class A that an engine stage found violated.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("input is not an Artemis graph: {0}")]
    NotInClassA(String),
    #[error("coloring is improper: vertices {u} and {v} are adjacent and share color {color}")]
    ImproperColoring { u: usize, v: usize, color: usize },
    #[error("coloring covers {got} vertices, graph has {expected}")]
    ColoringSize { got: usize, expected: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("oracle refuses a graph on {n} vertices (budget {max})")]
    BudgetExceeded { n: usize, max: usize },
    #[error("chordless path enumeration exceeded {cap} paths")]
    PathCapExceeded { cap: usize },
    #[error("vertices {a} and {b} must be distinct and non-adjacent")]
    AdjacentPair { a: usize, b: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}
