//! Optimal coloring of Artemis graphs: graphs with no odd hole, no antihole
//! on five or more vertices and no prism.
//!
//! The engine repeatedly finds a special even pair, contracts it, and stops
//! when the graph is a disjoint union of cliques. Colors are then lifted back
//! through the contraction trace. The [`oracles`] module holds exponential
//! reference implementations used to validate every intermediate structure
//! on small graphs, and [`handles`] cross-checks interesting sets against
//! generalized handles in the complement.

pub mod engine;
pub mod error;
pub mod graph;
pub mod handles;
pub mod oracles;
pub mod search;
pub mod vertex_set;

pub use engine::{
    color_artemis, color_artemis_with, find_even_pair, find_interesting, find_outer_path,
    find_special_even_pair, greedy_color_cliques, lift_coloring, Coloring, ContractionTrace,
    InterestingSetResult, OpCounters, OuterPath, SpecialPairOutcome,
};
pub use error::{EngineError, GraphError, OracleError};
pub use graph::{ContractionStep, Graph};
pub use search::{bfs_from_to, SearchForest};
pub use vertex_set::VertexSet;
