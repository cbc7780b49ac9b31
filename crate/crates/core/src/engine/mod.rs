//! The even-pair contraction pipeline.
//!
//! One special-even-pair search runs three stages on a chain of nested
//! levels: [`find_interesting`] grows a maximal interesting set `T`,
//! [`find_outer_path`] looks for a minimal `T`-outer path, and
//! [`find_even_pair`] turns that path into a special even pair. When a level
//! has no outer path the search descends into `G[C(T)]`.
//!
//! Every stage works on a *view*: a graph plus an active vertex set. Vertex
//! ids are always those of the underlying graph.

mod coloring;
mod driver;
mod even_pair;
mod interesting;
mod outer_path;

use std::ops::AddAssign;

pub use coloring::{greedy_color_cliques, lift_coloring, Coloring, ContractionTrace};
pub use driver::{
    color_artemis, color_artemis_with, find_special_even_pair, find_special_even_pair_counted,
    ChainLevel, ColoringRun, ContractionEvent, PairSource, SpecialPairOutcome,
};
pub use even_pair::{find_even_pair, find_even_pair_in, EvenPairState};
pub use interesting::{
    find_interesting, find_interesting_in, InterestingSearchState, InterestingSetResult,
};
pub use outer_path::{find_outer_path, find_outer_path_in, OuterPath, OuterSearchState};

/// Basic-operation counts per pipeline stage: one unit per vertex
/// dequeued, adjacency entry scanned, or set member visited.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct OpCounters {
    pub interesting: u64,
    pub outer_path: u64,
    pub even_pair: u64,
}

impl OpCounters {
    pub fn total(&self) -> u64 {
        self.interesting + self.outer_path + self.even_pair
    }
}

impl AddAssign for OpCounters {
    fn add_assign(&mut self, rhs: Self) {
        self.interesting += rhs.interesting;
        self.outer_path += rhs.outer_path;
        self.even_pair += rhs.even_pair;
    }
}
