//! JSON form of a contraction trace, enough to replay the color lifting.

use artemis_core::engine::ColoringRun;
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceStep {
    pub a: usize,
    pub b: usize,
    /// Id of the merged vertex in the contracted graph.
    pub merged: usize,
    pub chain_depth: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceFile {
    pub original_n: usize,
    pub steps: Vec<TraceStep>,
    /// Clique partition of the fully contracted graph.
    pub residue: Vec<Vec<usize>>,
    pub num_colors: usize,
}

impl TraceFile {
    pub fn from_run(run: &ColoringRun) -> TraceFile {
        TraceFile {
            original_n: run.trace.original_n,
            steps: run
                .trace
                .steps
                .iter()
                .zip(&run.trace.chain_depths)
                .map(|(step, &chain_depth)| TraceStep {
                    a: step.a,
                    b: step.b,
                    merged: step.merged,
                    chain_depth,
                })
                .collect(),
            residue: run.residue.iter().map(|clique| clique.to_vec()).collect(),
            num_colors: run.coloring.num_colors,
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("trace serializes");
        text.push('\n');
        text
    }
}
