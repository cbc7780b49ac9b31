//! Seeded generators for graph families inside class A.

use std::fmt;
use std::str::FromStr;

use artemis_core::oracles::{is_artemis, OracleBudget};
use artemis_core::{Graph, OracleError};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Chordal,
    Bipartite,
    FilteredRandom,
}

impl Family {
    pub const ALL: [Family; 3] = [Family::Chordal, Family::Bipartite, Family::FilteredRandom];
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Chordal => "chordal",
            Family::Bipartite => "bipartite",
            Family::FilteredRandom => "filtered-random",
        })
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "chordal" => Ok(Family::Chordal),
            "bipartite" => Ok(Family::Bipartite),
            "filtered-random" => Ok(Family::FilteredRandom),
            other => Err(format!(
                "unknown family {other:?} (expected chordal, bipartite or filtered-random)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("n must be at least 1")]
    Empty,
    #[error("density must lie in [0, 1], got {0}")]
    Density(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("no graph in class A after {0} samples")]
    Exhausted(usize),
}

/// Rejection attempts before filtered-random gives up.
pub const MAX_SAMPLES: usize = 1_000_000;

/// A graph of the family on `n` vertices. Same arguments, same graph.
pub fn generate(family: Family, n: usize, density: f64, seed: u64) -> Result<Graph, GenerateError> {
    if n == 0 {
        return Err(GenerateError::Empty);
    }
    if !(0.0..=1.0).contains(&density) {
        return Err(GenerateError::Density(density.to_string()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match family {
        Family::Chordal => Ok(chordal(n, density, &mut rng)),
        Family::Bipartite => Ok(bipartite(n, density, &mut rng)),
        Family::FilteredRandom => filtered_random(n, density, &mut rng),
    }
}

fn build(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::new(n, edges).expect("generated edges are valid")
}

/// Vertices are random intervals of `[0, 1 + density]` with length at most
/// `density`, added in order of left end. The earlier neighbors of a new
/// vertex all contain its left end, so they form a clique and the new vertex
/// is simplicial. The fraction of adjacent pairs stays roughly constant as
/// `n` grows. Ids are shuffled so that construction order is hidden.
fn chordal(n: usize, density: f64, rng: &mut ChaCha8Rng) -> Graph {
    let mut intervals: Vec<(f64, f64)> = (0..n)
        .map(|_| {
            let left = rng.gen::<f64>();
            (left, left + density * rng.gen::<f64>())
        })
        .collect();
    intervals.sort_by(|p, q| p.partial_cmp(q).expect("finite endpoints"));
    let mut label: Vec<usize> = (0..n).collect();
    label.shuffle(rng);
    let mut edges = Vec::new();
    let mut open: Vec<usize> = Vec::new();
    for (v, &(left, _)) in intervals.iter().enumerate() {
        open.retain(|&u| intervals[u].1 >= left);
        edges.extend(open.iter().map(|&u| (label[u], label[v])));
        open.push(v);
    }
    build(n, &edges)
}

fn bipartite(n: usize, density: f64, rng: &mut ChaCha8Rng) -> Graph {
    let side: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if side[u] != side[v] && rng.gen_bool(density) {
                edges.push((u, v));
            }
        }
    }
    build(n, &edges)
}

fn filtered_random(n: usize, density: f64, rng: &mut ChaCha8Rng) -> Result<Graph, GenerateError> {
    let budget = OracleBudget::default();
    if n > budget.max_n {
        return Err(OracleError::BudgetExceeded {
            n,
            max: budget.max_n,
        }
        .into());
    }
    for _ in 0..MAX_SAMPLES {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(density) {
                    edges.push((u, v));
                }
            }
        }
        let graph = build(n, &edges);
        if is_artemis(&graph)?.0 {
            return Ok(graph);
        }
    }
    Err(GenerateError::Exhausted(MAX_SAMPLES))
}
