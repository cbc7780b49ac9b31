//! Exponential-time reference implementations of every structural
//! definition the engine relies on.
//!
//! These never share code paths with the engine: they work on bit-mask
//! adjacency and exhaustive enumeration, and refuse inputs beyond their
//! budget instead of running unbounded.

mod exact;
mod paths;
mod sets;
mod structures;

use crate::error::OracleError;
use crate::graph::Graph;

pub use exact::{chromatic_number_exact, fonlupt_uhry_check, max_clique_exact};
pub use paths::{enumerate_chordless_paths, is_even_pair_exact, is_special_even_pair_exact};
pub use sets::{
    brute_maximal_interesting_check, brute_minimal_outer_path_check, enumerate_outer_paths,
    has_outer_path_by_components, is_interesting, maximal_interesting_exhaustive, OuterPathVerdict,
};
pub use structures::{
    find_antihole, find_odd_hole, find_prism, is_artemis, verify_witness, StructureKind,
    StructureWitness,
};

/// Limits past which an oracle refuses to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    /// Cap for subset and path enumeration.
    pub max_n: usize,
    /// Cap for the branch-and-bound chromatic number and clique number.
    pub max_n_exact: usize,
    pub max_paths: usize,
}

impl Default for OracleBudget {
    fn default() -> Self {
        OracleBudget {
            max_n: 12,
            max_n_exact: 16,
            max_paths: 1_000_000,
        }
    }
}

impl OracleBudget {
    pub(crate) fn admit(&self, graph: &Graph) -> Result<(), OracleError> {
        admit(graph.n(), self.max_n)
    }

    pub(crate) fn admit_exact(&self, graph: &Graph) -> Result<(), OracleError> {
        admit(graph.n(), self.max_n_exact)
    }
}

fn admit(n: usize, max: usize) -> Result<(), OracleError> {
    if n > max {
        Err(OracleError::BudgetExceeded { n, max })
    } else {
        Ok(())
    }
}

/// Bit-mask adjacency for graphs of at most 32 vertices.
#[derive(Clone, Debug)]
pub(crate) struct Masks {
    pub n: usize,
    pub adj: Vec<u32>,
}

impl Masks {
    pub fn new(graph: &Graph) -> Masks {
        assert!(graph.n() <= 32, "mask oracles handle at most 32 vertices");
        let n = graph.n();
        let adj = (0..n)
            .map(|u| {
                (0..n)
                    .filter(|&v| graph.adjacent(u, v))
                    .fold(0u32, |acc, v| acc | 1 << v)
            })
            .collect();
        Masks { n, adj }
    }

    pub fn complement(&self) -> Masks {
        let all = self.all();
        Masks {
            n: self.n,
            adj: (0..self.n)
                .map(|v| all & !self.adj[v] & !(1 << v))
                .collect(),
        }
    }

    pub fn all(&self) -> u32 {
        if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        }
    }

    #[inline]
    pub fn sees(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn is_clique(&self, set: u32) -> bool {
        bits(set).all(|v| self.adj[v] & set == set & !(1 << v))
    }

    /// Is `G[set]` connected? The empty set counts as connected.
    pub fn is_connected(&self, set: u32) -> bool {
        if set == 0 {
            return true;
        }
        let mut reached = 1u32 << set.trailing_zeros();
        loop {
            let grown = bits(reached).fold(reached, |acc, v| acc | (self.adj[v] & set));
            if grown == reached {
                return reached == set;
            }
            reached = grown;
        }
    }

    /// Components of `G[set]`, as masks in order of smallest member.
    pub fn components(&self, set: u32) -> Vec<u32> {
        let mut left = set;
        let mut out = Vec::new();
        while left != 0 {
            let mut comp = 1u32 << left.trailing_zeros();
            loop {
                let grown = bits(comp).fold(comp, |acc, v| acc | (self.adj[v] & set));
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            out.push(comp);
            left &= !comp;
        }
        out
    }

    /// `C(set)`.
    pub fn common_complete(&self, set: u32) -> u32 {
        bits(set).fold(self.all(), |acc, v| acc & self.adj[v]) & !set
    }

    /// `N(set)`.
    pub fn neighborhood(&self, set: u32) -> u32 {
        bits(set).fold(0, |acc, v| acc | self.adj[v]) & !set
    }
}

/// Members of a mask, ascending.
pub(crate) fn bits(mut mask: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

pub(crate) fn mask_of(vertices: impl IntoIterator<Item = usize>) -> u32 {
    vertices.into_iter().fold(0, |acc, v| acc | 1 << v)
}
