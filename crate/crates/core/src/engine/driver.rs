use std::borrow::Cow;

use crate::engine::coloring::{greedy_color_cliques, lift_coloring, Coloring, ContractionTrace};
use crate::engine::even_pair::find_even_pair_in;
use crate::engine::interesting::{find_interesting_in, InterestingSetResult};
use crate::engine::outer_path::{find_outer_path_in, OuterPath};
use crate::engine::OpCounters;
use crate::error::EngineError;
use crate::graph::{ContractionStep, Graph};
use crate::vertex_set::VertexSet;

/// One level of the nested search. Sets are in the ids of the graph the
/// search was started on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainLevel {
    /// Vertices of this level's subgraph (`V` at the top, then `C_{i-1}`).
    pub domain: VertexSet,
    pub t: VertexSet,
    /// `C(T_i)` inside `domain`.
    pub c: VertexSet,
    pub n: usize,
    pub m: usize,
    pub outer_path: Option<OuterPath>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PairSource {
    /// Extracted from a minimal outer path at the deepest level.
    OuterPath,
    /// Two vertices from different cliques of the deepest level, which is a
    /// disjoint union of at least two cliques.
    BottomCliques,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecialPairOutcome {
    Pair {
        a: usize,
        b: usize,
        source: PairSource,
        chain: Vec<ChainLevel>,
    },
    GraphIsDisjointCliques {
        cliques: Vec<VertexSet>,
    },
}

impl SpecialPairOutcome {
    pub fn pair(&self) -> Option<(usize, usize)> {
        match self {
            SpecialPairOutcome::Pair { a, b, .. } => Some((*a, *b)),
            SpecialPairOutcome::GraphIsDisjointCliques { .. } => None,
        }
    }
}

/// A level's graph: the caller's graph or a materialized induced subgraph,
/// with an active vertex set.
struct Level<'g> {
    graph: Cow<'g, Graph>,
    domain: VertexSet,
    /// Level ids to top ids; `None` while the level graph is the top graph.
    to_top: Option<Vec<usize>>,
}

impl<'g> Level<'g> {
    fn top(&self, v: usize) -> usize {
        self.to_top.as_ref().map_or(v, |map| map[v])
    }

    fn lift(&self, s: &VertexSet, top_n: usize) -> VertexSet {
        match &self.to_top {
            None => s.clone(),
            Some(map) => VertexSet::from_iter_with_capacity(top_n, s.iter().map(|v| map[v])),
        }
    }

    /// Restricts the view to `next`, materializing `G[next]` once it is
    /// less than half of the current view.
    fn descend(self, next: VertexSet, ops: &mut u64) -> Level<'g> {
        if 2 * next.len() >= self.domain.len() {
            return Level {
                domain: next,
                ..self
            };
        }
        *ops += next
            .iter()
            .map(|v| self.graph.degree(v) as u64 + 1)
            .sum::<u64>();
        let (sub, to_level) = self.graph.induced(&next);
        let to_top = to_level.iter().map(|&v| self.top(v)).collect();
        Level {
            domain: sub.vertex_set(),
            graph: Cow::Owned(sub),
            to_top: Some(to_top),
        }
    }
}

/// Finds a special even pair of a graph in class A, or reports that the
/// graph is a disjoint union of cliques.
pub fn find_special_even_pair(graph: &Graph) -> Result<SpecialPairOutcome, EngineError> {
    let mut counters = OpCounters::default();
    find_special_even_pair_counted(graph, &mut counters)
}

pub fn find_special_even_pair_counted(
    graph: &Graph,
    counters: &mut OpCounters,
) -> Result<SpecialPairOutcome, EngineError> {
    let top_n = graph.n();
    let mut level = Level {
        graph: Cow::Borrowed(graph),
        domain: graph.vertex_set(),
        to_top: None,
    };
    let mut chain: Vec<ChainLevel> = Vec::new();
    loop {
        let (result, m) =
            find_interesting_in(&level.graph, &level.domain, &mut counters.interesting);
        let (t, c) = match result {
            InterestingSetResult::DisjointCliques { cliques } if chain.is_empty() => {
                return Ok(SpecialPairOutcome::GraphIsDisjointCliques { cliques });
            }
            InterestingSetResult::DisjointCliques { cliques } => {
                let [first, second, ..] = cliques.as_slice() else {
                    return Err(EngineError::NotInClassA(format!(
                        "level {} set of complete vertices is a clique",
                        chain.len()
                    )));
                };
                let a = level.top(first.first().expect("components are non-empty"));
                let b = level.top(second.first().expect("components are non-empty"));
                return Ok(SpecialPairOutcome::Pair {
                    a,
                    b,
                    source: PairSource::BottomCliques,
                    chain,
                });
            }
            InterestingSetResult::MaximalInteresting { t, c } => (t, c),
        };
        let path = find_outer_path_in(
            &level.graph,
            &level.domain,
            &t,
            &c,
            &mut counters.outer_path,
        );
        chain.push(ChainLevel {
            domain: level.lift(&level.domain, top_n),
            t: level.lift(&t, top_n),
            c: level.lift(&c, top_n),
            n: level.domain.len(),
            m,
            outer_path: path.as_ref().map(|p| OuterPath {
                vertices: p.vertices.iter().map(|&v| level.top(v)).collect(),
            }),
        });
        if let Some(path) = path {
            let state = find_even_pair_in(
                &level.graph,
                &level.domain,
                &t,
                &c,
                &path,
                &mut counters.even_pair,
            )?;
            return Ok(SpecialPairOutcome::Pair {
                a: level.top(state.a),
                b: level.top(state.b),
                source: PairSource::OuterPath,
                chain,
            });
        }
        level = level.descend(c, &mut counters.interesting);
    }
}

/// Everything the driver observed about one contraction.
pub struct ContractionEvent<'a> {
    pub index: usize,
    pub before: &'a Graph,
    pub after: &'a Graph,
    pub step: &'a ContractionStep,
    pub source: PairSource,
    pub chain: &'a [ChainLevel],
}

#[derive(Clone, Debug)]
pub struct ColoringRun {
    pub coloring: Coloring,
    pub trace: ContractionTrace,
    /// Clique partition of the final, fully contracted graph.
    pub residue: Vec<VertexSet>,
    pub counters: OpCounters,
}

/// Colors a graph of class A with `ω(G)` colors.
pub fn color_artemis(graph: &Graph) -> Result<(Coloring, ContractionTrace), EngineError> {
    color_artemis_with(graph, |_| {}).map(|run| (run.coloring, run.trace))
}

/// [`color_artemis`] with a callback after every contraction and the full
/// run record.
pub fn color_artemis_with<F>(graph: &Graph, mut observe: F) -> Result<ColoringRun, EngineError>
where
    F: FnMut(&ContractionEvent<'_>),
{
    let mut trace = ContractionTrace::new(graph.n());
    let mut counters = OpCounters::default();
    let mut current = Cow::Borrowed(graph);
    let residue = loop {
        match find_special_even_pair_counted(&current, &mut counters)? {
            SpecialPairOutcome::GraphIsDisjointCliques { cliques } => break cliques,
            SpecialPairOutcome::Pair {
                a,
                b,
                source,
                chain,
            } => {
                let (next, step) = current.contract(a, b)?;
                observe(&ContractionEvent {
                    index: trace.len(),
                    before: &current,
                    after: &next,
                    step: &step,
                    source,
                    chain: &chain,
                });
                trace.steps.push(step);
                trace.chain_depths.push(chain.len().max(1));
                current = Cow::Owned(next);
            }
        }
    };
    let coloring = lift_coloring(&trace, &greedy_color_cliques(&residue))?;
    coloring.check_proper(graph)?;
    Ok(ColoringRun {
        coloring,
        trace,
        residue,
        counters,
    })
}
