//! Generalized handles and their correspondence with maximal interesting
//! sets of the complement.
//!
//! This is a validation path only; the coloring engine never uses it.

use thiserror::Error;

use crate::error::OracleError;
use crate::graph::Graph;
use crate::oracles::{brute_maximal_interesting_check, is_interesting};
use crate::vertex_set::VertexSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HandleError {
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error("handle search did not settle within {cap} iterations")]
    IterationCap { cap: usize },
    #[error("the complete set of T has no co-connected part with two or more vertices")]
    NoCoComponent,
}

/// A vertex set `h` containing an edge, with co-handle `j`: a component of
/// `G - N(h)` other than `h` with `N(j) = N(h)`, and every vertex of
/// `N(h)` seeing an end of every edge inside `h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedHandle {
    pub h: VertexSet,
    pub j: VertexSet,
    /// `N(h)`.
    pub n: VertexSet,
    /// Whether `G[h]` is connected, i.e. whether this is a handle in the
    /// classical sense.
    pub connected: bool,
    /// Number of re-anchoring steps the search took.
    pub iterations: usize,
}

/// Smallest `v` in `candidates`, then lexicographically smallest edge of
/// `G[inside]`, such that `v` sees neither end of the edge.
fn missed_edge(
    graph: &Graph,
    candidates: &VertexSet,
    inside: &VertexSet,
) -> Option<(usize, (usize, usize))> {
    let edges: Vec<(usize, usize)> = inside
        .iter()
        .flat_map(|p| {
            graph
                .neighbors(p)
                .iter()
                .filter(move |&&q| q > p && inside.contains(q))
                .map(move |&q| (p, q))
        })
        .collect();
    candidates.iter().find_map(|v| {
        edges
            .iter()
            .find(|&&(p, q)| v != p && v != q && !graph.adjacent(v, p) && !graph.adjacent(v, q))
            .map(|&e| (v, e))
    })
}

/// `(J, H)` anchored at `v` and the edge `e`: `J` is the component of
/// `G - N(e)` containing `v`, and `H = V - (J ∪ N(J))`.
fn anchor(graph: &Graph, v: usize, (p, q): (usize, usize)) -> (VertexSet, VertexSet) {
    let edge = graph.set_of([p, q]);
    let rest = graph.neighborhood(&edge).complement();
    let j = graph
        .components(&rest)
        .into_iter()
        .find(|comp| comp.contains(v))
        .expect("v lies outside N(e)");
    let mut h = j.union(&graph.neighborhood(&j));
    h = h.complement();
    (j, h)
}

/// Searches for a generalized handle by repeatedly re-anchoring on a vertex
/// of `N(H)` that misses an edge of `H`. Returns `Ok(None)` when no vertex
/// misses any edge.
pub fn find_generalized_handle(graph: &Graph) -> Result<Option<GeneralizedHandle>, HandleError> {
    let all = graph.vertex_set();
    let Some((v, e)) = missed_edge(graph, &all, &all) else {
        return Ok(None);
    };
    let (mut j, mut h) = anchor(graph, v, e);
    let cap = graph.n() * graph.n();
    let mut iterations = 0;
    loop {
        let n_h = graph.neighborhood(&h);
        let Some((v, e)) = missed_edge(graph, &n_h, &h) else {
            let connected = graph.components(&h).len() == 1;
            return Ok(Some(GeneralizedHandle {
                h,
                j,
                n: n_h,
                connected,
                iterations,
            }));
        };
        iterations += 1;
        if iterations > cap {
            return Err(HandleError::IterationCap { cap });
        }
        (j, h) = anchor(graph, v, e);
    }
}

/// Checks every condition of the generalized-handle definition.
pub fn is_generalized_handle(graph: &Graph, h: &VertexSet, j: &VertexSet) -> bool {
    let has_edge = h
        .iter()
        .any(|p| graph.neighbors(p).iter().any(|&q| h.contains(q)));
    if !has_edge || j.is_empty() || h == j {
        return false;
    }
    let n_h = graph.neighborhood(h);
    let rest = n_h.complement();
    let j_is_component = graph.components(&rest).iter().any(|comp| comp == j);
    j_is_component && graph.neighborhood(j) == n_h && missed_edge(graph, &n_h, h).is_none()
}

/// The co-handle found is a maximal interesting set of the complement.
pub fn cohandle_is_max_interesting(
    graph: &Graph,
    handle: &GeneralizedHandle,
) -> Result<bool, HandleError> {
    Ok(brute_maximal_interesting_check(
        &graph.complement(),
        &handle.j,
    )?)
}

/// A handle's co-handle is an interesting set of the complement.
pub fn cohandle_is_interesting(
    graph: &Graph,
    h: &VertexSet,
    j: &VertexSet,
) -> Result<bool, HandleError> {
    Ok(is_generalized_handle(graph, h, j) && is_interesting(&graph.complement(), j)?)
}

/// For a maximal interesting set `t`, the first co-connected part `H` of
/// `G[C(t)]` with at least two vertices is a handle of the complement with
/// co-handle `t`.
pub fn interesting_gives_handle_check(graph: &Graph, t: &VertexSet) -> Result<bool, HandleError> {
    let c = graph.common_complete(t);
    let co = graph.complement();
    let h = co
        .components(&c)
        .into_iter()
        .find(|part| part.len() >= 2)
        .ok_or(HandleError::NoCoComponent)?;
    Ok(co.components(&h).len() == 1 && is_generalized_handle(&co, &h, t))
}
