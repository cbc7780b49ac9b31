use crate::engine::OuterPath;
use crate::error::EngineError;
use crate::graph::Graph;
use crate::search::bfs_from_to_counted;
use crate::vertex_set::VertexSet;

/// Working sets of the even-pair extraction.
#[derive(Clone, Debug)]
pub struct EvenPairState {
    /// `C(T)`-vertices that see `z1` and miss `y`.
    pub a_set: VertexSet,
    /// `C(T)`-vertices that see `zp` and miss `x`.
    pub b_set: VertexSet,
    /// Vertices of `N(A)` reached from `B` outside `T ∪ A`.
    pub k_set: VertexSet,
    /// Vertices of `N(B)` reached from `A` outside `T ∪ B`.
    pub l_set: VertexSet,
    pub a: usize,
    pub b: usize,
}

/// Extracts a special even pair from a minimal `T`-outer path.
pub fn find_even_pair(
    graph: &Graph,
    t: &VertexSet,
    c: &VertexSet,
    path: &OuterPath,
) -> Result<(usize, usize), EngineError> {
    let mut ops = 0;
    find_even_pair_in(graph, &graph.vertex_set(), t, c, path, &mut ops).map(|s| (s.a, s.b))
}

/// [`find_even_pair`] on the view `G[domain]`, returning the full state.
pub fn find_even_pair_in(
    graph: &Graph,
    domain: &VertexSet,
    t: &VertexSet,
    c: &VertexSet,
    path: &OuterPath,
    ops: &mut u64,
) -> Result<EvenPairState, EngineError> {
    if path.len() < 4 || path.len() % 2 == 1 {
        return Err(EngineError::NotInClassA(format!(
            "outer path {:?} has length {}; minimal outer paths have even length at least 4",
            path.vertices,
            path.len()
        )));
    }
    let n = graph.n();
    let (x, y) = (path.x(), path.y());
    let (v, w) = (path.vertices[1], path.vertices[path.vertices.len() - 2]);

    let a_set = side(graph, c, v, y, ops);
    let b_set = side(graph, c, w, x, ops);
    if !a_set.contains(x) || !b_set.contains(y) {
        return Err(EngineError::NotInClassA(format!(
            "outer path endpoints {x},{y} fall outside the sets A={a_set:?}, B={b_set:?}"
        )));
    }

    let (k_set, a) = pick_maximal(graph, domain, t, &a_set, &b_set, ops)?;
    let (l_set, b) = pick_maximal(graph, domain, t, &b_set, &a_set, ops)?;
    debug_assert!(a < n && b < n);
    Ok(EvenPairState {
        a_set,
        b_set,
        k_set,
        l_set,
        a,
        b,
    })
}

/// `(N(near) ∩ C) ∖ N(far)`.
fn side(graph: &Graph, c: &VertexSet, near: usize, far: usize, ops: &mut u64) -> VertexSet {
    let mut out = VertexSet::new(graph.n());
    for &u in graph.neighbors(near) {
        *ops += 1;
        if c.contains(u) {
            out.insert(u);
        }
    }
    for &u in graph.neighbors(far) {
        *ops += 1;
        out.remove(u);
    }
    out
}

/// Searches from `other` to `N(own)` outside `T ∪ own`, then returns the
/// reached set and the smallest vertex of `own` adjacent to all of it.
fn pick_maximal(
    graph: &Graph,
    domain: &VertexSet,
    t: &VertexSet,
    own: &VertexSet,
    other: &VertexSet,
    ops: &mut u64,
) -> Result<(VertexSet, usize), EngineError> {
    let mut search_domain = domain.difference(t);
    search_domain.difference_with(own);
    let mut frontier = graph.neighborhood(own);
    *ops += own.iter().map(|u| graph.degree(u) as u64).sum::<u64>();
    frontier.intersect_with(&search_domain);
    if !frontier.is_disjoint(other) {
        return Err(EngineError::NotInClassA(format!(
            "sets {own:?} and {other:?} are joined by an edge"
        )));
    }
    let forest = bfs_from_to_counted(graph, &search_domain, other, &frontier, ops);
    let reached = forest.reached_targets;
    let target = reached.len();
    let mut counter = vec![0usize; graph.n()];
    for k in &reached {
        for &u in graph.neighbors(k) {
            *ops += 1;
            if own.contains(u) {
                counter[u] += 1;
            }
        }
    }
    let pick = own.iter().find(|&u| counter[u] == target).ok_or_else(|| {
        EngineError::NotInClassA(format!(
            "no vertex of {own:?} sees all of the reached set {reached:?}"
        ))
    })?;
    Ok((reached, pick))
}
