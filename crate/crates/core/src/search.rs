//! Breadth-first search from a source set to a target set.

use std::collections::VecDeque;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// The search tree built by [`bfs_from_to`].
#[derive(Clone, Debug)]
pub struct SearchForest {
    /// `parent[v]` is `Some(p)` for a reached non-root vertex.
    pub parent: Vec<Option<usize>>,
    /// Every vertex of the forest, roots included.
    pub reached: VertexSet,
    /// Expanded vertices in dequeue order.
    pub order: Vec<usize>,
    pub reached_targets: VertexSet,
}

impl SearchForest {
    /// Vertices from the root of `v`'s tree down to `v`, or `None` if `v`
    /// was not reached.
    pub fn path_to(&self, v: usize) -> Option<Vec<usize>> {
        if !self.reached.contains(v) {
            return None;
        }
        let mut path = vec![v];
        let mut cur = v;
        while let Some(p) = self.parent[cur] {
            path.push(p);
            cur = p;
        }
        path.reverse();
        Some(path)
    }
}

/// BFS restricted to `domain`: all of `sources` form the root level, and
/// vertices of `targets` are recorded when first seen but never expanded.
pub fn bfs_from_to(
    graph: &Graph,
    domain: &VertexSet,
    sources: &VertexSet,
    targets: &VertexSet,
) -> SearchForest {
    let mut ops = 0;
    bfs_from_to_counted(graph, domain, sources, targets, &mut ops)
}

pub(crate) fn bfs_from_to_counted(
    graph: &Graph,
    domain: &VertexSet,
    sources: &VertexSet,
    targets: &VertexSet,
    ops: &mut u64,
) -> SearchForest {
    debug_assert!(sources.is_disjoint(targets));
    let n = graph.n();
    let mut forest = SearchForest {
        parent: vec![None; n],
        reached: VertexSet::new(n),
        order: Vec::new(),
        reached_targets: VertexSet::new(n),
    };
    let mut queue = VecDeque::new();
    for x in sources {
        if domain.contains(x) {
            forest.reached.insert(x);
            queue.push_back(x);
        }
    }
    while let Some(u) = queue.pop_front() {
        *ops += 1;
        forest.order.push(u);
        for &w in graph.neighbors(u) {
            *ops += 1;
            if !domain.contains(w) || !forest.reached.insert(w) {
                continue;
            }
            forest.parent[w] = Some(u);
            if targets.contains(w) {
                forest.reached_targets.insert(w);
            } else {
                queue.push_back(w);
            }
        }
    }
    forest
}
