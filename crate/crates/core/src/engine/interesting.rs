use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Outcome of the maximal-interesting-set search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InterestingSetResult {
    /// `t` is a maximal interesting set and `c` its set of `t`-complete
    /// vertices (inside the searched view).
    MaximalInteresting { t: VertexSet, c: VertexSet },
    /// Every vertex is simplicial; the parts are the components, ordered by
    /// smallest member.
    DisjointCliques { cliques: Vec<VertexSet> },
}

/// The four-way partition maintained while `T` grows.
#[derive(Clone, Debug)]
pub struct InterestingSearchState {
    pub t: VertexSet,
    pub c: VertexSet,
    pub u: VertexSet,
    pub z: VertexSet,
}

impl InterestingSearchState {
    fn start(graph: &Graph, domain: &VertexSet, seed: usize, ops: &mut u64) -> Self {
        let n = graph.n();
        let mut t = VertexSet::new(n);
        t.insert(seed);
        let mut c = VertexSet::new(n);
        for &w in graph.neighbors(seed) {
            *ops += 1;
            if domain.contains(w) {
                c.insert(w);
            }
        }
        let mut u = domain.difference(&c);
        u.remove(seed);
        InterestingSearchState {
            t,
            c,
            u,
            z: VertexSet::new(n),
        }
    }

    /// The four sets are pairwise disjoint and cover `domain`.
    pub fn is_partition_of(&self, domain: &VertexSet) -> bool {
        let parts = [&self.t, &self.c, &self.u, &self.z];
        let total: usize = parts.iter().map(|s| s.len()).sum();
        let mut all = self.t.union(&self.c);
        all.union_with(&self.u);
        all.union_with(&self.z);
        total == all.len() && &all == domain
    }
}

/// Finds a maximal interesting set of `G`, or reports that `G` is a
/// disjoint union of cliques.
pub fn find_interesting(graph: &Graph) -> InterestingSetResult {
    let mut ops = 0;
    find_interesting_in(graph, &graph.vertex_set(), &mut ops).0
}

/// [`find_interesting`] on the view `G[domain]`. Also returns the edge count
/// of the view, which the first step computes anyway.
pub fn find_interesting_in(
    graph: &Graph,
    domain: &VertexSet,
    ops: &mut u64,
) -> (InterestingSetResult, usize) {
    let n = graph.n();
    let mut degree = vec![0usize; n];
    let mut degree_sum = 0;
    for v in domain {
        *ops += 1;
        for &w in graph.neighbors(v) {
            *ops += 1;
            if domain.contains(w) {
                degree[v] += 1;
            }
        }
        degree_sum += degree[v];
    }
    let edges = degree_sum / 2;

    let components = graph.components(domain);
    *ops += (domain.len() + degree_sum) as u64;
    let mut start = None;
    for comp in &components {
        let size = comp.len();
        if let Some(u) = comp.iter().find(|&u| degree[u] + 1 < size) {
            start = Some(start.map_or(u, |s: usize| s.min(u)));
        }
    }
    let Some(start) = start else {
        return (
            InterestingSetResult::DisjointCliques {
                cliques: components,
            },
            edges,
        );
    };

    let seed = non_simplicial_near(graph, domain, start, ops);
    let mut state = InterestingSearchState::start(graph, domain, seed, ops);
    let mut in_cap = VertexSet::new(n);
    let mut cap = Vec::new();
    while let Some(u) = state.u.first() {
        state.u.remove(u);
        cap.clear();
        for &w in graph.neighbors(u) {
            *ops += 1;
            if state.c.contains(w) {
                cap.push(w);
                in_cap.insert(w);
            }
        }
        let clique = cap.iter().all(|&w| {
            let inside = graph
                .neighbors(w)
                .iter()
                .filter(|&&x| in_cap.contains(x))
                .count();
            *ops += graph.degree(w) as u64;
            inside + 1 == cap.len()
        });
        if clique {
            state.z.insert(u);
        } else {
            state.t.insert(u);
            for v in state.c.iter().collect::<Vec<_>>() {
                *ops += 1;
                if !in_cap.contains(v) {
                    state.c.remove(v);
                    state.u.insert(v);
                }
            }
        }
        for &w in &cap {
            in_cap.remove(w);
        }
    }
    debug_assert!(state.is_partition_of(domain));
    (
        InterestingSetResult::MaximalInteresting {
            t: state.t,
            c: state.c,
        },
        edges,
    )
}

/// BFS from `start` (a vertex missing part of its component): the parent of
/// the smallest vertex at distance two is non-simplicial.
fn non_simplicial_near(graph: &Graph, domain: &VertexSet, start: usize, ops: &mut u64) -> usize {
    let n = graph.n();
    let mut parent = vec![usize::MAX; n];
    let mut first_level = VertexSet::new(n);
    first_level.insert(start);
    for &w in graph.neighbors(start) {
        *ops += 1;
        if domain.contains(w) {
            first_level.insert(w);
        }
    }
    let mut best: Option<usize> = None;
    for v in first_level.iter().filter(|&v| v != start) {
        *ops += 1;
        for &w in graph.neighbors(v) {
            *ops += 1;
            if domain.contains(w) && !first_level.contains(w) && parent[w] == usize::MAX {
                parent[w] = v;
                best = Some(best.map_or(w, |b| b.min(w)));
            }
        }
    }
    let v = best.expect("a vertex missing part of its component has one at distance two");
    parent[v]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn interesting(graph: &Graph) -> (Vec<usize>, Vec<usize>) {
        match find_interesting(graph) {
            InterestingSetResult::MaximalInteresting { t, c } => (t.to_vec(), c.to_vec()),
            other => panic!("expected an interesting set, got {other:?}"),
        }
    }

    #[test]
    fn disjoint_cliques() {
        let g = Graph::new(5, &[(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        let InterestingSetResult::DisjointCliques { cliques } = find_interesting(&g) else {
            panic!("K3 + K2 has no interesting set");
        };
        assert_eq!(
            cliques.iter().map(VertexSet::to_vec).collect::<Vec<_>>(),
            vec![vec![0, 1, 2], vec![3, 4]]
        );
    }

    #[test]
    fn hand_traces() {
        assert_eq!(interesting(&Graph::path(4)), (vec![1], vec![0, 2]));
        assert_eq!(interesting(&Graph::cycle(6)), (vec![1], vec![0, 2]));
        assert_eq!(interesting(&Graph::cycle(4)), (vec![1, 3], vec![0, 2]));
    }

    #[test]
    fn view_restricts_to_domain() {
        // Inside {0,1,2} of P4 the view is P3: T={1}, C={0,2}.
        let g = Graph::path(4);
        let mut ops = 0;
        let (res, m) = find_interesting_in(&g, &g.set_of([0, 1, 2]), &mut ops);
        assert_eq!(m, 2);
        assert_eq!(
            res,
            InterestingSetResult::MaximalInteresting {
                t: g.set_of([1]),
                c: g.set_of([0, 2])
            }
        );
        assert!(ops > 0);
        let (res, _) = find_interesting_in(&g, &g.set_of([0, 2]), &mut ops);
        assert!(
            matches!(res, InterestingSetResult::DisjointCliques { cliques } if cliques.len() == 2)
        );
    }
}
