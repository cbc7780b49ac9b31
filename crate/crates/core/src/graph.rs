//! Immutable simple undirected graphs and the set primitives the coloring
//! engine is built from.

use std::collections::VecDeque;

use crate::error::GraphError;
use crate::vertex_set::VertexSet;

/// Graphs with at most this many vertices keep a bit matrix for O(1)
/// adjacency tests.
pub const DEFAULT_MATRIX_THRESHOLD: usize = 4096;

/// A simple undirected graph on the vertices `0..n`.
///
/// Neighbor lists are sorted ascending. Below the matrix threshold the graph
/// also stores one bit row per vertex.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<usize>>,
    rows: Option<Vec<VertexSet>>,
    matrix_threshold: usize,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.adj == other.adj
    }
}

impl Eq for Graph {}

/// Bookkeeping for one contraction `G -> G/ab`.
///
/// The larger of `a` and `b` is deleted; every id above it shifts down by
/// one and both endpoints map to `merged`, the id of the smaller one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractionStep {
    pub a: usize,
    pub b: usize,
    pub merged: usize,
    /// Old id to new id, total over the pre-contraction vertex range.
    pub vertex_map: Vec<usize>,
}

impl ContractionStep {
    pub fn pre_n(&self) -> usize {
        self.vertex_map.len()
    }

    pub fn post_n(&self) -> usize {
        self.vertex_map.len() - 1
    }
}

impl Graph {
    /// Builds a graph on `n` vertices, ignoring duplicate edges.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        Graph::with_threshold(n, edges, DEFAULT_MATRIX_THRESHOLD)
    }

    pub fn with_threshold(
        n: usize,
        edges: &[(usize, usize)],
        matrix_threshold: usize,
    ) -> Result<Graph, GraphError> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop { vertex: u });
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        Ok(Graph::from_lists(adj, matrix_threshold))
    }

    /// Sorts, deduplicates and indexes raw neighbor lists. The lists must
    /// already be symmetric and loop-free.
    fn from_lists(mut adj: Vec<Vec<usize>>, matrix_threshold: usize) -> Graph {
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        let n = adj.len();
        let m = adj.iter().map(Vec::len).sum::<usize>() / 2;
        let rows = (n <= matrix_threshold).then(|| {
            adj.iter()
                .map(|list| VertexSet::from_iter_with_capacity(n, list.iter().copied()))
                .collect()
        });
        Graph {
            n,
            m,
            adj,
            rows,
            matrix_threshold,
        }
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_lists(vec![Vec::new(); n], DEFAULT_MATRIX_THRESHOLD)
    }

    pub fn complete(n: usize) -> Graph {
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| v != u).collect())
            .collect();
        Graph::from_lists(adj, DEFAULT_MATRIX_THRESHOLD)
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).expect("path edges are valid")
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::new(n, &edges).expect("cycle edges are valid")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    pub fn matrix_threshold(&self) -> usize {
        self.matrix_threshold
    }

    pub fn has_matrix(&self) -> bool {
        self.rows.is_some()
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        match &self.rows {
            Some(rows) => rows[u].contains(v),
            None => self.adj[u].binary_search(&v).is_ok(),
        }
    }

    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        match &self.rows {
            Some(rows) => rows[v].clone(),
            None => VertexSet::from_iter_with_capacity(self.n, self.adj[v].iter().copied()),
        }
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn empty_set(&self) -> VertexSet {
        VertexSet::new(self.n)
    }

    pub fn set_of<I: IntoIterator<Item = usize>>(&self, it: I) -> VertexSet {
        VertexSet::from_iter_with_capacity(self.n, it)
    }

    /// `G/ab`: removes `a` and `b` and adds one vertex adjacent to
    /// `N(a) ∪ N(b)`.
    pub fn contract(&self, a: usize, b: usize) -> Result<(Graph, ContractionStep), GraphError> {
        for v in [a, b] {
            if v >= self.n {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
        }
        if a == b {
            return Err(GraphError::SameVertex { vertex: a });
        }
        if self.adjacent(a, b) {
            return Err(GraphError::AdjacentPair { a, b });
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let vertex_map: Vec<usize> = (0..self.n)
            .map(|v| match v {
                v if v == hi => lo,
                v if v > hi => v - 1,
                v => v,
            })
            .collect();
        let mut adj = vec![Vec::new(); self.n - 1];
        for (u, list) in self.adj.iter().enumerate() {
            let nu = vertex_map[u];
            adj[nu].extend(list.iter().map(|&w| vertex_map[w]));
        }
        let graph = Graph::from_lists(adj, self.matrix_threshold);
        Ok((
            graph,
            ContractionStep {
                a,
                b,
                merged: lo,
                vertex_map,
            },
        ))
    }

    /// The complementary graph.
    pub fn complement(&self) -> Graph {
        let adj = (0..self.n)
            .map(|u| {
                (0..self.n)
                    .filter(|&v| v != u && !self.adjacent(u, v))
                    .collect()
            })
            .collect();
        Graph::from_lists(adj, self.matrix_threshold)
    }

    /// `G[S]` together with the map from new ids to old ids (ascending).
    pub fn induced(&self, subset: &VertexSet) -> (Graph, Vec<usize>) {
        let to_old = subset.to_vec();
        let mut to_new = vec![usize::MAX; self.n];
        for (i, &v) in to_old.iter().enumerate() {
            to_new[v] = i;
        }
        let adj = to_old
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| to_new[w] != usize::MAX)
                    .map(|&w| to_new[w])
                    .collect()
            })
            .collect();
        (Graph::from_lists(adj, self.matrix_threshold), to_old)
    }

    /// `C(T)`: vertices outside `T` adjacent to every vertex of `T`.
    pub fn common_complete(&self, t: &VertexSet) -> VertexSet {
        let mut members = t.iter();
        let Some(first) = members.next() else {
            // Every vertex is vacuously complete to the empty set.
            return self.vertex_set();
        };
        let mut c = self.neighbor_set(first);
        for v in members {
            match &self.rows {
                Some(rows) => c.intersect_with(&rows[v]),
                None => {
                    let keep = self.set_of(self.adj[v].iter().copied());
                    c.intersect_with(&keep);
                }
            }
        }
        c.difference_with(t);
        c
    }

    /// True iff every two members of `s` are adjacent. The empty set and
    /// singletons are cliques.
    pub fn is_clique(&self, s: &VertexSet) -> bool {
        let k = s.len();
        if k <= 1 {
            return true;
        }
        s.iter().all(|v| match &self.rows {
            Some(rows) => rows[v].intersection_len(s) == k - 1,
            None => {
                self.adj[v].len() >= k - 1
                    && self.adj[v].iter().filter(|&&w| s.contains(w)).count() == k - 1
            }
        })
    }

    /// Connected components of `G[S]`, ordered by smallest member.
    pub fn components(&self, s: &VertexSet) -> Vec<VertexSet> {
        let mut seen = VertexSet::new(self.n);
        let mut out = Vec::new();
        let mut queue = VecDeque::new();
        for root in s {
            if seen.contains(root) {
                continue;
            }
            let mut comp = VertexSet::new(self.n);
            seen.insert(root);
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                comp.insert(u);
                for &w in &self.adj[u] {
                    if s.contains(w) && seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    pub fn is_simplicial(&self, v: usize) -> bool {
        self.is_clique(&self.neighbor_set(v))
    }

    /// `N(X)`: vertices outside `X` with a neighbor in `X`.
    pub fn neighborhood(&self, x: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.n);
        for v in x {
            for &w in &self.adj[v] {
                out.insert(w);
            }
        }
        out.difference_with(x);
        out
    }

    /// Checks the adjacency invariants: symmetric, loop-free, sorted, and
    /// `m` equal to half the degree sum.
    pub fn check_invariants(&self) -> bool {
        let degree_sum: usize = self.adj.iter().map(Vec::len).sum();
        degree_sum == 2 * self.m
            && self.adj.iter().enumerate().all(|(u, list)| {
                list.windows(2).all(|w| w[0] < w[1])
                    && list
                        .iter()
                        .all(|&v| v != u && v < self.n && self.adj[v].binary_search(&u).is_ok())
            })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prism() -> Graph {
        Graph::new(
            6,
            &[
                (0, 1),
                (1, 2),
                (0, 2),
                (3, 4),
                (4, 5),
                (3, 5),
                (0, 3),
                (1, 4),
                (2, 5),
            ],
        )
        .unwrap()
    }

    #[test]
    fn construction_examples() {
        let p4 = Graph::new(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!((p4.n(), p4.m()), (4, 3));
        let k1 = Graph::new(1, &[]).unwrap();
        assert_eq!((k1.n(), k1.m()), (1, 0));
        assert_eq!(prism().m(), 9);
        let dup = Graph::new(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(dup.m(), 1);
        assert!(dup.check_invariants());
    }

    #[test]
    fn construction_rejects_bad_input() {
        assert_eq!(
            Graph::new(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
        assert_eq!(
            Graph::new(2, &[(1, 1)]),
            Err(GraphError::SelfLoop { vertex: 1 })
        );
    }

    #[test]
    fn contract_path_and_cycle() {
        let p4 = Graph::path(4);
        let (g, step) = p4.contract(0, 2).unwrap();
        assert_eq!((g.n(), g.m()), (3, 2));
        assert_eq!(step.merged, 0);
        assert_eq!(step.vertex_map, vec![0, 1, 0, 2]);
        assert_eq!(g.neighbors(0), &[1, 2]);

        let c6 = Graph::cycle(6);
        let (g, step) = c6.contract(0, 2).unwrap();
        assert_eq!(g.n(), 5);
        let merged = step.merged;
        let seen: Vec<usize> = [1, 3, 5].iter().map(|&v| step.vertex_map[v]).collect();
        assert_eq!(g.neighbors(merged), seen.as_slice());
        // merged - 3 - 4 - 5 is a 4-hole
        let hole = [
            merged,
            step.vertex_map[3],
            step.vertex_map[4],
            step.vertex_map[5],
        ];
        for i in 0..4 {
            assert!(g.adjacent(hole[i], hole[(i + 1) % 4]));
        }
        assert!(!g.adjacent(hole[0], hole[2]));
        assert!(!g.adjacent(hole[1], hole[3]));

        let (k1, _) = Graph::empty(2).contract(0, 1).unwrap();
        assert_eq!((k1.n(), k1.m()), (1, 0));
    }

    #[test]
    fn contract_rejects_edges() {
        assert_eq!(
            Graph::path(3).contract(0, 1),
            Err(GraphError::AdjacentPair { a: 0, b: 1 })
        );
        assert!(matches!(
            Graph::path(3).contract(1, 1),
            Err(GraphError::SameVertex { vertex: 1 })
        ));
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::complete(3).complement().m(), 0);
        // C5 is self-complementary under 0,2,4,1,3.
        let c5 = Graph::cycle(5);
        let co = c5.complement();
        let order = [0, 2, 4, 1, 3];
        for i in 0..5 {
            assert!(co.adjacent(order[i], order[(i + 1) % 5]));
        }
        assert_eq!(co.m(), 5);
        // Complement of C6: triangles {0,2,4}, {1,3,5} joined by 0-3, 1-4, 2-5.
        let co6 = Graph::cycle(6).complement();
        assert_eq!(co6.m(), 9);
        for (u, v) in [
            (0, 2),
            (2, 4),
            (0, 4),
            (1, 3),
            (3, 5),
            (1, 5),
            (0, 3),
            (1, 4),
            (2, 5),
        ] {
            assert!(co6.adjacent(u, v));
        }
    }

    #[test]
    fn induced_examples() {
        let c6 = Graph::cycle(6);
        let (p3, map) = c6.induced(&c6.set_of([0, 1, 2]));
        assert_eq!(p3, Graph::path(3));
        assert_eq!(map, vec![0, 1, 2]);
        let (same, _) = c6.induced(&c6.vertex_set());
        assert_eq!(same, c6);
        let (empty, map) = c6.induced(&c6.empty_set());
        assert_eq!(empty.n(), 0);
        assert!(map.is_empty());
    }

    #[test]
    fn common_complete_examples() {
        let p4 = Graph::path(4);
        assert_eq!(p4.common_complete(&p4.set_of([1])).to_vec(), vec![0, 2]);
        let k4 = Graph::complete(4);
        assert_eq!(k4.common_complete(&k4.set_of([0])).to_vec(), vec![1, 2, 3]);
        let c6 = Graph::cycle(6);
        assert!(c6.common_complete(&c6.set_of([0, 3])).is_empty());
    }

    #[test]
    fn clique_examples() {
        let p4 = Graph::path(4);
        assert!(p4.is_clique(&p4.empty_set()));
        assert!(!p4.is_clique(&p4.set_of([0, 2])));
        let g = prism();
        assert!(g.is_clique(&g.set_of([3, 4, 5])));
    }

    #[test]
    fn component_examples() {
        let c6 = Graph::cycle(6);
        let comps = c6.components(&c6.set_of([3, 4, 5]));
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].to_vec(), vec![3, 4, 5]);
        let g = Graph::new(5, &[(0, 1), (1, 2), (0, 2), (3, 4)]).unwrap();
        let comps = g.components(&g.vertex_set());
        assert_eq!(
            comps.iter().map(VertexSet::to_vec).collect::<Vec<_>>(),
            vec![vec![0, 1, 2], vec![3, 4]]
        );
        assert!(g.components(&g.empty_set()).is_empty());
    }

    #[test]
    fn simplicial_examples() {
        let p4 = Graph::path(4);
        assert!(p4.is_simplicial(0));
        assert!(!Graph::path(3).is_simplicial(1));
        let k5 = Graph::complete(5);
        assert!((0..5).all(|v| k5.is_simplicial(v)));
    }

    #[test]
    fn list_only_graph_agrees_with_matrix_graph() {
        let edges = [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)];
        let a = Graph::new(5, &edges).unwrap();
        let b = Graph::with_threshold(5, &edges, 0).unwrap();
        assert!(a.has_matrix() && !b.has_matrix());
        for u in 0..5 {
            for v in 0..5 {
                assert_eq!(a.adjacent(u, v), b.adjacent(u, v));
            }
        }
        let s = a.set_of([0, 1, 2]);
        assert_eq!(a.is_clique(&s), b.is_clique(&s));
        assert_eq!(
            a.common_complete(&a.set_of([1])),
            b.common_complete(&b.set_of([1]))
        );
    }
}
