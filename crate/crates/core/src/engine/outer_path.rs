use std::collections::VecDeque;

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A chordless path `x - z1 - ... - zp - y` with both ends in `C(T)` and its
/// interior outside `T ∪ C(T)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OuterPath {
    pub vertices: Vec<usize>,
}

impl OuterPath {
    pub fn x(&self) -> usize {
        self.vertices[0]
    }

    pub fn y(&self) -> usize {
        *self.vertices.last().expect("outer paths are non-empty")
    }

    pub fn interior(&self) -> &[usize] {
        &self.vertices[1..self.vertices.len() - 1]
    }

    /// Number of interior vertices.
    pub fn p(&self) -> usize {
        self.vertices.len() - 2
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.len() < 2
    }
}

/// State of the search from one root, exposed for inspection in tests.
#[derive(Clone, Debug)]
pub struct OuterSearchState {
    pub root: usize,
    /// Vertices of the search tree so far.
    pub reached: VertexSet,
    /// `reached ∩ C(T)`.
    pub m: VertexSet,
    pub marked: VertexSet,
    /// Trigger vertex and `M ∩ N(x)`, once `M` stops being a clique.
    pub trigger: Option<(usize, VertexSet)>,
}

/// Looks for a minimal `T`-outer path. `T` must be a maximal interesting set
/// and `c` must equal `C(T)`; neither is checked.
pub fn find_outer_path(graph: &Graph, t: &VertexSet, c: &VertexSet) -> Option<OuterPath> {
    let mut ops = 0;
    find_outer_path_in(graph, &graph.vertex_set(), t, c, &mut ops)
}

/// [`find_outer_path`] on the view `G[domain]`.
pub fn find_outer_path_in(
    graph: &Graph,
    domain: &VertexSet,
    t: &VertexSet,
    c: &VertexSet,
    ops: &mut u64,
) -> Option<OuterPath> {
    let n = graph.n();
    let search_domain = domain.difference(t);
    let mut roots = search_domain.difference(c);
    let mut marked = VertexSet::new(n);
    // counter[u] = |N(u) ∩ M| for u in C(T), reset after each root.
    let mut counter = vec![0usize; n];
    let mut touched = Vec::new();
    let mut queue = VecDeque::new();

    while let Some(root) = roots.first() {
        roots.remove(root);
        let mut state = OuterSearchState {
            root,
            reached: VertexSet::new(n),
            m: VertexSet::new(n),
            marked: VertexSet::new(n),
            trigger: None,
        };
        let mut m_size = 0;
        state.reached.insert(root);
        marked.insert(root);
        queue.clear();
        queue.push_back(root);
        'search: while let Some(u) = queue.pop_front() {
            *ops += 1;
            for &w in graph.neighbors(u) {
                *ops += 1;
                if !search_domain.contains(w) || !state.reached.insert(w) {
                    continue;
                }
                if !c.contains(w) {
                    marked.insert(w);
                    roots.remove(w);
                    queue.push_back(w);
                    continue;
                }
                let clique_so_far = counter[w] == m_size;
                state.m.insert(w);
                m_size += 1;
                for &z in graph.neighbors(w) {
                    *ops += 1;
                    if c.contains(z) {
                        if counter[z] == 0 {
                            touched.push(z);
                        }
                        counter[z] += 1;
                    }
                }
                if !clique_so_far {
                    let mut m_x = VertexSet::new(n);
                    for &z in graph.neighbors(w) {
                        *ops += 1;
                        if state.m.contains(z) {
                            m_x.insert(z);
                        }
                    }
                    state.trigger = Some((w, m_x));
                    break 'search;
                }
            }
        }
        state.marked = marked.clone();
        if let Some((x, m_x)) = &state.trigger {
            return Some(path_from_trigger(graph, &state, *x, m_x, ops));
        }
        for &z in &touched {
            counter[z] = 0;
        }
        touched.clear();
    }
    None
}

/// Second search: BFS from `x` in `G[S ∖ M_x]` up to the first vertex of
/// `M ∖ M_x`.
fn path_from_trigger(
    graph: &Graph,
    state: &OuterSearchState,
    x: usize,
    m_x: &VertexSet,
    ops: &mut u64,
) -> OuterPath {
    let n = graph.n();
    let mut allowed = state.reached.difference(m_x);
    allowed.remove(x);
    let mut parent = vec![usize::MAX; n];
    let mut queue = VecDeque::from([x]);
    while let Some(u) = queue.pop_front() {
        *ops += 1;
        for &w in graph.neighbors(u) {
            *ops += 1;
            if !allowed.remove(w) {
                continue;
            }
            parent[w] = u;
            if state.m.contains(w) {
                let mut vertices = vec![w];
                let mut cur = w;
                while cur != x {
                    cur = parent[cur];
                    vertices.push(cur);
                }
                vertices.reverse();
                return OuterPath { vertices };
            }
            queue.push_back(w);
        }
    }
    unreachable!("the root's component connects x to M ∖ M_x")
}
