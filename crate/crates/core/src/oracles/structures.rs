use crate::error::OracleError;
use crate::graph::Graph;
use crate::oracles::{bits, mask_of, Masks, OracleBudget};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum StructureKind {
    OddHole,
    Antihole,
    Prism,
    None,
}

/// A forbidden induced subgraph, or `None` when the search came up empty.
///
/// Holes and antiholes list their vertices in cycle order (the antihole's
/// order is its cycle in the complement); prisms list the first triangle,
/// then the second (each vertex path-linked to the matching one), then the
/// interior path vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureWitness {
    pub kind: StructureKind,
    pub vertices: Vec<usize>,
}

impl StructureWitness {
    pub fn none() -> Self {
        StructureWitness {
            kind: StructureKind::None,
            vertices: Vec::new(),
        }
    }

    pub fn is_none(&self) -> bool {
        self.kind == StructureKind::None
    }
}

/// First chordless cycle (in DFS order from the smallest vertex) whose
/// length satisfies `accept`.
fn find_hole(masks: &Masks, accept: impl Fn(usize) -> bool) -> Option<Vec<usize>> {
    fn extend(
        masks: &Masks,
        path: &mut Vec<usize>,
        forbidden: u32,
        accept: &dyn Fn(usize) -> bool,
    ) -> bool {
        let start = path[0];
        let last = *path.last().expect("path starts at the root");
        // Candidates: above the start, unused, not adjacent to any interior
        // path vertex except `last`. Neighbors of the start can only close.
        let candidates = masks.adj[last] & !forbidden & !((2u32 << start) - 1);
        for w in bits(candidates) {
            if path.len() >= 2 && masks.sees(w, start) {
                if path.len() >= 3 && accept(path.len() + 1) {
                    path.push(w);
                    return true;
                }
                continue;
            }
            path.push(w);
            let interior = if path.len() > 2 { masks.adj[last] } else { 0 };
            let next_forbidden = forbidden | interior | 1 << w;
            if extend(masks, path, next_forbidden, accept) {
                return true;
            }
            path.pop();
        }
        false
    }
    for start in 0..masks.n {
        let mut path = vec![start];
        if extend(masks, &mut path, 1 << start, &accept) {
            return Some(path);
        }
    }
    None
}

/// A chordless cycle of odd length at least 5.
pub fn find_odd_hole(graph: &Graph) -> Result<StructureWitness, OracleError> {
    OracleBudget::default().admit(graph)?;
    Ok(
        match find_hole(&Masks::new(graph), |len| len >= 5 && len % 2 == 1) {
            Some(vertices) => StructureWitness {
                kind: StructureKind::OddHole,
                vertices,
            },
            None => StructureWitness::none(),
        },
    )
}

/// A hole of length at least 6 in the complement. Five-vertex antiholes are
/// five-holes and are reported by [`find_odd_hole`].
pub fn find_antihole(graph: &Graph) -> Result<StructureWitness, OracleError> {
    OracleBudget::default().admit(graph)?;
    Ok(
        match find_hole(&Masks::new(graph).complement(), |len| len >= 6) {
            Some(vertices) => StructureWitness {
                kind: StructureKind::Antihole,
                vertices,
            },
            None => StructureWitness::none(),
        },
    )
}

/// An induced prism, searching vertex subsets by increasing size and then
/// lexicographically.
pub fn find_prism(graph: &Graph) -> Result<StructureWitness, OracleError> {
    OracleBudget::default().admit(graph)?;
    let masks = Masks::new(graph);
    for size in 6..=masks.n {
        let mut found = None;
        for_each_subset(masks.n, size, &mut |subset| {
            found = prism_layout(&masks, subset);
            found.is_some()
        });
        if let Some(vertices) = found {
            return Ok(StructureWitness {
                kind: StructureKind::Prism,
                vertices,
            });
        }
    }
    Ok(StructureWitness::none())
}

/// Calls `visit` on every `size`-subset of `0..n` in lexicographic order
/// until it returns `true`.
fn for_each_subset(n: usize, size: usize, visit: &mut dyn FnMut(u32) -> bool) {
    fn rec(
        next: usize,
        n: usize,
        left: usize,
        acc: u32,
        visit: &mut dyn FnMut(u32) -> bool,
    ) -> bool {
        if left == 0 {
            return visit(acc);
        }
        (next..=n - left).any(|v| rec(v + 1, n, left - 1, acc | 1 << v, visit))
    }
    if size <= n {
        rec(0, n, size, 0, visit);
    }
}

/// If `G[subset]` is a prism: its triangles `[a0,a1,a2,b0,b1,b2]` with `ai`
/// path-linked to `bi`, followed by the path interiors.
fn prism_layout(masks: &Masks, subset: u32) -> Option<Vec<usize>> {
    let degree = |v: usize| (masks.adj[v] & subset).count_ones();
    let mut corners = 0u32;
    for v in bits(subset) {
        match degree(v) {
            3 => corners |= 1 << v,
            2 => {}
            _ => return None,
        }
    }
    if corners.count_ones() != 6 {
        return None;
    }
    let cs: Vec<usize> = bits(corners).collect();
    let first = cs[0];
    for i in 1..6 {
        for j in i + 1..6 {
            let tri_a = mask_of([first, cs[i], cs[j]]);
            let tri_b = corners & !tri_a;
            if !masks.is_clique(tri_a) || !masks.is_clique(tri_b) {
                continue;
            }
            if let Some(layout) = link_triangles(masks, subset, tri_a, tri_b) {
                return Some(layout);
            }
        }
    }
    None
}

/// Follows the unique non-triangle edge out of each corner of `tri_a`; the
/// three walks must end in distinct corners of `tri_b` and cover `subset`.
fn link_triangles(masks: &Masks, subset: u32, tri_a: u32, tri_b: u32) -> Option<Vec<usize>> {
    let corners = tri_a | tri_b;
    let mut covered = corners;
    let mut ends = Vec::new();
    for start in bits(tri_a) {
        let mut prev = start;
        let mut cur = bits(masks.adj[start] & subset & !tri_a).next()?;
        while corners >> cur & 1 == 0 {
            covered |= 1 << cur;
            let next = bits(masks.adj[cur] & subset & !(1 << prev)).next()?;
            prev = cur;
            cur = next;
        }
        if tri_b >> cur & 1 == 0 {
            return None;
        }
        ends.push(cur);
    }
    if covered != subset || mask_of(ends.iter().copied()) != tri_b {
        return None;
    }
    let mut layout: Vec<usize> = bits(tri_a).collect();
    layout.extend(ends);
    layout.extend(bits(subset & !corners));
    Some(layout)
}

/// Class A membership, with the first forbidden structure found.
pub fn is_artemis(graph: &Graph) -> Result<(bool, StructureWitness), OracleError> {
    for detector in [find_odd_hole, find_antihole, find_prism] {
        let witness = detector(graph)?;
        if !witness.is_none() {
            return Ok((false, witness));
        }
    }
    Ok((true, StructureWitness::none()))
}

/// Re-checks a witness against its structural definition.
pub fn verify_witness(graph: &Graph, witness: &StructureWitness) -> bool {
    if witness.vertices.iter().any(|&v| v >= graph.n()) {
        return false;
    }
    let masks = Masks::new(graph);
    let vs = &witness.vertices;
    let distinct = mask_of(vs.iter().copied()).count_ones() as usize == vs.len();
    match witness.kind {
        StructureKind::None => vs.is_empty(),
        StructureKind::OddHole => {
            distinct && vs.len() >= 5 && vs.len() % 2 == 1 && is_induced_cycle(&masks, vs)
        }
        StructureKind::Antihole => {
            distinct && vs.len() >= 5 && is_induced_cycle(&masks.complement(), vs)
        }
        StructureKind::Prism => {
            distinct && vs.len() >= 6 && prism_layout(&masks, mask_of(vs.iter().copied())).is_some()
        }
    }
}

fn is_induced_cycle(masks: &Masks, cycle: &[usize]) -> bool {
    let k = cycle.len();
    (0..k).all(|i| {
        (0..k).all(|j| {
            let d = (i + k - j) % k;
            i == j || masks.sees(cycle[i], cycle[j]) == (d == 1 || d == k - 1)
        })
    })
}
