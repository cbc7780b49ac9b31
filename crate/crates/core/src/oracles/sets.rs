use crate::error::OracleError;
use crate::graph::Graph;
use crate::oracles::paths::chordless_paths_within;
use crate::oracles::{bits, mask_of, Masks, OracleBudget};
use crate::vertex_set::VertexSet;

fn interesting_mask(masks: &Masks, t: u32) -> bool {
    t != 0 && masks.complement().is_connected(t) && !masks.is_clique(masks.common_complete(t))
}

/// `T` is non-empty, co-connected, and `C(T)` is not a clique.
pub fn is_interesting(graph: &Graph, t: &VertexSet) -> Result<bool, OracleError> {
    OracleBudget::default().admit(graph)?;
    let masks = Masks::new(graph);
    Ok(interesting_mask(&masks, mask_of(t)))
}

/// `T` is interesting and no vertex outside `T ∪ C(T)` sees a non-clique
/// part of `C(T)`.
pub fn brute_maximal_interesting_check(graph: &Graph, t: &VertexSet) -> Result<bool, OracleError> {
    OracleBudget::default().admit(graph)?;
    let masks = Masks::new(graph);
    let t = mask_of(t);
    if !interesting_mask(&masks, t) {
        return Ok(false);
    }
    let c = masks.common_complete(t);
    let outside = masks.all() & !(t | c);
    Ok(bits(outside).all(|u| masks.is_clique(masks.adj[u] & c)))
}

/// `T` is interesting and no strict superset of it is, by enumerating every
/// superset.
pub fn maximal_interesting_exhaustive(graph: &Graph, t: &VertexSet) -> Result<bool, OracleError> {
    OracleBudget::default().admit(graph)?;
    let masks = Masks::new(graph);
    let t = mask_of(t);
    if !interesting_mask(&masks, t) {
        return Ok(false);
    }
    let rest = masks.all() & !t;
    // Walk the non-empty submasks of `rest`.
    let mut extra = rest;
    while extra != 0 {
        if interesting_mask(&masks, t | extra) {
            return Ok(false);
        }
        extra = (extra - 1) & rest;
    }
    Ok(true)
}

fn outer_paths(masks: &Masks, t: u32, cap: usize) -> Result<Vec<Vec<usize>>, OracleError> {
    let c = masks.common_complete(t);
    let interior = masks.all() & !(t | c);
    let mut out = Vec::new();
    for x in bits(c) {
        for y in bits(c & !((2u32 << x) - 1)) {
            for path in chordless_paths_within(masks, x, y, interior, cap)? {
                if path.len() > 2 {
                    out.push(path);
                }
            }
        }
    }
    Ok(out)
}

/// Every `T`-outer path, one orientation each (`x < y`). Paths need at least
/// one interior vertex.
pub fn enumerate_outer_paths(graph: &Graph, t: &VertexSet) -> Result<Vec<Vec<usize>>, OracleError> {
    let budget = OracleBudget::default();
    budget.admit(graph)?;
    outer_paths(&Masks::new(graph), mask_of(t), budget.max_paths)
}

/// Some component `R` of `G - (T ∪ C(T))` has `N(R) ∩ C(T)` not a clique.
pub fn has_outer_path_by_components(graph: &Graph, t: &VertexSet) -> Result<bool, OracleError> {
    OracleBudget::default().admit(graph)?;
    let masks = Masks::new(graph);
    let t = mask_of(t);
    let c = masks.common_complete(t);
    let rest = masks.all() & !(t | c);
    Ok(masks
        .components(rest)
        .into_iter()
        .any(|r| !masks.is_clique(masks.neighborhood(r) & c)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OuterPathVerdict {
    Minimal,
    /// The path fails the outer-path definition itself.
    NotOuterPath(String),
    /// An outer path of odd length or shorter than 4 edges. In class A with
    /// `T` maximal this cannot happen.
    ParityViolation {
        len: usize,
    },
    /// Another outer path whose interior lies strictly inside this one's.
    NotMinimal {
        inner: Vec<usize>,
    },
}

impl OuterPathVerdict {
    pub fn is_minimal(&self) -> bool {
        *self == OuterPathVerdict::Minimal
    }
}

/// Checks that `path` is a `T`-outer path (with `c` equal to `C(T)`), has
/// even length at least 4, and is minimal among all `T`-outer paths.
pub fn brute_minimal_outer_path_check(
    graph: &Graph,
    t: &VertexSet,
    c: &VertexSet,
    path: &[usize],
) -> Result<OuterPathVerdict, OracleError> {
    let budget = OracleBudget::default();
    budget.admit(graph)?;
    let masks = Masks::new(graph);
    let t = mask_of(t);
    let c_mask = masks.common_complete(t);
    let bad = |why: &str| Ok(OuterPathVerdict::NotOuterPath(why.to_string()));
    if mask_of(c) != c_mask {
        return bad("given complete set differs from C(T)");
    }
    if path.len() < 3 || path.iter().any(|&v| v >= masks.n) {
        return bad("path needs two ends and an interior");
    }
    let (x, y) = (path[0], path[path.len() - 1]);
    if c_mask >> x & 1 == 0 || c_mask >> y & 1 == 0 {
        return bad("an end lies outside C(T)");
    }
    let interior = &path[1..path.len() - 1];
    let interior_mask = mask_of(interior.iter().copied());
    if interior_mask & (t | c_mask) != 0 {
        return bad("an interior vertex lies in T or C(T)");
    }
    if mask_of(path.iter().copied()).count_ones() as usize != path.len() {
        return bad("path repeats a vertex");
    }
    for i in 0..path.len() {
        for j in i + 1..path.len() {
            if masks.sees(path[i], path[j]) != (j == i + 1) {
                return bad("path is not chordless");
            }
        }
    }
    let len = path.len() - 1;
    if len < 4 || len % 2 == 1 {
        return Ok(OuterPathVerdict::ParityViolation { len });
    }
    for other in outer_paths(&masks, t, budget.max_paths)? {
        let inner = mask_of(other[1..other.len() - 1].iter().copied());
        if inner != interior_mask && inner & !interior_mask == 0 {
            return Ok(OuterPathVerdict::NotMinimal { inner: other });
        }
    }
    Ok(OuterPathVerdict::Minimal)
}
