use crate::error::OracleError;
use crate::graph::Graph;
use crate::oracles::{bits, find_prism, Masks, OracleBudget};

/// All chordless paths from `x` to `y` whose interior lies in `interior`.
///
/// Depth-first: a vertex may extend the path only if it misses every path
/// vertex except the current end.
pub(crate) fn chordless_paths_within(
    masks: &Masks,
    x: usize,
    y: usize,
    interior: u32,
    cap: usize,
) -> Result<Vec<Vec<usize>>, OracleError> {
    fn extend(
        masks: &Masks,
        path: &mut Vec<usize>,
        blocked: u32,
        y: usize,
        interior: u32,
        cap: usize,
        out: &mut Vec<Vec<usize>>,
    ) -> Result<(), OracleError> {
        let last = *path.last().expect("path starts at x");
        let next_blocked = blocked | masks.adj[last];
        for w in bits(masks.adj[last] & !blocked) {
            if w == y {
                if out.len() == cap {
                    return Err(OracleError::PathCapExceeded { cap });
                }
                let mut found = path.clone();
                found.push(y);
                out.push(found);
            } else if interior >> w & 1 == 1 {
                path.push(w);
                extend(masks, path, next_blocked | 1 << w, y, interior, cap, out)?;
                path.pop();
            }
        }
        Ok(())
    }
    let mut out = Vec::new();
    let mut path = vec![x];
    extend(
        masks,
        &mut path,
        1 << x,
        y,
        interior & !(1 << x) & !(1 << y),
        cap,
        &mut out,
    )?;
    Ok(out)
}

/// Every chordless path between `x` and `y`.
pub fn enumerate_chordless_paths(
    graph: &Graph,
    x: usize,
    y: usize,
) -> Result<Vec<Vec<usize>>, OracleError> {
    let budget = OracleBudget::default();
    budget.admit(graph)?;
    if x == y || x >= graph.n() || y >= graph.n() {
        return Err(OracleError::AdjacentPair { a: x, b: y });
    }
    let masks = Masks::new(graph);
    chordless_paths_within(&masks, x, y, masks.all(), budget.max_paths)
}

fn check_pair(graph: &Graph, x: usize, y: usize) -> Result<(), OracleError> {
    if x == y || x >= graph.n() || y >= graph.n() || graph.adjacent(x, y) {
        Err(OracleError::AdjacentPair { a: x, b: y })
    } else {
        Ok(())
    }
}

/// Every chordless `x`–`y` path has an even number of edges (vacuously
/// true when there is none).
pub fn is_even_pair_exact(graph: &Graph, x: usize, y: usize) -> Result<bool, OracleError> {
    check_pair(graph, x, y)?;
    Ok(enumerate_chordless_paths(graph, x, y)?
        .iter()
        .all(|p| (p.len() - 1) % 2 == 0))
}

/// An even pair whose contraction contains no prism.
pub fn is_special_even_pair_exact(graph: &Graph, x: usize, y: usize) -> Result<bool, OracleError> {
    if !is_even_pair_exact(graph, x, y)? {
        return Ok(false);
    }
    let (contracted, _) = graph.contract(x, y)?;
    Ok(find_prism(&contracted)?.is_none())
}
