use crate::error::OracleError;
use crate::graph::Graph;
use crate::oracles::{bits, Masks, OracleBudget};

/// ω(G) by branch and bound over candidate masks.
pub fn max_clique_exact(graph: &Graph) -> Result<usize, OracleError> {
    OracleBudget::default().admit_exact(graph)?;
    let masks = Masks::new(graph);
    Ok(clique_number(&masks))
}

fn clique_number(masks: &Masks) -> usize {
    fn expand(masks: &Masks, size: usize, candidates: u32, best: &mut usize) {
        if candidates == 0 {
            *best = (*best).max(size);
            return;
        }
        let mut left = candidates;
        while left != 0 {
            if size + left.count_ones() as usize <= *best {
                return;
            }
            let v = left.trailing_zeros() as usize;
            left &= left - 1;
            expand(masks, size + 1, left & masks.adj[v], best);
        }
        *best = (*best).max(size);
    }
    let mut best = 0;
    expand(masks, 0, masks.all(), &mut best);
    best
}

/// χ(G) by DSATUR-ordered branch and bound, with ω(G) as the lower bound.
pub fn chromatic_number_exact(graph: &Graph) -> Result<usize, OracleError> {
    OracleBudget::default().admit_exact(graph)?;
    let masks = Masks::new(graph);
    let n = masks.n;
    if n == 0 {
        return Ok(0);
    }
    let lower = clique_number(&masks);
    let mut best = n;
    let mut color = vec![usize::MAX; n];
    color_from(&masks, &mut color, 0, 0, lower, &mut best);
    Ok(best)
}

fn color_from(
    masks: &Masks,
    color: &mut [usize],
    colored: usize,
    used: usize,
    lower: usize,
    best: &mut usize,
) {
    let n = masks.n;
    if used >= *best || *best == lower {
        return;
    }
    if colored == n {
        *best = used;
        return;
    }
    // Uncolored vertex with the most distinct neighbor colors, then the
    // highest degree.
    let mut pick = usize::MAX;
    let mut pick_key = (0, 0);
    for v in (0..n).filter(|&v| color[v] == usize::MAX) {
        let seen = bits(masks.adj[v])
            .filter(|&w| color[w] != usize::MAX)
            .fold(0u32, |acc, w| acc | 1 << color[w]);
        let key = (seen.count_ones() + 1, masks.adj[v].count_ones() + 1);
        if pick == usize::MAX || key > pick_key {
            pick = v;
            pick_key = key;
        }
    }
    let blocked = bits(masks.adj[pick])
        .filter(|&w| color[w] != usize::MAX)
        .fold(0u32, |acc, w| acc | 1 << color[w]);
    for c in 0..=used.min(n - 1) {
        if blocked >> c & 1 == 1 {
            continue;
        }
        color[pick] = c;
        let now_used = used.max(c + 1);
        color_from(masks, color, colored + 1, now_used, lower, best);
        color[pick] = usize::MAX;
        if *best == lower {
            return;
        }
    }
}

/// χ and ω are both unchanged by contracting `x` and `y`.
pub fn fonlupt_uhry_check(graph: &Graph, x: usize, y: usize) -> Result<bool, OracleError> {
    OracleBudget::default().admit(graph)?;
    let (contracted, _) = graph.contract(x, y)?;
    Ok(
        chromatic_number_exact(graph)? == chromatic_number_exact(&contracted)?
            && max_clique_exact(graph)? == max_clique_exact(&contracted)?,
    )
}
