use crate::error::EngineError;
use crate::graph::{ContractionStep, Graph};
use crate::vertex_set::VertexSet;

/// A total vertex coloring with colors `0..num_colors`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub color: Vec<usize>,
    pub num_colors: usize,
}

impl Coloring {
    pub fn n(&self) -> usize {
        self.color.len()
    }

    /// Returns the first monochromatic edge, if any.
    pub fn check_proper(&self, graph: &Graph) -> Result<(), EngineError> {
        if self.color.len() != graph.n() {
            return Err(EngineError::ColoringSize {
                got: self.color.len(),
                expected: graph.n(),
            });
        }
        match graph.edges().find(|&(u, v)| self.color[u] == self.color[v]) {
            Some((u, v)) => Err(EngineError::ImproperColoring {
                u,
                v,
                color: self.color[u],
            }),
            None => Ok(()),
        }
    }

    /// Every color in `0..num_colors` is used and no other.
    pub fn is_onto(&self) -> bool {
        let mut used = vec![false; self.num_colors];
        for &c in &self.color {
            match used.get_mut(c) {
                Some(slot) => *slot = true,
                None => return false,
            }
        }
        used.into_iter().all(|u| u)
    }
}

/// The ordered contractions performed on a graph, enough to lift a coloring
/// of the final graph back to the original.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ContractionTrace {
    pub original_n: usize,
    pub steps: Vec<ContractionStep>,
    /// Depth of the level chain that produced each step's pair (1 = top).
    pub chain_depths: Vec<usize>,
}

impl ContractionTrace {
    pub fn new(original_n: usize) -> Self {
        ContractionTrace {
            original_n,
            steps: Vec::new(),
            chain_depths: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn final_n(&self) -> usize {
        self.steps
            .last()
            .map_or(self.original_n, ContractionStep::post_n)
    }

    /// Each step starts on the vertex range the previous one ended on.
    pub fn is_chained(&self) -> bool {
        let mut n = self.original_n;
        for step in &self.steps {
            if step.pre_n() != n {
                return false;
            }
            n = step.post_n();
        }
        true
    }
}

/// Colors a disjoint union of cliques: the `j`-th vertex of each clique (by
/// ascending id) gets color `j`.
pub fn greedy_color_cliques(cliques: &[VertexSet]) -> Coloring {
    let n = cliques.first().map_or(0, VertexSet::capacity);
    let mut color = vec![usize::MAX; n];
    let mut num_colors = 0;
    for clique in cliques {
        for (j, v) in clique.iter().enumerate() {
            color[v] = j;
        }
        num_colors = num_colors.max(clique.len());
    }
    debug_assert!(
        color.iter().all(|&c| c != usize::MAX),
        "partition must cover every vertex"
    );
    Coloring { color, num_colors }
}

/// Walks the trace backwards, giving both contracted vertices the color of
/// the merged vertex.
pub fn lift_coloring(
    trace: &ContractionTrace,
    coloring: &Coloring,
) -> Result<Coloring, EngineError> {
    if coloring.n() != trace.final_n() {
        return Err(EngineError::ColoringSize {
            got: coloring.n(),
            expected: trace.final_n(),
        });
    }
    let mut color = coloring.color.clone();
    for step in trace.steps.iter().rev() {
        color = step.vertex_map.iter().map(|&v| color[v]).collect();
    }
    Ok(Coloring {
        color,
        num_colors: coloring.num_colors,
    })
}
