//! Cross-checks a coloring run against the exhaustive oracles.

use std::collections::BTreeMap;

use artemis_core::engine::{color_artemis_with, ChainLevel, ColoringRun, ContractionEvent};
use artemis_core::handles::interesting_gives_handle_check;
use artemis_core::oracles::{
    brute_maximal_interesting_check, brute_minimal_outer_path_check, chromatic_number_exact,
    fonlupt_uhry_check, has_outer_path_by_components, is_artemis, is_even_pair_exact,
    is_special_even_pair_exact, max_clique_exact, OracleBudget, OuterPathVerdict, StructureWitness,
};
use artemis_core::{EngineError, Graph, OracleError, VertexSet};
use serde::Serialize;

/// Pass and fail counts for one named check.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct Verdicts {
    /// `false` when the graph exceeded the oracle budget and only the cheap
    /// checks ran.
    pub oracle_checks: bool,
    pub tallies: BTreeMap<&'static str, Tally>,
    /// The first few failure descriptions.
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

const MAX_FAILURE_NOTES: usize = 20;

impl Verdicts {
    pub fn record(&mut self, check: &'static str, ok: bool, detail: impl FnOnce() -> String) {
        let tally = self.tallies.entry(check).or_default();
        if ok {
            tally.passed += 1;
        } else {
            tally.failed += 1;
            if self.failures.len() < MAX_FAILURE_NOTES {
                self.failures.push(format!("{check}: {}", detail()));
            }
        }
    }

    fn record_oracle(
        &mut self,
        check: &'static str,
        result: Result<bool, OracleError>,
        detail: impl FnOnce() -> String,
    ) {
        match result {
            Ok(ok) => self.record(check, ok, detail),
            Err(e) => self.record(check, false, || format!("{} ({e})", detail())),
        }
    }

    pub fn all_passed(&self) -> bool {
        self.tallies.values().all(|t| t.failed == 0)
    }

    pub fn tally(&self, check: &str) -> Tally {
        self.tallies.get(check).copied().unwrap_or_default()
    }
}

#[derive(Debug)]
pub enum VerifyOutcome {
    /// The input contains an odd hole, an antihole or a prism.
    NotInClass(StructureWitness),
    /// The engine refused the graph.
    Engine(EngineError),
    Ran {
        run: Box<ColoringRun>,
        verdicts: Verdicts,
    },
}

/// Colors `graph` and, when it fits the oracle budget, checks every
/// contraction, every level of every pair search and the final color count.
pub fn color_and_verify(graph: &Graph) -> VerifyOutcome {
    let budget = OracleBudget::default();
    let small = graph.n() <= budget.max_n;
    if small {
        let (ok, witness) = is_artemis(graph).expect("within budget");
        if !ok {
            return VerifyOutcome::NotInClass(witness);
        }
    }
    let mut verdicts = Verdicts {
        oracle_checks: small,
        ..Verdicts::default()
    };
    let run = color_artemis_with(graph, |event| {
        if small {
            check_event(event, &mut verdicts);
        }
    });
    let run = match run {
        Ok(run) => run,
        Err(e) => return VerifyOutcome::Engine(e),
    };
    verdicts.record("proper", run.coloring.check_proper(graph).is_ok(), || {
        "coloring is improper".into()
    });
    let len = run.trace.len();
    verdicts.record("contraction-bound", len < graph.n().max(1), || {
        format!("{len} contractions on {} vertices", graph.n())
    });
    if small {
        let k = run.coloring.num_colors;
        let chi = chromatic_number_exact(graph);
        verdicts.record_oracle("colors-equal-chromatic", chi.map(|chi| chi == k), || {
            format!("{k} colors used")
        });
        let omega = max_clique_exact(graph);
        verdicts.record_oracle("colors-equal-clique", omega.map(|w| w == k), || {
            format!("{k} colors used")
        });
    } else {
        let clique = greedy_clique(graph);
        if clique == run.coloring.num_colors {
            verdicts.notes.push(format!(
                "n > {}: oracle checks skipped; properness checked and a clique of size {clique} certifies optimality",
                budget.max_n
            ));
        } else {
            verdicts.notes.push(format!(
                "n > {}: oracle checks skipped; properness checked, largest greedy clique has {clique} vertices against {} colors",
                budget.max_n, run.coloring.num_colors
            ));
        }
    }
    VerifyOutcome::Ran {
        run: Box::new(run),
        verdicts,
    }
}

/// Oracle checks for one contraction and the search levels behind it.
pub fn check_event(event: &ContractionEvent<'_>, verdicts: &mut Verdicts) {
    let (a, b) = (event.step.a, event.step.b);
    let pair = || format!("step {} pair ({a}, {b})", event.index);
    verdicts.record_oracle("even-pair", is_even_pair_exact(event.before, a, b), pair);
    verdicts.record_oracle(
        "special-even-pair",
        is_special_even_pair_exact(event.before, a, b),
        pair,
    );
    verdicts.record_oracle(
        "chi-omega-preserved",
        fonlupt_uhry_check(event.before, a, b),
        pair,
    );
    verdicts.record_oracle(
        "class-preserved",
        is_artemis(event.after).map(|(ok, _)| ok),
        pair,
    );
    for (depth, level) in event.chain.iter().enumerate() {
        check_level(event.before, level, verdicts, || {
            format!("step {} level {depth}", event.index)
        });
    }
}

fn check_level(
    graph: &Graph,
    level: &ChainLevel,
    verdicts: &mut Verdicts,
    at: impl Fn() -> String,
) {
    let (sub, to_old) = graph.induced(&level.domain);
    let mut to_new = vec![usize::MAX; graph.n()];
    for (new, &old) in to_old.iter().enumerate() {
        to_new[old] = new;
    }
    let local = |s: &VertexSet| sub.set_of(s.iter().map(|v| to_new[v]));
    let (t, c) = (local(&level.t), local(&level.c));
    verdicts.record("complete-set", sub.common_complete(&t) == c, || {
        format!("{}: C(T) mismatch", at())
    });
    verdicts.record_oracle(
        "maximal-interesting",
        brute_maximal_interesting_check(&sub, &t),
        &at,
    );
    verdicts.record("chain-level-size", sub.n() == level.n, || {
        format!("{}: level size mismatch", at())
    });
    match interesting_gives_handle_check(&sub, &t) {
        Ok(ok) => verdicts.record("interesting-gives-handle", ok, &at),
        Err(e) => verdicts.record("interesting-gives-handle", false, || {
            format!("{}: {e}", at())
        }),
    }
    match &level.outer_path {
        Some(path) => {
            let local_path: Vec<usize> = path.vertices.iter().map(|&v| to_new[v]).collect();
            match brute_minimal_outer_path_check(&sub, &t, &c, &local_path) {
                Ok(verdict) => verdicts.record(
                    "minimal-outer-path",
                    verdict == OuterPathVerdict::Minimal,
                    || format!("{}: {verdict:?}", at()),
                ),
                Err(e) => verdicts.record("minimal-outer-path", false, || format!("{}: {e}", at())),
            }
        }
        None => verdicts.record_oracle(
            "no-outer-path-criterion",
            has_outer_path_by_components(&sub, &t).map(|found| !found),
            || format!("{}: a component sees a non-clique part of C(T)", at()),
        ),
    }
}

/// Size of the largest clique found by growing one greedily from each
/// vertex, always adding the candidate with the most candidate neighbors.
pub fn greedy_clique(graph: &Graph) -> usize {
    let mut best = 0;
    for v in 0..graph.n() {
        let mut size = 1;
        let mut candidates = graph.neighbor_set(v);
        while !candidates.is_empty() {
            let pick = candidates
                .iter()
                .max_by_key(|&u| {
                    (
                        graph.neighbor_set(u).intersection_len(&candidates),
                        std::cmp::Reverse(u),
                    )
                })
                .expect("non-empty");
            candidates.intersect_with(&graph.neighbor_set(pick));
            size += 1;
        }
        best = best.max(size);
    }
    best
}
