//! End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

use std::process::{Command, ExitCode};
use std::time::Instant;

use artemis_cli::bench::{bench, DEFAULT_DENSITY};
use artemis_cli::dimacs::write_dimacs;
use artemis_cli::generate::{generate, Family};
use artemis_cli::verify::{color_and_verify, Verdicts, VerifyOutcome};
use artemis_core::handles::{
    cohandle_is_max_interesting, find_generalized_handle, is_generalized_handle,
};
use artemis_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SWEEP_SIZE: usize = 5_000;
const HANDLE_GRAPHS: usize = 1_000;

struct Report {
    all_passed: bool,
}

impl Report {
    fn line(&mut self, id: usize, name: &str, ok: bool, detail: String) {
        self.all_passed &= ok;
        println!(
            "{} criterion {id} ({name}): {detail}",
            if ok { "PASS" } else { "FAIL" }
        );
    }
}

#[derive(Default)]
struct Sweep {
    graphs: usize,
    per_family: [usize; 3],
    not_in_class: Vec<String>,
    engine_errors: Vec<String>,
    verdicts: Verdicts,
}

fn sweep() -> Sweep {
    let mut out = Sweep::default();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..SWEEP_SIZE {
        let family_index = i % 3;
        let family = Family::ALL[family_index];
        let n = rng.gen_range(4..=10);
        let density = rng.gen_range(0.15..0.85);
        let seed = rng.gen::<u64>();
        let graph = generate(family, n, density, seed).expect("generator arguments are valid");
        out.graphs += 1;
        out.per_family[family_index] += 1;
        match color_and_verify(&graph) {
            VerifyOutcome::NotInClass(w) => out
                .not_in_class
                .push(format!("{family} n={n} seed={seed}: {w:?}")),
            VerifyOutcome::Engine(e) => out
                .engine_errors
                .push(format!("{family} n={n} seed={seed}: {e}")),
            VerifyOutcome::Ran { verdicts, .. } => {
                for (check, tally) in verdicts.tallies {
                    let entry = out.verdicts.tallies.entry(check).or_default();
                    entry.passed += tally.passed;
                    entry.failed += tally.failed;
                }
                for failure in verdicts.failures {
                    out.verdicts
                        .failures
                        .push(format!("{family} n={n} seed={seed}: {failure}"));
                }
            }
        }
    }
    out
}

fn tallies(sweep: &Sweep, checks: &[&str]) -> (bool, String) {
    let mut ok = true;
    let parts: Vec<String> = checks
        .iter()
        .map(|&check| {
            let t = sweep.verdicts.tally(check);
            ok &= t.failed == 0 && t.passed > 0;
            format!("{check} {}/{}", t.passed, t.passed + t.failed)
        })
        .collect();
    (ok, parts.join(", "))
}

fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, &edges).expect("valid edges")
}

fn handle_bridge() -> (usize, usize, Vec<String>) {
    let mut rng = ChaCha8Rng::seed_from_u64(0xa11e);
    let (mut with_handle, mut passed, mut failures) = (0, 0, Vec::new());
    let mut tries = 0;
    while with_handle < HANDLE_GRAPHS && tries < 100 * HANDLE_GRAPHS {
        tries += 1;
        let n = rng.gen_range(4..=10);
        let p = rng.gen_range(0.2..0.8);
        let graph = random_graph(&mut rng, n, p);
        match find_generalized_handle(&graph) {
            Ok(None) => {}
            Ok(Some(handle)) => {
                with_handle += 1;
                let ok = is_generalized_handle(&graph, &handle.h, &handle.j)
                    && cohandle_is_max_interesting(&graph, &handle) == Ok(true);
                if ok {
                    passed += 1;
                } else if failures.len() < 5 {
                    failures.push(format!(
                        "{:?}: {handle:?}",
                        graph.edges().collect::<Vec<_>>()
                    ));
                }
            }
            Err(e) => {
                with_handle += 1;
                failures.push(e.to_string());
            }
        }
    }
    (with_handle, passed, failures)
}

fn run_binary(args: &[&str]) -> (i32, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_artemis"))
        .args(args)
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), out.stdout)
}

/// Runs `color --trace-json` twice per instance and compares the bytes.
fn determinism() -> (usize, Vec<String>) {
    let dir = tempfile::tempdir().expect("temp dir");
    let mut checked = 0;
    let mut mismatches = Vec::new();
    let instances = [
        (Family::Chordal, 60, 11),
        (Family::Chordal, 9, 12),
        (Family::Bipartite, 40, 13),
        (Family::Bipartite, 8, 14),
        (Family::FilteredRandom, 10, 15),
        (Family::FilteredRandom, 7, 16),
    ];
    for (family, n, seed) in instances {
        let (code, first) = run_binary(&[
            "generate",
            "--family",
            &family.to_string(),
            "--n",
            &n.to_string(),
            "--seed",
            &seed.to_string(),
        ]);
        let (_, second) = run_binary(&[
            "generate",
            "--family",
            &family.to_string(),
            "--n",
            &n.to_string(),
            "--seed",
            &seed.to_string(),
        ]);
        if code != 0 || first != second {
            mismatches.push(format!("generate {family} n={n} seed={seed}"));
            continue;
        }
        let input = dir.path().join(format!("{family}-{n}-{seed}.col"));
        std::fs::write(&input, &first).expect("write input");
        let mut outputs = Vec::new();
        for run in 0..2 {
            let trace = dir.path().join(format!("{family}-{n}-{seed}-{run}.json"));
            let (code, stdout) = run_binary(&[
                "color",
                "--trace-json",
                trace.to_str().expect("utf-8 path"),
                input.to_str().expect("utf-8 path"),
            ]);
            outputs.push((code, stdout, std::fs::read(&trace).unwrap_or_default()));
        }
        checked += 1;
        if outputs[0].0 != 0 || outputs[0] != outputs[1] {
            mismatches.push(format!("color {family} n={n} seed={seed}"));
        }
    }
    // The library path must agree with the binary on the DIMACS text.
    let graph = generate(Family::Chordal, 60, DEFAULT_DENSITY, 11).expect("valid");
    let (_, text) = run_binary(&[
        "generate", "--family", "chordal", "--n", "60", "--seed", "11",
    ]);
    if text != write_dimacs(&graph).into_bytes() {
        mismatches.push("library and binary disagree on generated text".into());
    }
    (checked, mismatches)
}

fn main() -> ExitCode {
    let mut report = Report { all_passed: true };

    let start = Instant::now();
    let sweep = sweep();
    let sweep_secs = start.elapsed().as_secs_f64();
    for failure in sweep
        .verdicts
        .failures
        .iter()
        .chain(&sweep.not_in_class)
        .chain(&sweep.engine_errors)
        .take(20)
    {
        eprintln!("  {failure}");
    }
    let clean = sweep.not_in_class.is_empty() && sweep.engine_errors.is_empty();

    let (ok, detail) = tallies(
        &sweep,
        &["colors-equal-chromatic", "colors-equal-clique", "proper"],
    );
    report.line(
        1,
        "optimality sweep",
        ok && clean && sweep.graphs >= SWEEP_SIZE && sweep.verdicts.tally("colors-equal-chromatic").passed == sweep.graphs,
        format!(
            "{} graphs (chordal {}, bipartite {}, filtered-random {}), {} outside class A, {} engine errors; {detail}; {sweep_secs:.1}s",
            sweep.graphs,
            sweep.per_family[0],
            sweep.per_family[1],
            sweep.per_family[2],
            sweep.not_in_class.len(),
            sweep.engine_errors.len()
        ),
    );

    let (ok, detail) = tallies(
        &sweep,
        &["even-pair", "special-even-pair", "chi-omega-preserved"],
    );
    report.line(2, "even-pair soundness", ok, detail);

    let (ok, detail) = tallies(&sweep, &["class-preserved"]);
    report.line(3, "class preservation", ok, detail);

    let (ok, detail) = tallies(
        &sweep,
        &[
            "maximal-interesting",
            "complete-set",
            "chain-level-size",
            "minimal-outer-path",
            "no-outer-path-criterion",
        ],
    );
    report.line(4, "structural outputs", ok, detail);

    let (with_handle, passed, failures) = handle_bridge();
    for failure in &failures {
        eprintln!("  handle: {failure}");
    }
    let (ok, detail) = tallies(&sweep, &["interesting-gives-handle"]);
    report.line(
        5,
        "handle bridge",
        ok && with_handle >= HANDLE_GRAPHS && passed == with_handle,
        format!("co-handle maximal interesting {passed}/{with_handle}; {detail}"),
    );

    let (ok, detail) = tallies(&sweep, &["contraction-bound"]);
    report.line(6, "contraction bound", ok, detail);

    let start = Instant::now();
    let table =
        bench(Family::Chordal, &[50, 100, 200, 400], DEFAULT_DENSITY, 1).expect("bench runs");
    let secs = start.elapsed().as_secs_f64();
    let total = table.slope_total.unwrap_or(f64::NAN);
    let pair = table.slope_pair.unwrap_or(f64::NAN);
    report.line(
        7,
        "scaling proxy",
        (0.7..=1.3).contains(&total) && (0.8..=1.2).contains(&pair) && secs < 120.0,
        format!("slope vs n^2*m {total:.3} in [0.7, 1.3], single search vs n*m {pair:.3} in [0.8, 1.2], {secs:.1}s"),
    );

    let (checked, mismatches) = determinism();
    for m in &mismatches {
        eprintln!("  determinism: {m}");
    }
    report.line(
        8,
        "determinism",
        mismatches.is_empty() && checked > 0,
        format!(
            "{checked} instances colored twice, {} mismatches",
            mismatches.len()
        ),
    );

    if report.all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
