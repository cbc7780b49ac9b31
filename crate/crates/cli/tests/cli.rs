use std::path::Path;
use std::process::{Command, Output};

use artemis_cli::dimacs::{parse_dimacs, write_coloring, write_dimacs};
use artemis_cli::generate::{generate, Family};
use artemis_cli::trace::TraceFile;
use artemis_core::{
    color_artemis, lift_coloring, Coloring, ContractionStep, ContractionTrace, Graph,
};
use proptest::prelude::*;

fn artemis(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_artemis"))
        .args(args)
        .output()
        .unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn color_c6() {
    let dir = tempfile::tempdir().unwrap();
    let file = write(dir.path(), "c6.col", &write_dimacs(&Graph::cycle(6)));
    let out = artemis(&["color", "--verify", &file]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().count(), 7);
    assert!(text.starts_with("s 2\n"));
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "c5.col", &write_dimacs(&Graph::cycle(5)));
    assert_eq!(artemis(&["color", "--verify", &c5]).status.code(), Some(1));
    assert_eq!(artemis(&["color", &c5]).status.code(), Some(1));
    assert_eq!(artemis(&["detect", &c5]).status.code(), Some(1));
    let bad = write(dir.path(), "bad.col", "p edge 2 1\ne 1 3\n");
    let out = artemis(&["color", &bad]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    assert_eq!(
        artemis(&["color", "/nonexistent/graph.col"]).status.code(),
        Some(2)
    );
    let big = write(dir.path(), "p13.col", &write_dimacs(&Graph::path(13)));
    assert_eq!(artemis(&["detect", &big]).status.code(), Some(3));
    assert_eq!(
        artemis(&["generate", "--family", "filtered-random", "--n", "13"])
            .status
            .code(),
        Some(3)
    );
    let p4 = write(dir.path(), "p4.col", &write_dimacs(&Graph::path(4)));
    assert_eq!(artemis(&["detect", &p4]).status.code(), Some(0));
}

#[test]
fn verify_above_budget_says_so() {
    let dir = tempfile::tempdir().unwrap();
    let g = generate(Family::Chordal, 40, 0.5, 3).unwrap();
    let file = write(dir.path(), "big.col", &write_dimacs(&g));
    let out = artemis(&["color", "--verify", &file]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("oracle checks skipped"));
}

#[test]
fn trace_file_replays_the_coloring() {
    let dir = tempfile::tempdir().unwrap();
    let g = generate(Family::Bipartite, 30, 0.3, 5).unwrap();
    let file = write(dir.path(), "g.col", &write_dimacs(&g));
    let trace_path = dir.path().join("trace.json");
    let out = artemis(&["color", "--trace-json", trace_path.to_str().unwrap(), &file]);
    assert_eq!(out.status.code(), Some(0));
    let trace: TraceFile = serde_json::from_slice(&std::fs::read(&trace_path).unwrap()).unwrap();

    // Rebuild the vertex maps from the recorded pairs alone.
    let mut replay = ContractionTrace::new(trace.original_n);
    let mut current = g.clone();
    for step in &trace.steps {
        let (next, rebuilt): (Graph, ContractionStep) = current.contract(step.a, step.b).unwrap();
        assert_eq!(rebuilt.merged, step.merged);
        replay.steps.push(rebuilt);
        replay.chain_depths.push(step.chain_depth);
        current = next;
    }
    let mut color = vec![0; current.n()];
    for clique in &trace.residue {
        for (j, &v) in clique.iter().enumerate() {
            color[v] = j;
        }
    }
    let residue = Coloring {
        color,
        num_colors: trace.num_colors,
    };
    let lifted = lift_coloring(&replay, &residue).unwrap();
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        write_coloring(&lifted)
    );
    assert_eq!(lifted, color_artemis(&g).unwrap().0);
}

#[test]
fn generate_is_deterministic() {
    let args = [
        "generate",
        "--family",
        "chordal",
        "--n",
        "25",
        "--density",
        "0.4",
        "--seed",
        "9",
    ];
    let first = artemis(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, artemis(&args).stdout);
    let parsed = parse_dimacs(std::str::from_utf8(&first.stdout).unwrap()).unwrap();
    assert_eq!(parsed.graph, generate(Family::Chordal, 25, 0.4, 9).unwrap());
}

#[test]
fn bench_table() {
    let out = artemis(&[
        "bench",
        "--family",
        "bipartite",
        "--sizes",
        "10,20",
        "--seed",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| !l.starts_with('#')).count(), 3);
    assert!(text.contains("slope of ops_total"));
    let one = artemis(&["bench", "--family", "chordal", "--sizes", "30"]);
    assert!(!String::from_utf8(one.stdout).unwrap().contains("slope"));
    assert_eq!(
        artemis(&["bench", "--family", "chordal", "--sizes", "30,10"])
            .status
            .code(),
        Some(2)
    );
}

proptest! {
    #[test]
    fn dimacs_round_trip(n in 1usize..30, density in 0.0f64..1.0, seed in any::<u64>(), family in 0usize..2) {
        let family = [Family::Chordal, Family::Bipartite][family];
        let g = generate(family, n, density, seed).unwrap();
        let parsed = parse_dimacs(&write_dimacs(&g)).unwrap();
        prop_assert_eq!(&parsed.graph, &g);
        prop_assert!(parsed.warnings().is_empty());
    }

    #[test]
    fn chordal_and_bipartite_colorings_are_proper(n in 1usize..40, density in 0.0f64..1.0, seed in any::<u64>()) {
        for family in [Family::Chordal, Family::Bipartite] {
            let g = generate(family, n, density, seed).unwrap();
            let (coloring, trace) = color_artemis(&g).unwrap();
            prop_assert!(coloring.check_proper(&g).is_ok());
            prop_assert!(trace.len() < n);
            if family == Family::Bipartite {
                prop_assert_eq!(coloring.num_colors, if g.m() == 0 { 1 } else { 2 });
            }
        }
    }
}
