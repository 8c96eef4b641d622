//! End-to-end tests of the pmc binary: exit codes, output shape, and
//! byte-level determinism.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn pmc() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pmc"))
}

fn write_inputs(dir: &Path) -> (String, String) {
    let graph = dir.join("a2.json");
    fs::write(
        &graph,
        r#"{"vertices": [{"id": 1, "parity": 1}, {"id": 2, "parity": 0}],
            "edges": [[1, 2]], "order": [2, 1]}"#,
    )
    .unwrap();
    let params = dir.join("r.json");
    fs::write(&params, r#"{"1": [-1], "2": [2]}"#).unwrap();
    (
        graph.to_string_lossy().into_owned(),
        params.to_string_lossy().into_owned(),
    )
}

fn run(args: &[&str]) -> Output {
    pmc().args(args).output().expect("binary runs")
}

#[test]
fn crystal_gen_produces_the_worked_example() {
    let dir = tempfile::tempdir().unwrap();
    let (graph, params) = write_inputs(dir.path());
    let dot = dir.path().join("out.dot");
    let out = run(&[
        "crystal",
        "gen",
        "--graph",
        &graph,
        "--params",
        &params,
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("nodes: 8"));
    assert!(stdout.contains("edges: 8"));
    let dot_text = fs::read_to_string(&dot).unwrap();
    assert_eq!(dot_text.matches("label=\"y_R").count(), 8);
    assert_eq!(dot_text.matches(" -> ").count(), 8);

    // byte-identical output across runs
    let dot2 = dir.path().join("out2.dot");
    let out2 = run(&[
        "crystal",
        "gen",
        "--graph",
        &graph,
        "--params",
        &params,
        "--dot",
        dot2.to_str().unwrap(),
    ]);
    assert!(out2.status.success());
    assert_eq!(dot_text, fs::read_to_string(&dot2).unwrap());
}

#[test]
fn missing_file_exits_2() {
    let out = run(&[
        "crystal",
        "gen",
        "--graph",
        "/nonexistent.json",
        "--params",
        "/also-missing.json",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_graph_exits_2() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("bad.json");
    fs::write(&graph, r#"{"vertices": [{"id": 1, "parity": 0}, {"id": 2, "parity": 0}], "edges": [[1,2]], "order": [1,2]}"#).unwrap();
    let params = dir.path().join("r.json");
    fs::write(&params, r#"{"1": [0]}"#).unwrap();
    let out = run(&[
        "crystal",
        "gen",
        "--graph",
        graph.to_str().unwrap(),
        "--params",
        params.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn longitude_check_modes() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("a2.json");
    fs::write(
        &graph,
        r#"{"vertices": [{"id": 1, "parity": 1}, {"id": 2, "parity": 0}],
            "edges": [[1, 2]], "order": [2, 1]}"#,
    )
    .unwrap();
    let params = dir.path().join("r.json");
    fs::write(&params, r#"{"1": [-1], "2": [4]}"#).unwrap();
    let base: Vec<&str> = vec![
        "longitude",
        "check",
        "--graph",
        graph.to_str().unwrap(),
        "--params",
        params.to_str().unwrap(),
        "--blacks",
        "1,2,1",
        "--kappa",
        "1,2",
    ];
    // metric-valid bottom data
    let mut args = base.clone();
    args.extend(["--longs", "-3,2,5", "--mode", "metric"]);
    assert_eq!(run(&args).status.code(), Some(0));
    // coarse-valid but metric-invalid variant
    let mut args = base.clone();
    args.extend(["--longs", "-3,-2,5", "--mode", "metric"]);
    assert_eq!(run(&args).status.code(), Some(1));
    let mut args = base.clone();
    args.extend(["--longs", "-3,-2,5", "--mode", "coarse"]);
    assert_eq!(run(&args).status.code(), Some(0));
}

#[test]
fn gklo_verify_minimal_passes() {
    let dir = tempfile::tempdir().unwrap();
    let graph = dir.path().join("a1.json");
    fs::write(
        &graph,
        r#"{"vertices": [{"id": 1, "parity": 1}], "edges": [], "order": [1]}"#,
    )
    .unwrap();
    let params = dir.path().join("r.json");
    fs::write(&params, r#"{"1": [3]}"#).unwrap();
    let report = dir.path().join("report.json");
    let out = run(&[
        "gklo",
        "verify",
        "--graph",
        graph.to_str().unwrap(),
        "--params",
        params.to_str().unwrap(),
        "--m",
        "1=1",
        "--order",
        "2",
        "--degree",
        "3",
        "--report",
        report.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let text = fs::read_to_string(&report).unwrap();
    assert!(text.contains("\"relation\""));
    assert!(text.contains("\"pass\""));
}

#[test]
fn gt_count_and_classify() {
    let out = run(&["gt", "count", "--top-row", "2,1,0"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "8");

    let out = run(&[
        "gt",
        "classify",
        "--N",
        "3",
        "--partition",
        "1,1,1",
        "--R",
        "0,2,4",
        "--padding",
        "3",
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("pattern count 8"), "{stdout}");
}
