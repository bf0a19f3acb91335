use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_alphafactor"))
        .args(args)
        .env_remove("ALPHAFACTOR_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn radius_of_k4() {
    let o = run(&["radius", "--graph6", "C~", "--alpha", "0.5"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "3\n");
}

#[test]
fn radius_accepts_fractions_and_alpha_one() {
    let o = run(&["radius", "--graph6", "C~", "--alpha", "1/3", "--alpha", "1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "C~\t0.333333333333\t3\nC~\t1\t3\n");
}

#[test]
fn extremal_graph6_round_trips() {
    let o = run(&["extremal", "--n", "8", "--delta", "2", "--emit-graph6"]);
    assert_eq!(code(&o), 0);
    let g6 = stdout(&o);
    let g = alphafactor::graph::parse_graph6(g6.trim().as_bytes()).unwrap();
    assert_eq!(g.size(), 23);
    assert_eq!(g.min_degree(), 2);
}

#[test]
fn charpoly_small_case() {
    let o = run(&["charpoly", "--n", "6", "--s", "2", "--alpha", "0"]);
    assert_eq!(stdout(&o), "coefficients 1 -3 -6 4\nlargest root 4.20147233822\n");
}

#[test]
fn quotient_rows() {
    let o = run(&["quotient", "--s", "2", "--parts", "3,1"]);
    assert!(stdout(&o).starts_with("1 3 1\n2 2 0\n2 0 0\nequitable true\n"));
}

#[test]
fn evenfactor_and_yankano() {
    let o = run(&["evenfactor", "--graph6", "Ch", "--method", "naive"]);
    assert_eq!(stdout(&o), "no\n");
    let o = run(&["evenfactor", "--graph6", "C~", "--method", "cycle-space"]);
    assert!(stdout(&o).starts_with("yes "));
    let o = run(&["yankano", "--graph6", "E~~w"]);
    assert_eq!(stdout(&o), "holds\n");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(code(&run(&["radius", "--alpha", "0.5"])), 2);
    assert_eq!(code(&run(&["radius", "--graph6", "C~", "--alpha", "1.5"])), 2);
    assert_eq!(code(&run(&["classify", "--graph6", "C~", "--alpha", "1"])), 2);
    assert_eq!(code(&run(&["extremal", "--n", "7", "--delta", "2"])), 2);
    assert_eq!(code(&run(&["bogus"])), 2);
    assert_eq!(code(&run(&["radius", "--help"])), 0);
}

#[test]
fn input_errors_exit_3_with_position() {
    let o = run(&["radius", "--graph6", "C~~", "--alpha", "0"]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("byte 2"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.g6");
    std::fs::write(&path, "C~\nC\n").unwrap();
    let o = run(&["radius", "--input", path.to_str().unwrap(), "--alpha", "0"]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("bad.g6:2:"));
    assert_eq!(code(&run(&["radius", "--input", "/nonexistent.g6", "--alpha", "0"])), 3);
}

fn corpus() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/../core/tests/data/connected8.g6"))
}

#[test]
fn verify_is_deterministic_across_jobs() {
    let dir = tempfile::tempdir().unwrap();
    let mut outputs = Vec::new();
    for jobs in ["1", "3"] {
        let jsonl = dir.path().join(format!("v{jobs}.jsonl"));
        let o = run(&[
            "verify",
            "--input",
            corpus().to_str().unwrap(),
            "--alpha",
            "0",
            "--alpha",
            "0.5",
            "--out",
            jsonl.to_str().unwrap(),
            "--jobs",
            jobs,
        ]);
        assert_eq!(code(&o), 0);
        outputs.push((stdout(&o), std::fs::read(&jsonl).unwrap()));
    }
    assert_eq!(outputs[0], outputs[1]);
    let csv = &outputs[0].0;
    assert!(csv.starts_with("alpha,applicable,meets_bound,extremal,no_factor,counterexamples,unknown\n"));
    assert_eq!(csv.lines().count(), 3);
    let records = outputs[0].1.split(|&b| b == b'\n').filter(|l| !l.is_empty()).count();
    assert_eq!(records, 11117 * 2);
}

#[test]
fn verify_random_stream_and_env_jobs() {
    let o = Command::new(env!("CARGO_BIN_EXE_alphafactor"))
        .args(["verify", "--random", "50", "--order", "10", "--alpha", "0.5"])
        .env("ALPHAFACTOR_JOBS", "2")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    let summary = stdout(&o);
    let row: Vec<&str> = summary.lines().nth(1).unwrap().split(',').collect();
    assert_eq!(row[0], "0.5");
    assert_eq!(row[5], "0");
}

#[test]
fn classify_writes_json_lines() {
    let g6 = stdout(&run(&["extremal", "--n", "8", "--delta", "2", "--emit-graph6"]));
    let o = run(&["classify", "--graph6", g6.trim(), "--alpha", "0", "--alpha", "0.4"]);
    assert_eq!(code(&o), 0);
    let lines: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(lines.len(), 2);
    for rec in &lines {
        assert_eq!(rec["is_extremal"], true);
        assert_eq!(rec["meets_bound"], true);
        assert_eq!(rec["counterexample"], false);
    }
}

#[test]
fn scan_reports_boundary_violation() {
    let o = run(&["scan-subcases", "--alpha", "0", "--alpha", "0.9", "--delta-max", "4"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).ends_with("violations 0\n"));
    let o = run(&["scan-subcases", "--alpha", "2/3", "--delta-max", "2", "--margin", "0"]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o), "checked 2 violations 1\nviolation alpha 2/3 delta 2 n 8 s 4 value 0\n");
}

#[test]
fn case3_counts() {
    let o = run(&["case3", "--n", "10", "--delta", "3", "--s", "2"]);
    let out = stdout(&o);
    assert!(out.contains("removed 1\nadded 2\nedge_delta 1\nconstructed_delta 1\n"));
    let gap: f64 = out.lines().find_map(|l| l.strip_prefix("gap ")).unwrap().parse().unwrap();
    assert!(gap > 0.0);
}

#[test]
fn spectrum_of_k4() {
    let o = run(&["spectrum", "--graph6", "C~", "--alpha", "0"]);
    assert_eq!(stdout(&o), "3 -1 -1 -1\n");
}
