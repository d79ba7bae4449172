//! End-to-end checks of the `sparsedom` binary: exit codes, JSON records,
//! determinism of generated files, and the verify/bench plumbing.

use sparsedom::record::RunRecord;
use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_sparsedom"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout_records(out: &Output) -> Vec<RunRecord> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| RunRecord::from_json_line(l).expect("valid record"))
        .collect()
}

fn write(path: &Path, content: &str) {
    std::fs::write(path, content).unwrap();
}

#[test]
fn solve_domset_on_c4() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("c4.el");
    write(&g, "4 4\n0 1\n1 2\n2 3\n3 0\n");
    let out = run(&["solve", "domset", "--k", "2", g.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let recs = stdout_records(&out);
    assert_eq!(recs.len(), 1);
    assert_eq!(recs[0].answer, "yes");
    assert_eq!(recs[0].witness.as_ref().unwrap().len(), 2);
    assert_eq!(recs[0].parameters["k"], "2");
}

#[test]
fn solve_distance_on_c5() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("c5.el");
    write(&g, "5 5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    let out = run(&[
        "solve",
        "distance",
        "--k",
        "1",
        "--r",
        "2",
        g.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let recs = stdout_records(&out);
    assert_eq!(recs[0].witness.as_ref().unwrap().len(), 1);
}

#[test]
fn solve_k_zero_is_usage_error() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.el");
    write(&g, "2 1\n0 1\n");
    let out = run(&["solve", "domset", "--k", "0", g.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    // a "no" answer, by contrast, still exits 0
    let out = run(&["solve", "containment", g.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn solve_missing_file_is_usage_error() {
    let out = run(&["solve", "domset2", "/nonexistent/file.el"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn generate_ov_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.ov");
    let b = dir.path().join("b.ov");
    for out in [&a, &b] {
        let res = run(&[
            "generate", "ov", "--k", "3", "--n", "4", "--d", "3", "--seed", "7", "--out",
            out.to_str().unwrap(),
        ]);
        assert_eq!(res.status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert!(std::fs::read_to_string(dir.path().join("a.ov.meta"))
        .unwrap()
        .contains("seed=7"));
}

#[test]
fn generate_domset_lb_matches_closed_form() {
    let dir = tempfile::tempdir().unwrap();
    let ov = dir.path().join("i.ov");
    let g = dir.path().join("i.el");
    run(&[
        "generate", "ov", "--k", "3", "--n", "2", "--d", "2", "--seed", "1", "--out",
        ov.to_str().unwrap(),
    ]);
    let out = run(&[
        "generate",
        "domset-lb",
        ov.to_str().unwrap(),
        "--out",
        g.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let meta = std::fs::read_to_string(dir.path().join("i.el.meta")).unwrap();
    // n = k + sum|A_i| + d = 3 + 6 + 2
    assert!(meta.contains("vertices=11"), "{meta}");
}

#[test]
fn generate_gadget_small_and_guarded() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("h.el");
    let out = run(&[
        "generate", "gadget", "--N", "2", "--K", "1", "--out", g.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let meta = std::fs::read_to_string(dir.path().join("h.el.meta")).unwrap();
    assert!(meta.contains("vertices=125"));
    assert!(meta.contains("p=5"));
    // scale guard refuses with the computed size
    let out = run(&[
        "generate", "gadget", "--N", "50", "--K", "2", "--out", g.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("vertices"));
}

#[test]
fn verify_pipeline_and_mutation() {
    let dir = tempfile::tempdir().unwrap();
    let ov = dir.path().join("i.ov");
    run(&[
        "generate", "ov", "--k", "2", "--n", "2", "--d", "3", "--seed", "3", "--out",
        ov.to_str().unwrap(),
    ]);
    let out = run(&["verify", "pipeline", ov.to_str().unwrap(), "--pattern", "+-"]);
    assert_eq!(out.status.code(), Some(0));
    let out = run(&["verify", "pipeline", ov.to_str().unwrap(), "--pattern", "+-+"]);
    assert_eq!(out.status.code(), Some(2), "arity mismatch is a usage error");

    // mutation check: regenerate the lower-bound graph, flip one edge, and
    // expect a reported discrepancy on some seed
    let ov3 = dir.path().join("j.ov");
    run(&[
        "generate", "ov", "--k", "3", "--n", "2", "--d", "2", "--seed", "5", "--out",
        ov3.to_str().unwrap(),
    ]);
    let g = dir.path().join("j.el");
    run(&[
        "generate",
        "domset-lb",
        ov3.to_str().unwrap(),
        "--out",
        g.to_str().unwrap(),
    ]);
    let out = run(&["verify", "domset-lb", ov3.to_str().unwrap(), g.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    // corrupt: drop all edges but keep the header's vertex count
    let text = std::fs::read_to_string(&g).unwrap();
    let header: Vec<&str> = text.lines().next().unwrap().split_whitespace().collect();
    write(&g, &format!("{} 0\n", header[0]));
    let out = run(&["verify", "domset-lb", ov3.to_str().unwrap(), g.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("FAIL"));
}

#[test]
fn bench_empty_grid_and_paired_rows() {
    let out = run(&["bench", "--suite", "maxentry", "--sizes", ""]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());

    let out = run(&["bench", "--suite", "domset2", "--sizes", "64,128", "--seed", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let recs = stdout_records(&out);
    assert_eq!(recs.len(), 4); // two backends per size
    assert!(recs.iter().all(|r| r.command == "bench domset2"));

    let out = run(&["bench", "--suite", "bogus", "--sizes", "8"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn workers_flag_and_env_accepted() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("g.el");
    write(&g, "3 2\n0 1\n1 2\n");
    let out = run(&["solve", "domset", "--k", "1", "--workers", "1", g.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let out = bin()
        .args(["solve", "domset", "--k", "1", g.to_str().unwrap()])
        .env("SPARSEDOM_WORKERS", "2")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let recs = stdout_records(&out);
    assert_eq!(recs[0].witness.as_ref().unwrap(), &vec![1]);
}
