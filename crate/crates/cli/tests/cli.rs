//! End-to-end checks of the `maxclique` binary: output schema, flags, and
//! the exit-code contract (0 success, 2 bad input, 3 guard trip).

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_maxclique")
}

fn write(dir: &Path, name: &str, content: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, content).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(bin()).args(args).output().unwrap()
}

fn json_of(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "stdout: {}\nstderr: {}",
        String::from_utf8_lossy(&out.stdout),
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid JSON report")
}

#[test]
fn solve_k5_reports_omega_five() {
    let dir = tempfile::tempdir().unwrap();
    let mut text = String::new();
    for u in 0..5 {
        for v in u + 1..5 {
            text.push_str(&format!("{u} {v}\n"));
        }
    }
    let input = write(dir.path(), "k5.txt", &text);
    let report = json_of(&run(&[input.to_str().unwrap()]));
    assert_eq!(report["schema_version"], 1);
    assert_eq!(report["clique_size"], 5);
    assert_eq!(report["heuristic_size"], 5);
    assert_eq!(report["graph_core_number"], 4);
    assert_eq!(
        report["clique_members"],
        serde_json::json!(["0", "1", "2", "3", "4"])
    );
    // Internal chain: heuristic <= omega <= min(L, K+1).
    let (h, w) = (
        report["heuristic_size"].as_u64().unwrap(),
        report["clique_size"].as_u64().unwrap(),
    );
    let upper = report["coloring_bound"]
        .as_u64()
        .unwrap()
        .min(report["graph_core_number"].as_u64().unwrap() + 1);
    assert!(h <= w && w <= upper);
}

#[test]
fn ablation_flag_matches_default_answer() {
    let dir = tempfile::tempdir().unwrap();
    // Deterministic pseudo-random graph, rich enough to branch.
    let mut text = String::new();
    let mut state = 7u64;
    for u in 0..30u64 {
        for v in u + 1..30 {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            if state >> 40 & 0xff < 100 {
                text.push_str(&format!("{u} {v}\n"));
            }
        }
    }
    let input = write(dir.path(), "g.txt", &text);
    let a = json_of(&run(&[input.to_str().unwrap()]));
    let b = json_of(&run(&[
        input.to_str().unwrap(),
        "--no-neighborhood-cores",
        "--threads",
        "8",
    ]));
    assert_eq!(a["clique_size"], b["clique_size"]);
    assert_eq!(b["config"]["use_neighborhood_cores"], false);
    assert_eq!(b["workers"], 8);
}

#[test]
fn dimacs_autodetects_and_solves() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "k3.clq", "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    let report = json_of(&run(&[input.to_str().unwrap()]));
    assert_eq!(report["format"], "dimacs");
    assert_eq!(report["clique_size"], 3);
    assert_eq!(report["clique_members"], serde_json::json!(["1", "2", "3"]));
}

#[test]
fn directed_flag_changes_preprocessing() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "cyc.txt", "a b\nb c\nc a\n");
    // Undirected reading: a triangle.
    let undirected = json_of(&run(&[input.to_str().unwrap()]));
    assert_eq!(undirected["clique_size"], 3);
    // Directed reading: no reciprocated arcs survive.
    let directed = json_of(&run(&[input.to_str().unwrap(), "--directed"]));
    assert_eq!(directed["clique_size"], 0);
    assert_eq!(directed["vertices"], 0);
}

#[test]
fn tscc_reports_component_and_verifies() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "net.txt", "u v 1\nv u 2\nv w 3\n");
    let report = json_of(&run(&["tscc", input.to_str().unwrap(), "--verify"]));
    assert_eq!(report["command"], "tscc");
    assert_eq!(report["component_size"], 2);
    assert_eq!(report["component_members"], serde_json::json!(["u", "v"]));
    assert_eq!(report["verified"], true);
    assert_eq!(report["temporal_edges"], 3);
}

#[test]
fn tscc_density_cap_exits_three_with_projection() {
    let dir = tempfile::tempdir().unwrap();
    let mut text = String::new();
    for i in 0..60 {
        text.push_str(&format!("v{i} v{} {i}\n", i + 1));
    }
    let input = write(dir.path(), "chain.txt", &text);
    let out = run(&["tscc", input.to_str().unwrap(), "--reach-cap", "50"]);
    assert_eq!(out.status.code(), Some(3));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("projected"), "{stderr}");
}

#[test]
fn parse_failures_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "bad.txt", "a b\nbroken-line\n");
    let out = run(&[input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    let out = run(&["/definitely/not/here"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn kcore_and_heuristic_fragments() {
    let dir = tempfile::tempdir().unwrap();
    let mut text = String::new();
    for u in 0..4 {
        for v in u + 1..4 {
            text.push_str(&format!("{u} {v}\n"));
        }
    }
    let input = write(dir.path(), "k4.txt", &text);
    let kcore = json_of(&run(&["kcore", input.to_str().unwrap()]));
    assert_eq!(kcore["graph_core_number"], 3);
    assert_eq!(kcore["clique_upper_bound"], 4);
    let heur = json_of(&run(&["heuristic", input.to_str().unwrap()]));
    assert_eq!(heur["heuristic_size"], 4);
}

#[test]
fn profile_emits_expected_csv() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(
        dir.path(),
        "records.csv",
        "p1,a,1.0\np1,b,4.0\np2,a,2.0\np2,b,8.0\n",
    );
    let out = run(&["profile", input.to_str().unwrap()]);
    assert!(out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert_eq!(stdout, "config,tau,fraction\na,0,1\nb,2,1\n");
}

#[test]
fn profile_mismatch_exits_two_listing_difference() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "records.csv", "p1,a,1.0\np2,a,1.0\np1,b,2.0\n");
    let out = run(&["profile", input.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("b: missing p2"), "{stderr}");
}

#[test]
fn gzip_input_is_accepted() {
    use std::io::Write as _;
    let dir = tempfile::tempdir().unwrap();
    let mut enc =
        flate2::write::GzEncoder::new(Vec::new(), flate2::Compression::default());
    enc.write_all(b"0 1\n1 2\n0 2\n").unwrap();
    let path = dir.path().join("tri.txt.gz");
    std::fs::write(&path, enc.finish().unwrap()).unwrap();
    let report = json_of(&run(&[path.to_str().unwrap()]));
    assert_eq!(report["clique_size"], 3);
}

#[test]
fn human_output_is_one_line_summary() {
    let dir = tempfile::tempdir().unwrap();
    let input = write(dir.path(), "e.txt", "0 1\n");
    let out = run(&[input.to_str().unwrap(), "--human"]);
    assert!(out.status.success());
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.contains("omega=2"), "{stdout}");
    assert!(!stdout.contains('{'));
}

#[test]
fn seed_flag_keeps_answers_stable() {
    let dir = tempfile::tempdir().unwrap();
    let mut text = String::new();
    let mut state = 99u64;
    for u in 0..25u64 {
        for v in u + 1..25 {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            if state >> 40 & 0xff < 120 {
                text.push_str(&format!("{u} {v}\n"));
            }
        }
    }
    let input = write(dir.path(), "g.txt", &text);
    let base = json_of(&run(&[input.to_str().unwrap(), "--threads", "4"]));
    for seed in ["1", "2", "3"] {
        let perturbed = json_of(&run(&[
            input.to_str().unwrap(),
            "--threads",
            "4",
            "--seed",
            seed,
        ]));
        assert_eq!(base["clique_size"], perturbed["clique_size"], "seed {seed}");
    }
}
