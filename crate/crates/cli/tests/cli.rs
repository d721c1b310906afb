//! End-to-end tests of the `mis` binary: output formats, input source
//! handling, and the 0/1/2 exit-code contract.

use std::io::Write;
use std::process::{Command, Output, Stdio};

fn mis(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mis"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn mis_with_stdin(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_mis"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .take()
        .expect("stdin piped")
        .write_all(stdin.as_bytes())
        .expect("stdin write");
    child.wait_with_output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(
        out.status.success(),
        "expected success, stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn bound_prints_value() {
    assert_eq!(stdout(&mis(&["bound", "7"])), "12\n");
}

#[test]
fn bound_table() {
    assert_eq!(
        stdout(&mis(&["bound", "--table", "3"])),
        "0 1\n1 1\n2 2\n3 3\n"
    );
}

#[test]
fn bound_check_passes() {
    let out = stdout(&mis(&["bound", "--check"]));
    assert_eq!(
        out,
        "sandwich: PASS\nnondecreasing: PASS\nproduct-partition: PASS\n"
    );
}

#[test]
fn bound_exit_codes() {
    assert_eq!(exit_code(&mis(&["bound", "200"])), 1);
    assert_eq!(exit_code(&mis(&["bound"])), 2);
}

#[test]
fn generate_families() {
    assert_eq!(stdout(&mis(&["generate", "moon-moser", "3"])), "Bw\n");
    assert_eq!(stdout(&mis(&["generate", "complete", "4"])), "C~\n");
    assert_eq!(exit_code(&mis(&["generate", "moon-moser", "1"])), 1);
    assert_eq!(exit_code(&mis(&["generate", "warp", "3"])), 2);
}

#[test]
fn count_from_stdin_graph6() {
    let out = mis_with_stdin(&["count", "--algo", "oracle"], "Bw\n");
    assert_eq!(stdout(&out), "3\n");
}

#[test]
fn count_inline_and_stats() {
    assert_eq!(stdout(&mis(&["count", "C~"])), "4\n");
    let out = stdout(&mis(&["count", "Bw", "--algo", "branching", "--stats"]));
    assert_eq!(
        out,
        "3\ncandidates_generated: 3\nrecursive_calls: 4\nmax_depth: 1\n"
    );
}

#[test]
fn count_empty_stdin_is_usage_error() {
    let out = mis_with_stdin(&["count"], "");
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn count_all_algorithms_agree_on_m7() {
    let m7 = stdout(&mis(&["generate", "moon-moser", "7"]));
    for algo in ["oracle", "branching", "pivot"] {
        let out = mis_with_stdin(&["count", "--algo", algo], &m7);
        assert_eq!(stdout(&out), "12\n", "algo {algo}");
    }
}

#[test]
fn enumerate_edge_list_input() {
    let out = mis_with_stdin(&["enumerate"], "n 3\n0 1\n1 2\n");
    assert_eq!(stdout(&out), "1\n0 2\n");
}

#[test]
fn enumerate_fixed_outputs() {
    assert_eq!(stdout(&mis(&["enumerate", "Bw"])), "0\n1\n2\n");
    // edgeless n = 3 is "B?" (two zero body bits padded)
    assert_eq!(stdout(&mis(&["enumerate", "B?"])), "0 1 2\n");
}

#[test]
fn format_override_beats_detection() {
    // "n 2" with --format graph6 must be rejected as multiple/invalid graph6,
    // not parsed as an edge list.
    let out = mis_with_stdin(&["count", "--format", "graph6"], "n 2\n");
    assert_eq!(exit_code(&out), 1);
    let out = mis_with_stdin(&["count", "--format", "edge-list"], "n 2\n");
    assert_eq!(stdout(&out), "1\n");
}

#[test]
fn count_reads_files() {
    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("g.g6");
    std::fs::write(&path, "Bw\n").expect("write");
    assert_eq!(stdout(&mis(&["count", path.to_str().unwrap()])), "3\n");
}

#[test]
fn count_rejects_malformed_inline() {
    let out = mis(&["count", "definitely-not-a-graph"]);
    assert_eq!(exit_code(&out), 1);
}

#[test]
fn verify_certificate_and_witnesses() {
    let out = stdout(&mis(&["verify", "4"]));
    assert!(out.contains("graphs_checked: 64\n"));
    assert!(out.contains("max_count_observed: 4\n"));
    assert!(out.contains("bound: 4\n"));
    assert!(out.contains("extremal_classes: 2\n"));

    let dir = tempfile::tempdir().expect("tempdir");
    let path = dir.path().join("w.g6");
    let out = mis(&["verify", "2", "--witnesses", path.to_str().unwrap()]);
    assert!(out.status.success());
    let witnesses = std::fs::read_to_string(&path).expect("witness file");
    assert_eq!(witnesses, "A_\n"); // K_2
}

#[test]
fn verify_caps() {
    assert_eq!(exit_code(&mis(&["verify", "8"])), 1); // needs --long-run
    assert_eq!(exit_code(&mis(&["verify", "9"])), 1);
    assert_eq!(exit_code(&mis(&["verify", "9", "--long-run"])), 1);
}

#[test]
fn verify_jobs_do_not_change_output() {
    let serial = stdout(&mis(&["verify", "5", "--jobs", "1"]));
    let parallel = stdout(&mis(&["verify", "5", "--jobs", "4"]));
    let strip = |s: &str| {
        s.lines()
            .filter(|l| !l.starts_with("elapsed_ms"))
            .collect::<Vec<_>>()
            .join("\n")
    };
    assert_eq!(strip(&serial), strip(&parallel));
}

#[test]
fn bench_emits_tsv() {
    let out = stdout(&mis(&[
        "bench", "--family", "complete", "--n-min", "4", "--n-max", "8", "--algo", "pivot",
    ]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "n\tcount\tseconds\tratio");
    assert_eq!(lines.len(), 6);
    let counts: Vec<&str> = lines[1..]
        .iter()
        .map(|l| l.split('\t').nth(1).unwrap())
        .collect();
    assert_eq!(counts, vec!["4", "5", "6", "7", "8"]);
}

#[test]
fn bench_moon_moser_steps_by_three() {
    let out = stdout(&mis(&[
        "bench",
        "--family",
        "moon-moser",
        "--n-min",
        "9",
        "--n-max",
        "21",
        "--algo",
        "pivot",
    ]));
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), 5);
    let ns: Vec<&str> = rows.iter().map(|l| l.split('\t').next().unwrap()).collect();
    assert_eq!(ns, vec!["9", "12", "15", "18", "21"]);
    let counts: Vec<&str> = rows.iter().map(|l| l.split('\t').nth(1).unwrap()).collect();
    assert_eq!(counts, vec!["27", "81", "243", "729", "2187"]);
}

#[test]
fn bench_rejects_inverted_range() {
    assert_eq!(
        exit_code(&mis(&["bench", "--n-min", "9", "--n-max", "3"])),
        2
    );
}

#[test]
fn identical_invocations_are_deterministic() {
    for args in [
        vec!["enumerate", "DJ_"],
        vec!["count", "F`K}?", "--algo", "branching", "--stats"],
        vec!["bound", "--table", "20"],
        vec!["generate", "moon-moser", "30"],
    ] {
        assert_eq!(stdout(&mis(&args)), stdout(&mis(&args)), "{args:?}");
    }
}
