use edgereg::Graph;
use serde_json::Value;
use std::io::Write;
use std::process::{Command, Output, Stdio};

fn edgereg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edgereg"))
        .args(args)
        .env_remove("EDGEREG_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn betti_examples() {
    let o = edgereg(&["betti", "--builder", "cycle:4"]);
    assert!(o.status.success());
    let t = &json_lines(&o)[0];
    assert_eq!(t["reg"], 2);
    assert!(t["entries"].as_array().unwrap().iter().all(|e| e["j"].as_i64().unwrap() == e["i"].as_i64().unwrap() + 2));

    let o = edgereg(&["betti", "--builder", "cycle:5", "--power", "2", "--oracle"]);
    assert!(o.status.success());
    assert_eq!(json_lines(&o)[0]["reg"], 4);

    let k2 = Graph::complete(2).unwrap().to_string();
    let o = edgereg(&["betti", "--graph6", &k2]);
    let t = &json_lines(&o)[0];
    assert_eq!(t["entries"], serde_json::json!([{"i": 0, "j": 2, "beta": 1}]));
}

#[test]
fn betti_of_an_ideal_over_gf2() {
    let o = edgereg(&["betti", "--ideal", "x0*x1, x1*x2", "--field", "GF(2)", "--multi"]);
    assert!(o.status.success());
    let t = &json_lines(&o)[0];
    assert_eq!(t["field"], "GF(2)");
    assert_eq!(t["reg"], 2);
    assert!(t["multi"].is_array());
}

#[test]
fn exit_codes() {
    assert_eq!(edgereg(&["betti", "--graph6", "!!"]).status.code(), Some(2));
    assert_eq!(edgereg(&["betti", "--builder", "wheel:5"]).status.code(), Some(2));
    assert_eq!(edgereg(&["betti", "--builder", "cycle:4", "--field", "GF(4)"]).status.code(), Some(2));
    assert_eq!(edgereg(&["verify", "--statement", "nope", "--builder", "cycle:4"]).status.code(), Some(2));
    let o = edgereg(&["betti", "--builder", "complete:6", "--power", "3", "--lattice-cap", "50"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(o.stdout.is_empty());
    assert!(!o.stderr.is_empty());
}

#[test]
fn suspend_examples() {
    let p3 = Graph::path(3).unwrap().to_string();
    let o = edgereg(&["suspend", "--graph6", &p3, "--set", "0,2"]);
    assert!(o.status.success());
    let star = Graph::from_edges(4, &[(0, 1), (1, 2), (1, 3)]).unwrap().to_string();
    assert_eq!(stdout(&o).trim(), star);

    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("r.jsonl");
    let o = edgereg(&[
        "suspend", "--builder", "complete:2", "--all", "--verify", "--report", report.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 3);
    let reports = std::fs::read_to_string(&report).unwrap();
    assert_eq!(reports.lines().count(), 3);
    assert!(reports.lines().all(|l| l.contains("\"verdict\":\"pass\"")));

    let o = edgereg(&["suspend", "--graph6", &p3, "--set", "0,1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn extend_invariant_extensions() {
    let o = edgereg(&["extend", "--builder", "cycle:5", "--invariant", "--distinct"]);
    assert!(o.status.success());
    let lines = json_lines(&o);
    assert!(!lines.is_empty());
    assert!(lines.iter().all(|l| l["invariant"] == true && l["im"] == 1 && l["reg"] == 3));
    let all = json_lines(&edgereg(&["extend", "--builder", "cycle:5"]));
    assert_eq!(all.len(), 31);
}

#[test]
fn verify_examples() {
    let o = edgereg(&["verify", "--statement", "main2", "--builder", "cycle:4", "--set", "0,2", "--kmax", "3"]);
    assert!(o.status.success());
    assert_eq!(json_lines(&o)[0]["verdict"], "pass");

    let o = edgereg(&["verify", "--statement", "keylemma", "--builder", "cycle:5", "--cover", "0,1,3", "--k", "2"]);
    assert!(o.status.success());
    assert_eq!(json_lines(&o).len(), 3);

    let o = edgereg(&[
        "verify", "--statement", "betti-splitting", "--ideal", "x0^2, x0*x1, x1^2", "--j-ideal", "x0^2, x1^2",
        "--k-ideal", "x0*x1",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let r = &json_lines(&o)[0];
    assert_eq!(r["verdict"], "fail");
    assert_eq!((r["witness"]["i"].as_i64(), r["witness"]["j"].as_i64()), (Some(1), Some(4)));
}

#[test]
fn verify_froberg_family_with_summary() {
    let dir = tempfile::tempdir().unwrap();
    let summary = dir.path().join("s.csv");
    let o = edgereg(&[
        "verify", "--statement", "froberg", "--max-n", "6", "--summary", summary.to_str().unwrap(),
    ]);
    assert!(o.status.success());
    let csv = std::fs::read_to_string(&summary).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("statement,instances,pass,fail,skipped"));
    let row: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(row[0], "froberg");
    assert_eq!(row[3], "0");
}

#[test]
fn scan_np_is_complete_and_sorted() {
    let o = edgereg(&["scan", "--conjecture", "np", "--max-n", "6", "--kmax", "2"]);
    assert!(o.status.success());
    let lines = json_lines(&o);
    assert!(!lines.is_empty());
    assert!(lines.iter().all(|l| l["verdict"] == "pass"));
    let keys: Vec<String> = lines.iter().map(|l| l["instance"]["graph6"].as_str().unwrap().to_string()).collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    let again = edgereg(&["scan", "--conjecture", "np", "--max-n", "6", "--kmax", "2"]);
    assert_eq!(o.stdout, again.stdout);
}

#[test]
fn scan_newconj2_reports_extensions() {
    let o = edgereg(&["scan", "--conjecture", "newconj2", "--builder", "cycle:5", "--cg", "2", "--kmax", "3"]);
    assert!(o.status.success());
    let r = &json_lines(&o)[0];
    assert_eq!(r["statement"], "newconj2");
    assert!(r["details"]["extension_classes"].as_u64().unwrap() > 0);
}

#[test]
fn empty_input_file_gives_empty_output() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.g6");
    std::fs::write(&empty, "").unwrap();
    for cmd in [
        vec!["scan", "--conjecture", "np"],
        vec!["verify", "--statement", "froberg"],
        vec!["betti"],
    ] {
        let mut args = cmd.clone();
        args.extend(["--graph6-file", empty.to_str().unwrap()]);
        let o = edgereg(&args);
        assert!(o.status.success());
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn graph6_from_stdin() {
    let c5 = Graph::cycle(5).unwrap().to_string();
    let mut child = Command::new(env!("CARGO_BIN_EXE_edgereg"))
        .args(["betti", "--graph6-file", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    writeln!(child.stdin.take().unwrap(), ">>graph6<<{c5}").unwrap();
    let o = child.wait_with_output().unwrap();
    assert!(o.status.success());
    assert_eq!(json_lines(&o)[0]["reg"], 3);
}

#[test]
fn cache_is_transparent() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["scan", "--conjecture", "general-np", "--max-n", "5", "--kmax", "2"];
    let plain = edgereg(&args);
    let run_cached = || {
        Command::new(env!("CARGO_BIN_EXE_edgereg"))
            .args(args)
            .env("EDGEREG_CACHE_DIR", dir.path())
            .output()
            .unwrap()
    };
    let first = run_cached();
    assert!(std::fs::read_dir(dir.path()).unwrap().next().is_some());
    let second = run_cached();
    assert_eq!(plain.stdout, first.stdout);
    assert_eq!(plain.stdout, second.stdout);

    let b1 = edgereg(&["betti", "--builder", "cycle:6", "--power", "2", "--cache-dir", dir.path().to_str().unwrap()]);
    let b2 = edgereg(&["betti", "--builder", "cycle:6", "--power", "2", "--cache-dir", dir.path().to_str().unwrap()]);
    let b3 = edgereg(&["betti", "--builder", "cycle:6", "--power", "2"]);
    assert_eq!(b1.stdout, b2.stdout);
    assert_eq!(b1.stdout, b3.stdout);
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("o.jsonl");
    let o = edgereg(&["betti", "--builder", "path:4", "--out", out.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(out).unwrap();
    assert!(text.contains("\"reg\":2"));
}
