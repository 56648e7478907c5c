use std::process::{Command, Output};

use serde_json::Value;

fn normgraph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_normgraph"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = normgraph(args);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn analyze_examples() {
    let r = json(&["analyze", "prod(S3,S3)", "--graph", "delta"]);
    assert_eq!(r["graphs"]["delta"]["strongly_connected"], true);
    assert_eq!(r["graphs"]["delta"]["diameter"], 3);

    let r = json(&["analyze", "Mod16", "--graph", "gamma"]);
    assert_eq!(r["sizes"]["univ"], 6);
    assert_eq!(r["univ_is_subgroup"], false);
    assert_eq!(r["graphs"]["gamma"]["complete_undirected"], true);

    let r = json(&["analyze", "S4"]);
    assert_eq!(r["graphs"]["delta"]["scc_count"], 5);
    assert_eq!(r["graphs"]["delta"]["scc_sizes"], serde_json::json!([15, 2, 2, 2, 2]));
    assert_eq!(r["classification"]["two_frobenius_orders"], serde_json::json!([4, 3, 8]));
}

#[test]
fn analyze_text_and_all_selectors() {
    let out = normgraph(&[
        "analyze", "D:10", "--format", "text", "--graph", "gamma", "--graph", "ugamma", "--graph", "nil",
        "--graph", "comm", "--graph", "ssol", "--graph", "udelta",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    for g in ["gamma", "ugamma", "nil", "comm", "ssol", "udelta"] {
        assert!(text.contains(&format!("graph {g}:")), "{g} missing in {text}");
    }
    assert!(text.contains("Frobenius (|K| = 5)"));
}

#[test]
fn bad_inputs_exit_nonzero() {
    assert_eq!(normgraph(&["analyze", "nonsense(3"]).status.code(), Some(2));
    assert_eq!(normgraph(&["analyze", "S4", "--graph", "bogus"]).status.code(), Some(2));
    assert_eq!(normgraph(&["verify", "--suite", "other", "--group", "C6"]).status.code(), Some(2));
}

#[test]
fn verify_small_group_is_mostly_not_applicable() {
    let out = normgraph(&["verify", "--suite", "paper", "--group", "C:6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let na = text.lines().filter(|l| l.starts_with("n/a")).count();
    let pass = text.lines().filter(|l| l.starts_with("pass")).count();
    assert!(na > pass, "{text}");
    assert!(text.contains("summary: "));
}

#[test]
fn verify_json_is_deterministic() {
    let a = normgraph(&["verify", "--group", "S4", "--group", "F21", "--format", "json"]);
    let b = normgraph(&["verify", "--group", "S4", "--group", "F21", "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["summary"]["fail"], 0);
    assert_eq!(v["results"].as_array().unwrap().len(), 48);
}

#[test]
fn catalog_listing() {
    let out = normgraph(&["catalog", "list"]);
    assert!(stdout(&out).lines().any(|l| l == "TwoFrob294 (order 294)"));
}

#[test]
fn dot_export() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s3.dot");
    let out = normgraph(&["export-dot", "S3", "--graph", "delta", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("digraph"));
    assert_eq!(text.matches("[label=").count(), 5);

    let sym = stdout(&normgraph(&["export-dot", "S3", "--graph", "udelta"]));
    assert!(sym.contains("dir=both"));

    let also = dir.path().join("side.dot");
    let out = normgraph(&["analyze", "F21", "--dot", also.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(std::fs::read_to_string(also).unwrap().contains("->"));
}

#[test]
fn cayley_round_trip_matches_named_analysis() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["S4", "Mod16", "F20", "prod(C3,S3)", "Q16"] {
        let table = normgraph(&["catalog", "export", name]);
        assert!(table.status.success());
        let path = dir.path().join("g.json");
        std::fs::write(&path, &table.stdout).unwrap();
        let spec = format!("file:{}", path.display());
        let by_file = json(&["analyze", &spec, "--graph", "gamma", "--graph", "delta"]);
        let by_name = json(&["analyze", name, "--graph", "gamma", "--graph", "delta"]);
        assert_eq!(by_file, by_name, "{name}");
    }
}

#[test]
fn corrupted_table_exits_with_error() {
    let dir = tempfile::tempdir().unwrap();
    let table = normgraph(&["catalog", "export", "S3"]);
    let mut doc: Value = serde_json::from_slice(&table.stdout).unwrap();
    // swap two entries of one row: still a Latin row, no longer a group
    let row = doc["table"][1].as_array_mut().unwrap();
    row.swap(2, 3);
    let path = dir.path().join("bad.json");
    std::fs::write(&path, doc.to_string()).unwrap();
    let spec = format!("file:{}", path.display());
    let out = normgraph(&["verify", "--suite", "paper", "--group", &spec]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("error"));
    assert_eq!(normgraph(&["analyze", &spec]).status.code(), Some(2));
}

#[test]
fn failing_check_exits_one() {
    // A table declared as SmallGroup(64,28) that is not of order 64 makes the
    // library-group check fail.
    let dir = tempfile::tempdir().unwrap();
    let table = normgraph(&["catalog", "export", "C4"]);
    let mut doc: Value = serde_json::from_slice(&table.stdout).unwrap();
    doc["name"] = Value::from("SmallGroup(64,28)");
    let path = dir.path().join("sg64_28.json");
    std::fs::write(&path, doc.to_string()).unwrap();
    let spec = format!("file:{}", path.display());
    let out = normgraph(&["verify", "--suite", "paper", "--group", &spec]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stdout(&out).lines().any(|l| l.starts_with("fail") && l.contains("V24")));
}
