use std::path::Path;
use std::process::{Command, Output};

fn og4kit(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_og4kit")).current_dir(dir).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn doc_vertices(path: &Path) -> u64 {
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    v["n"].as_u64().unwrap()
}

#[test]
fn construct_writes_documents() {
    let dir = tempfile::tempdir().unwrap();
    let o = og4kit(dir.path(), &["construct", "gamma", "3", "3", "--group", "G", "--orient", "con1", "-o", "g.json"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(doc_vertices(&dir.path().join("g.json")), 9);

    let o = og4kit(dir.path(), &["construct", "gamma-plus", "4", "4", "--group", "H", "--orient", "con2c", "-o", "p.json"]);
    assert!(o.status.success());
    assert_eq!(doc_vertices(&dir.path().join("p.json")), 8);
}

#[test]
fn construct_rejects_bad_parameters() {
    let dir = tempfile::tempdir().unwrap();
    let o = og4kit(dir.path(), &["construct", "double", "3", "4"]);
    assert_eq!(o.status.code(), Some(2));
    let o = og4kit(dir.path(), &["construct", "gamma", "4", "4"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn analyze_reports_membership() {
    let dir = tempfile::tempdir().unwrap();
    og4kit(dir.path(), &["construct", "gamma", "3", "4", "-o", "g.json"]);
    let o = og4kit(dir.path(), &["analyze", "g.json"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("OG(4): yes; |G_x| = 2"), "{}", stdout(&o));
}

#[test]
fn quotients_of_the_wreath_product() {
    let dir = tempfile::tempdir().unwrap();
    og4kit(dir.path(), &["construct", "lex-cycle", "9", "-o", "lex.json"]);
    let o = og4kit(dir.path(), &["--json", "quotients", "lex.json", "--csv", "c.csv"]);
    assert!(o.status.success());
    let rows: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let mut shape: Vec<(u64, bool)> = rows
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r["length"].as_u64().unwrap(), r["oriented"].as_bool().unwrap()))
        .collect();
    shape.sort();
    assert_eq!(shape, vec![(3, true), (9, true)]);
    assert!(std::fs::read_to_string(dir.path().join("c.csv")).unwrap().lines().count() >= 3);
}

#[test]
fn classify_finds_line_three() {
    let dir = tempfile::tempdir().unwrap();
    og4kit(dir.path(), &["construct", "gamma", "3", "4", "--group", "H", "--orient", "con2c", "-o", "h.json"]);
    let o = og4kit(dir.path(), &["classify", "h.json"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("Table 1 line 3 with (r, s) = (3, 4)"), "{}", stdout(&o));
}

#[test]
fn meta_accepts_generator_indices_and_images() {
    let dir = tempfile::tempdir().unwrap();
    og4kit(dir.path(), &["construct", "gamma", "3", "4", "--group", "H", "--orient", "con2c", "-o", "h.json"]);
    let o = og4kit(dir.path(), &["meta", "h.json", "0", "1"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("weak metacirculant: yes"));
    let o = og4kit(dir.path(), &["meta", "h.json", "0", "9"]);
    assert_eq!(o.status.code(), Some(2));
    let o = og4kit(dir.path(), &["meta", "--element", "h.json", "0,1", "1,0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn export_writes_dot_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    og4kit(dir.path(), &["construct", "double", "3", "3", "-o", "d.json"]);
    let o = og4kit(dir.path(), &["export", "d.json", "--dot", "d.dot", "--csv", "d.csv"]);
    assert!(o.status.success());
    let dot = std::fs::read_to_string(dir.path().join("d.dot")).unwrap();
    assert!(dot.starts_with("graph"));
    assert!(dir.path().join("d.csv").exists());
    let o = og4kit(dir.path(), &["export", "d.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn missing_and_malformed_documents() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(og4kit(dir.path(), &["analyze", "nope.json"]).status.code(), Some(2));
    std::fs::write(dir.path().join("bad.json"), "{\"n\": 3}").unwrap();
    assert_eq!(og4kit(dir.path(), &["analyze", "bad.json"]).status.code(), Some(2));
}

#[test]
fn verify_runs_named_suites() {
    let dir = tempfile::tempdir().unwrap();
    for suite in ["theorem1a", "table1"] {
        let o = og4kit(dir.path(), &["verify", suite]);
        assert!(o.status.success(), "{suite}: {}", stdout(&o));
        assert!(stdout(&o).contains(&format!("PASS {suite}")));
    }
    assert_eq!(og4kit(dir.path(), &["verify", "nosuchsuite"]).status.code(), Some(2));
}

#[test]
fn bound_exceeded_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    og4kit(dir.path(), &["construct", "lex-cycle", "9", "-o", "lex.json"]);
    let o = og4kit(dir.path(), &["--bound", "100", "quotients", "lex.json"]);
    assert_eq!(o.status.code(), Some(3), "{}", String::from_utf8_lossy(&o.stderr));
}
