use std::fs;
use std::path::Path;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tautring")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn build(dir: &Path, g: u32, label: &str) -> String {
    let path = dir.join(format!("g{g}{label}.json"));
    let o = run(&["build", "--genus", &g.to_string(), "--case", label, "--out", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    path.to_str().unwrap().to_owned()
}

#[test]
fn build_writes_canonical_model() {
    let dir = tempfile::tempdir().unwrap();
    let path = build(dir.path(), 6, "e");
    let text = fs::read_to_string(&path).unwrap();
    let printed = run(&["build", "--genus", "6", "--case", "e"]);
    assert_eq!(stdout(&printed), text);
    assert!(text.ends_with("}\n"));
}

#[test]
fn products_table() {
    let dir = tempfile::tempdir().unwrap();
    let path = build(dir.path(), 6, "d");
    let o = run(&["products", "--model", &path, "--product", "star", "--basis-only"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["product"], "star");
    let square = v["entries"].as_array().unwrap().iter().find(|e| e["left"]["index"] == serde_json::json!([1])).unwrap();
    assert_eq!(square["value"], serde_json::json!([{"coeff": "-3", "index": [2], "m": 1}]));
    assert_eq!(run(&["products", "--model", &path, "--product", "cup"]).status.code(), Some(2));
}

#[test]
fn fourier_of_cycle_file() {
    let dir = tempfile::tempdir().unwrap();
    let model = build(dir.path(), 5, "c");
    let cycle = dir.path().join("c.json");
    fs::write(&cycle, r#"{"genus":5,"terms":[{"index":[2],"m":0,"coeff":"2/3"}]}"#).unwrap();
    let o = run(&["fourier", "--model", &model, "--cycle", cycle.to_str().unwrap()]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["terms"], serde_json::json!([{"coeff": "2/3", "index": [2], "m": 1}]));

    fs::write(&cycle, r#"{"genus":5,"terms":[{"index":[3],"m":0,"coeff":"1"}]}"#).unwrap();
    assert_eq!(run(&["fourier", "--model", &model, "--cycle", cycle.to_str().unwrap()]).status.code(), Some(2));
    fs::write(&cycle, r#"{"genus":4,"terms":[]}"#).unwrap();
    assert_eq!(run(&["fourier", "--model", &model, "--cycle", cycle.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn enumerate_lists_dimensions() {
    let o = run(&["enumerate", "--genus", "7"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let dims: Vec<&str> = text.lines().map(|l| l.split_whitespace().nth(2).unwrap()).collect();
    assert_eq!(dims, ["8", "13", "15", "17", "19", "22"]);
    let o = run(&["enumerate", "--genus", "8", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 9);
    assert_eq!(run(&["enumerate", "--genus", "9"]).status.code(), Some(2));
}

#[test]
fn picture_of_model() {
    let dir = tempfile::tempdir().unwrap();
    let path = build(dir.path(), 4, "b");
    let o = run(&["picture", "--model", &path]);
    assert_eq!(stdout(&o), "4  J(C)\n3  Θ\n2  Γ^★2/2!  λ_{1}^[1]\n1  Γ        λ_{1}\n0  {o}\n");
}

#[test]
fn oracles() {
    let o = run(&["oracle", "xi-pair", "--genus", "7", "--i", "1", "--j", "1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["xi"]["2"], "-6");
    let o = run(&["oracle", "xi-triple", "--genus", "10", "--h", "1", "--i", "1", "--j", "1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["xi"], serde_json::json!({"2,1": "-18"}));
    assert_eq!(v["flagged"], serde_json::json!([]));
    assert_eq!(run(&["oracle", "xi-triple", "--genus", "10", "--h", "0", "--i", "1", "--j", "1"]).status.code(), Some(2));
}

#[test]
fn families() {
    let o = run(&["family", "trigonal", "--genus", "9", "--k", "3"]);
    assert_eq!(stdout(&o).trim(), "22");
    let o = run(&["family", "g14", "--genus", "8", "--klist", "2,1"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v, serde_json::json!({"column_count": 25, "formula_value": 3}));
    assert!(!o.stderr.is_empty());
    assert_eq!(run(&["family", "trigonal", "--genus", "6", "--k", "3"]).status.code(), Some(2));
}

#[test]
fn verify_scope() {
    let o = run(&["verify", "--scope", "forced-relations"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("PASS forced-relations"));
    assert_eq!(run(&["verify", "--scope", "everything"]).status.code(), Some(2));
}

#[test]
fn bad_input_exit_codes() {
    assert_eq!(run(&["build", "--genus", "6", "--case", "z"]).status.code(), Some(2));
    assert_eq!(run(&["products", "--model", "/nonexistent.json", "--product", "dot"]).status.code(), Some(2));
    assert_eq!(run(&[]).status.code(), Some(2));
}
