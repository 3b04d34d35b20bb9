use std::path::Path;
use std::process::{Command, Output};

fn qtri(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qtri")).args(args).current_dir(dir).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn catalog(dir: &Path, file: &str, args: &[&str]) {
    let mut all = vec!["catalog"];
    all.extend_from_slice(args);
    all.extend_from_slice(&["--out", file]);
    let o = qtri(&all, dir);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn a2_round_trip_through_files() {
    let dir = tempfile::tempdir().unwrap();
    catalog(dir.path(), "a2.json", &["dj", "--type", "A", "--rank", "2"]);

    let o = qtri(&["classify", "a2.json"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("DJ-type, Cartan A2, finite type, finite GK-dim predicted"));

    let o = qtri(&["nichols", "a2.json", "--max-degree", "4"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("Hilbert dims 1,2,4,6,9"));

    let o = qtri(&["verify-hopf", "a2.json"], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
}

#[test]
fn json_reports_carry_a_version() {
    let dir = tempfile::tempdir().unwrap();
    catalog(dir.path(), "b2.json", &["dj", "--type", "B", "--rank", "2"]);
    let o = qtri(&["nichols", "b2.json", "--max-degree", "3", "--relations", "--json"], dir.path());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["version"], 1);
    assert_eq!(v["command"], "nichols");
    assert_eq!(v["hilbert_dims"], serde_json::json!([1, 2, 4, 7]));
    assert!(v["relations"][1]["basis"].as_array().unwrap().iter().all(|b| b.is_array()));

    let o = qtri(&["validate", "b2.json", "--json"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
}

#[test]
fn exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(qtri(&["classify", "missing.json"], dir.path()).status.code(), Some(2));
    assert_eq!(qtri(&["no-such-command"], dir.path()).status.code(), Some(2));
    assert_eq!(qtri(&["catalog", "dj", "--type", "Q", "--rank", "2"], dir.path()).status.code(), Some(2));

    // a corrupted character fails validation with exit code 1
    catalog(dir.path(), "a1.json", &["dj", "--type", "A", "--rank", "1"]);
    let text = std::fs::read_to_string(dir.path().join("a1.json")).unwrap();
    let mut v: serde_json::Value = serde_json::from_str(&text).unwrap();
    v["degrees_l"] = serde_json::json!([[-2]]);
    std::fs::write(dir.path().join("bad.json"), v.to_string()).unwrap();
    let o = qtri(&["validate", "bad.json"], dir.path());
    assert_eq!(o.status.code(), Some(1), "{}", stdout(&o));
    assert_eq!(qtri(&["verify-hopf", "bad.json", "--max-degree", "2"], dir.path()).status.code(), Some(1));
}

#[test]
fn limit_reports() {
    let dir = tempfile::tempdir().unwrap();
    catalog(dir.path(), "a1.json", &["dj", "--type", "A", "--rank", "1"]);
    let o = qtri(&["limit", "a1.json", "--json"], dir.path());
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["specializable"]["verdict"], "ok");
    assert_eq!(v["sl2"]["passed"], true);

    // an explicit root overriding the declared one
    let o = qtri(&["limit", "a1.json", "--sqrt", "1=q"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    let o = qtri(&["limit", "a1.json", "--sqrt", "1=q^2"], dir.path());
    assert_eq!(o.status.code(), Some(2));

    catalog(dir.path(), "mixed.json", &["mixed", "--p", "3"]);
    let o = qtri(&["limit", "mixed.json", "--json"], dir.path());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["specializable"]["verdict"], "cyclotomic obstruction");
}

#[test]
fn twist_of_gl2() {
    let dir = tempfile::tempdir().unwrap();
    catalog(dir.path(), "gl2.json", &["multiparameter-gl", "--n", "2"]);
    let o = qtri(&["twist", "gl2.json", "gl2.json"], dir.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("twist equivalent"));
}

#[test]
fn catalog_listing() {
    let dir = tempfile::tempdir().unwrap();
    let o = qtri(&["catalog", "--json"], dir.path());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let names: Vec<_> = v["entries"].as_array().unwrap().iter().map(|e| e["name"].as_str().unwrap().to_string()).collect();
    assert_eq!(names, ["dj", "multiparameter-gl", "radford", "cartan-not-dj", "mixed"]);
    let o = qtri(&["catalog", "radford", "--r", "3"], dir.path());
    assert!(stdout(&o).contains("\"kind\": \"double\""));
}
