use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn pezzo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pezzo")).args(args).env_remove("PEZZO_CATALOG").output().expect("binary runs")
}

fn with_catalog(name: &str, json: &str, args: &[&str]) -> Output {
    let path = scratch(name);
    fs::write(&path, json).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_pezzo")).args(args).env("PEZZO_CATALOG", &path).output().unwrap();
    let _ = fs::remove_file(path);
    out
}

fn scratch(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("pezzo-cli-{}-{name}", std::process::id()))
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const D7: &str = r#"{"entries": [{"id": "d7-A1", "degree": 7, "singularity": "A1",
    "points": [{"id": "p1"}, {"id": "p2", "parent": "p1"}]}]}"#;

#[test]
fn lct_of_degree_seven() {
    let o = pezzo(&["lct", "--surface", "d7-A1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().next(), Some("1/4"));
}

#[test]
fn lct_json_has_reduced_rationals() {
    let o = pezzo(&["lct", "--surface", "d6-A1A2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["value"], "1/6");
    assert_eq!(v["mode"], "default-snc");
}

#[test]
fn degree_six_table_csv() {
    let o = pezzo(&["table", "--degree", "6", "--format", "csv"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("degree,sigma,expected,computed,witness,match"));
    let mut got: Vec<(String, String, String)> = lines
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            (f[1].to_string(), f[3].to_string(), f[f.len() - 1].to_string())
        })
        .collect();
    got.sort();
    let want = [("2A1", "1/4"), ("A1", "1/3"), ("A1+A2", "1/6"), ("A2", "1/4")];
    assert_eq!(got, want.map(|(s, v)| (s.to_string(), v.to_string(), "true".to_string())));
}

#[test]
fn unknown_id_exits_two() {
    let o = pezzo(&["show", "--surface", "d9-nothing"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("d9-nothing"));
}

#[test]
fn label_mismatch_exits_three() {
    let bad = D7.replace("\"A1\"", "\"A2\"");
    let o = with_catalog("mismatch.json", &bad, &["show", "--surface", "d7-A1"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn malformed_catalog_exits_three() {
    let o = with_catalog("malformed.json", "{\"entries\": 5}", &["catalog"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn custom_catalog_is_used() {
    let o = with_catalog("custom.json", D7, &["catalog", "--format", "csv"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "id,degree,sigma,source\nd7-A1,7,A1,plane\n");
}

#[test]
fn verify_mismatch_exits_one() {
    // the spot values need surfaces this catalog lacks
    let o = with_catalog("partial.json", D7, &["verify"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL criterion 1"));
    assert!(stdout(&o).contains("PASS criterion 3"));
}

#[test]
fn empty_export() {
    for (format, want) in [("json", "[]\n"), ("dot", "")] {
        let o = pezzo(&["export", "--degree", "9", "--format", format]);
        assert!(o.status.success());
        assert_eq!(stdout(&o), want);
    }
}

#[test]
fn dot_export_per_config() {
    let o = pezzo(&["export", "--surface", "d5-A2", "--format", "dot"]);
    let text = stdout(&o);
    let graphs = text.matches("graph \"d5-A2 #").count();
    let configs = stdout(&pezzo(&["enumerate", "--surface", "d5-A2", "--format", "csv"])).lines().count() - 1;
    assert!(graphs > 0 && graphs <= configs);
}

#[test]
fn deterministic_output() {
    let args = ["enumerate", "--surface", "d4-D5", "--format", "json"];
    assert_eq!(pezzo(&args).stdout, pezzo(&args).stdout);
    let args = ["propagate", "--stratum", "2", "--degree", "4"];
    assert_eq!(pezzo(&args).stdout, pezzo(&args).stdout);
}

#[test]
fn out_flag_writes_file() {
    let path = scratch("out.txt");
    let o = pezzo(&["lct", "--surface", "d7-A1", "--out", path.to_str().unwrap()]);
    assert!(o.status.success() && o.stdout.is_empty());
    assert!(fs::read_to_string(&path).unwrap().starts_with("1/4\n"));
    let _ = fs::remove_file(path);
}

#[test]
fn bad_flags_are_usage_errors() {
    assert_eq!(pezzo(&["lct", "--surface", "d7-A1", "--mode", "sideways"]).status.code(), Some(2));
    assert_eq!(pezzo(&["table", "--degree", "6", "--format", "dot"]).status.code(), Some(2));
    assert_eq!(pezzo(&["propagate", "--stratum", "5"]).status.code(), Some(2));
}

#[test]
fn pessimistic_mode_runs() {
    let o = pezzo(&["lct", "--surface", "d6-A2", "--mode", "pessimistic"]);
    assert!(o.status.success());
}
