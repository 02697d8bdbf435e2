use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn rdelta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rdelta")).args(args).output().expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("json on stdout")
}

fn workspace() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn fixture(name: &str) -> String {
    workspace().join("crates/core/tests/fixtures").join(name).display().to_string()
}

fn scratch(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join(name);
    let _ = fs::remove_dir_all(&dir);
    fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn exit_codes() {
    assert_eq!(rdelta(&["analyze", "/no/such/file"]).status.code(), Some(2));
    assert_eq!(rdelta(&["analyze", "builtin:nonsense"]).status.code(), Some(2));
    assert_eq!(rdelta(&["gamma", "1,2,3"]).status.code(), Some(3));
    assert_eq!(rdelta(&["shelling", "builtin:rp2", "--budget", "10"]).status.code(), Some(4));
    assert_eq!(rdelta(&["analyze", "builtin:path3", "--chars", "4"]).status.code(), Some(2));
    assert_eq!(rdelta(&["analyze", "builtin:path3", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(rdelta(&["gb", "builtin:path3", "--order", "123,999"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let a = rdelta(&["analyze", "builtin:octahedron"]);
    let b = rdelta(&["analyze", "builtin:octahedron"]);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn echo_betti_tables() {
    let ideal = fixture("echo_ideal.json");
    for (mode, imax, golden) in [("hochster", "2", "echo_left.txt"), ("gamma-module", "7", "echo_right.txt")] {
        let out = rdelta(&["betti", &ideal, "--mode", mode, "--imax", imax, "--chars", "0", "--format", "m2"]);
        assert!(out.status.success());
        let text = String::from_utf8(out.stdout).unwrap();
        let body: String = text.lines().skip(1).map(|l| format!("{l}\n")).collect();
        assert_eq!(body, fs::read_to_string(fixture(golden)).unwrap(), "{mode}");
    }
}

#[test]
fn octahedron_presentation() {
    let v = json_of(&rdelta(&["present", "builtin:octahedron", "--format", "json"]));
    assert_eq!(v["generators"].as_array().unwrap().len(), 81);
    assert_eq!(v["variables"].as_array().unwrap().len(), 20);
    assert!(v["generators"].as_array().unwrap().iter().all(|g| g["degree"] == 2));
    let m2 = rdelta(&["present", "builtin:octahedron", "--format", "m2"]);
    assert!(String::from_utf8(m2.stdout).unwrap().contains("ideal"));
}

#[test]
fn gb_reports_a_failing_pair_for_a_bad_order() {
    let bad = json_of(&rdelta(&["gb", "builtin:path3", "--order", "123,345,234"]));
    assert_eq!(bad["quadratic_gb"], false);
    assert_eq!(bad["is_shelling_order"], false);
    assert!(bad["failed_pair"]["remainder"].as_str().is_some_and(|r| r != "0"));
    let good = json_of(&rdelta(&["gb", "builtin:path3", "--order", "123,234,345"]));
    assert_eq!(good["quadratic_gb"], true);
    assert_eq!(good["is_shelling_order"], true);
}

#[test]
fn gamma_outputs() {
    let v = json_of(&rdelta(&["gamma", "1,14,24,14,1"]));
    assert_eq!(v["gamma"], serde_json::json!([1, 10, -2]));
    let v = json_of(&rdelta(&["gamma", "builtin:rp2", "--chars", "0"]));
    assert_eq!(v["gamma"], serde_json::json!([1, 27, 0]));
}

#[test]
fn verify_green_and_corrupted() {
    let corpus = workspace().join("corpus");
    let dir = scratch("verify_green");
    for name in ["path3.json", "square.json", "two_edges.json", "cross2.txt"] {
        fs::copy(corpus.join(name), dir.join(name)).unwrap();
    }
    let out = rdelta(&["verify", dir.to_str().unwrap(), "--chars", "0,2"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["summary"]["fail"], 0);
    assert!(v["summary"]["pass"].as_u64().unwrap() > 10);

    let bad = scratch("verify_corrupted");
    let mut member: Value = serde_json::from_str(&fs::read_to_string(corpus.join("path3.json")).unwrap()).unwrap();
    member["expect"]["gamma"] = serde_json::json!([1, 5, 0]);
    fs::write(bad.join("path3.json"), member.to_string()).unwrap();
    let out = rdelta(&["verify", bad.to_str().unwrap(), "--chars", "0"]);
    assert_eq!(out.status.code(), Some(5));
    fs::write(bad.join("garbage.txt"), "this is not a complex {").unwrap();
    assert_eq!(rdelta(&["verify", bad.to_str().unwrap(), "--chars", "0"]).status.code(), Some(5));
}
