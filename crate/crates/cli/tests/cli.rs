use serde_json::Value;
use std::path::Path;
use std::process::{Command, Output};

fn kronlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kronlab")).args(args).output().expect("spawn kronlab")
}

fn run_to_file(args: &[&str], dir: &Path, name: &str) -> (i32, Value) {
    let path = dir.join(name);
    let mut all: Vec<&str> = args.to_vec();
    let p = path.to_str().unwrap().to_string();
    all.push("--out");
    all.push(&p);
    let out = kronlab(&all);
    let code = out.status.code().unwrap_or(-1);
    let text = std::fs::read_to_string(&path).unwrap_or_else(|_| panic!("no report: {}", String::from_utf8_lossy(&out.stderr)));
    (code, serde_json::from_str(&text).unwrap())
}

#[test]
fn identity_at_level_five_passes_and_records_config() {
    let dir = tempfile::tempdir().unwrap();
    let (code, v) = run_to_file(&["verify", "--level", "5", "--char", "1", "--suite", "identity", "--kmax", "4"], dir.path(), "id.json");
    assert_eq!(code, 0);
    assert_eq!(v["report"]["pass"], true);
    assert_eq!(v["config"]["level"], 5);
    assert_eq!(v["config"]["kmax"], 4);
    assert!(v["timestamp"].is_string() || v["timestamp"].is_number());
    assert!(v["report"]["checks"].as_array().unwrap().len() >= 18);
}

#[test]
fn sampled_suites_report_small_errors() {
    let dir = tempfile::tempdir().unwrap();
    for suite in ["modular", "elliptic"] {
        let (code, v) = run_to_file(&["verify", "--level", "5", "--suite", suite, "--samples", "20"], dir.path(), "s.json");
        assert_eq!(code, 0, "{suite}");
        let max = v["command"]["summary"]["max_rel_err"].as_f64().unwrap();
        assert!(max < 1e-9, "{suite}: {max}");
    }
}

#[test]
fn sequential_and_parallel_expansions_agree() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["expand", "--level", "5", "--product", "--kmax", "6", "--qprec", "12"];
    let (c1, a) = run_to_file(&args, dir.path(), "par.json");
    let mut seq = args.to_vec();
    seq.push("--sequential");
    let (c2, b) = run_to_file(&seq, dir.path(), "seq.json");
    assert_eq!((c1, c2), (0, 0));
    assert_eq!(a["report"], b["report"]);
}

#[test]
fn eisenstein_periods_are_exact() {
    let dir = tempfile::tempdir().unwrap();
    let (code, v) = run_to_file(&["periods", "--level", "1", "--weight", "4", "--form", "eis"], dir.path(), "e.json");
    assert_eq!(code, 0);
    let odd = &v["report"]["details"]["odd"];
    assert!(odd.to_string().contains("1/720"), "{odd}");
    let (code, v) = run_to_file(
        &["periods", "--level", "5", "--weight", "4", "--form", "eis", "--eps", "-1", "--twisted"],
        dir.path(),
        "t.json",
    );
    assert_eq!(code, 0);
    assert_eq!(v["report"]["pass"], true);
}

#[test]
fn bad_configuration_exits_with_two() {
    for args in [
        vec!["expand", "--level", "6"],
        vec!["expand", "--level", "5", "--char", "2"],
        vec!["periods", "--level", "1", "--weight", "2", "--form", "eis"],
    ] {
        let out = kronlab(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn environment_supplies_defaults() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("env.json");
    let out = Command::new(env!("CARGO_BIN_EXE_kronlab"))
        .args(["expand", "--qprec", "8", "--deg", "4", "--out", path.to_str().unwrap()])
        .env("KRONLAB_LEVEL", "5")
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["config"]["level"], 5);
}
