use std::process::{Command, Output};

use serde_json::Value;

fn ihall(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ihall")).args(args).env_remove("IHALL_CONFIG").output().unwrap()
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn pieri_three_terms() {
    let out = ihall(&["pieri", "--rule", "hdu", "--mu", "[1]", "--r", "1", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["schemaVersion"], 1);
    let got: Vec<(Value, String)> = v["expansion"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| (t["lambda"].clone(), t["coeff"].as_str().unwrap().to_string()))
        .collect();
    assert_eq!(got.len(), 3);
    assert!(got.contains(&(serde_json::json!([2]), "(1 - 1*t^1)".into())), "{got:?}");
    assert!(got.contains(&(serde_json::json!([1, 1]), "(1)".into())), "{got:?}");
    assert!(got.contains(&(serde_json::json!([]), "(1 - 1*t^1)*θ^1".into())), "{got:?}");
}

#[test]
fn hallpoly_text() {
    let out = ihall(&["hallpoly", "--mu", "[1]", "--nu", "[1]", "--lambda", "[1,1]"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "1 + 1*T^1");
}

#[test]
fn verify_reports_pass() {
    let out = ihall(&["verify", "--identity", "HE", "--order", "4", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["identity"], "HE");
    assert_eq!(v["order"], 4);
    assert_eq!(v["pass"], true);
    assert!(v["firstFailure"].is_null());
}

#[test]
fn usage_errors_exit_two() {
    let out = ihall(&["pieri", "--rule", "xyz", "--mu", "[1]", "--r", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--rule"));
    assert_eq!(ihall(&["giambelli", "--alpha", "[1,"]).status.code(), Some(2));
    assert_eq!(ihall(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(ihall(&["verify", "--identity", "HE", "--order", "40"]).status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["multiply", "--mu", "[2,1]", "--nu", "[1]", "--json"];
    assert_eq!(ihall(&args).stdout, ihall(&args).stdout);
}

#[test]
fn hallcount_single_entry() {
    let out = ihall(&["hallcount", "--q", "2", "--lambda", "[1,1]", "--mu", "[1]", "--nu", "[1]"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), "3");
}

#[test]
fn phi_of_generator() {
    let out = ihall(&["phi", "--element", r#"{"terms":[{"lambda":[1],"a":0,"coeff":"1"}]}"#, "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["vIotaBasis"].as_array().unwrap().len(), 1);
}

#[test]
fn realize_modified_row() {
    let out = ihall(&["realize", "--lambda", "[1]", "--basis", "q", "--vars", "2", "--t", "0", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["poly"]["terms"].as_array().unwrap().len(), 1);
}

#[test]
fn config_from_env_and_guards() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.toml");
    let cache = dir.path().join("hall.jsonl");
    std::fs::write(
        &cfg,
        format!("cachePath = {:?}\noutputFormat = \"json\"\n[sizeGuards]\nhallcount = 8\n", cache.to_str().unwrap()),
    )
    .unwrap();
    let run = |args: &[&str]| Command::new(env!("CARGO_BIN_EXE_ihall")).args(args).env("IHALL_CONFIG", &cfg).output().unwrap();
    let out = run(&["hallpoly", "--mu", "[1]", "--nu", "[1]", "--lambda", "[1,1]"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_of(&out)["poly"], "1 + 1*T^1");
    assert!(std::fs::read_to_string(&cache).unwrap().contains("\"lambda\":[1,1]"));
    assert_eq!(run(&["hallcount", "--q", "2", "--lambda", "[2,2]"]).status.code(), Some(2));

    std::fs::write(&cfg, "mystery = 1\n").unwrap();
    let out = run(&["hallpoly", "--mu", "[1]", "--nu", "[1]", "--lambda", "[1,1]"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn quick_selftest_cold_and_warm_agree() {
    let out = ihall(&["selftest", "--level", "quick", "--json"]);
    let v = json_of(&out);
    assert_eq!(v["coldWarmIdentical"], true);
    let suites = v["suites"].as_array().unwrap();
    assert_eq!(suites.len(), 10);
    for s in suites {
        assert!(s["pass"] == true || s["documented"] == true, "{s}");
    }
    assert_eq!(out.status.code(), Some(0));
}
