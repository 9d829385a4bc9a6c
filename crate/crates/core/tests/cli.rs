use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn halinkit(args: &[&str]) -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_halinkit"));
    c.args(args).env_remove("HALINKIT_BUDGET");
    c
}

fn run(args: &[&str]) -> Output {
    halinkit(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

#[test]
fn report_envelope() {
    let out = run(&["base", "--family", "cycle", "--n", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["command", "input_digest", "result", "version", "wall_time_ms"]);
    assert_eq!(v["command"], "base --family cycle --n 6");
    assert!(v["input_digest"].as_str().unwrap().starts_with("sha256:"));
    assert_eq!(v["result"]["determining_number"], 2);
    assert_eq!(v["result"]["witness"], serde_json::json!([0, 1]));
}

#[test]
fn digest_depends_only_on_the_graph() {
    let a = json(&run(&["aut", "--family", "cycle", "--n", "5"]));
    let b = json(&run(&["motion", "--graph6", "Dhc"]));
    assert_eq!(a["input_digest"], b["input_digest"]);
}

#[test]
fn stdin_json_and_graph6() {
    let mut child = halinkit(&["aut", "--input", "-"]).stdin(Stdio::piped()).stdout(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(br#"{"n":3,"edges":[[0,1],[1,2]]}"#).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"]["order"], 2);

    let dir = std::env::temp_dir().join(format!("halinkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("petersen.g6");
    std::fs::write(&path, "IheA@GUAo\n").unwrap();
    let out = run(&["aut", "--input", path.to_str().unwrap()]);
    assert_eq!(json(&out)["result"]["order"], 120);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn exit_codes() {
    let bad = run(&["cost", "--graph6", "D?"]);
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("byte 2"));
    assert!(bad.stdout.is_empty());

    assert_eq!(run(&["motion", "--family", "path", "--n", "1"]).status.code(), Some(3));
    assert_eq!(run(&["greedy", "--family", "cycle", "--n", "8", "--base", "0"]).status.code(), Some(3));
    assert_eq!(run(&["bounds", "--n", "0"]).status.code(), Some(3));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn budget_from_environment() {
    let out = halinkit(&["base", "--family", "complete", "--n", "5"]).env("HALINKIT_BUDGET", "3").output().unwrap();
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
    let out = halinkit(&["base", "--family", "complete", "--n", "5"]).env("HALINKIT_BUDGET", "1000").output().unwrap();
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"]["determining_number"], 4);
}

#[test]
fn exhausted_construction_reports_partial_progress() {
    let out = run(&["limit-sim", "--family", "binary-tree", "--depth", "2", "--k", "5"]);
    assert_eq!(out.status.code(), Some(4));
    let v = json(&out);
    assert_eq!(v["result"]["completed"], false);
    assert_eq!(v["result"]["rounds_completed"], 1);
    assert!(v["result"]["exhausted"].as_str().unwrap().contains("boundary"));
}

#[test]
fn limit_sim_defaults_to_the_depth_budget() {
    let v = json(&run(&["limit-sim", "--family", "binary-tree", "--k", "3"]));
    let r = &v["result"];
    assert_eq!(r["depth"], r["depth_budget"]);
    assert_eq!(r["completed"], true);
    assert_eq!(r["distinctness"]["pairs"], 28);
    assert_eq!(r["distinctness"]["all_witnessed"], true);
    assert_eq!(r["distinctness"]["distinct_tables"], 8);
    assert_eq!(r["cauchy"]["within_bound"], true);
}

#[test]
fn greedy_from_least_base() {
    let v = json(&run(&["greedy", "--family", "cycle", "--n", "8"]));
    let r = &v["result"];
    assert_eq!(r["completed"], true);
    assert_eq!(r["final_set"], serde_json::json!([0, 1, 3]));
    assert_eq!(r["within_bound"], true);

    let v = json(&run(&["greedy", "--family", "petersen"]));
    assert_eq!(v["result"]["completed"], false);
    assert_eq!(v["result"]["within_bound"], Value::Null);
}

#[test]
fn topology_pair() {
    let v = json(&run(&[
        "topology",
        "--family",
        "path",
        "--n",
        "4",
        "--exhaustion",
        "0|0,1|0,1,2,3",
        "--pair",
        "0,1,2,3;3,2,1,0",
    ]));
    assert_eq!(v["result"]["pair"]["d"], "1");
    assert_eq!(v["result"]["pair"]["d_star"], "2");
}

#[test]
fn pretty_output_is_not_json() {
    let out = run(&["bounds", "--n", "4", "--pretty"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("chain_bound: 4"));
    assert!(serde_json::from_str::<Value>(&text).is_err());
}
