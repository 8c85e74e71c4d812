//! End-to-end tests driving the compiled binary.

use std::process::{Command, Output};

fn canbase(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_canbase"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn canbase_env(args: &[&str], env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_canbase"));
    cmd.args(args);
    for (k, v) in env {
        cmd.env(k, v);
    }
    cmd.output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 stdout")
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("exit code")
}

#[test]
fn canonical_pretty_golden() {
    let out = canbase(&["canonical", "--type", "c", "--b", "0,1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "v[0,1] + q^2 v[1,0]\n");
}

#[test]
fn canonical_json_golden_and_deterministic() {
    let args = ["--output", "json", "canonical", "--type", "c", "--b", "0,1"];
    let first = canbase(&args);
    assert_eq!(code(&first), 0);
    assert_eq!(
        stdout(&first),
        "{\"space\":\"typeC\",\"n\":2,\"terms\":[{\"b\":[0,1],\"poly\":{\"0\":\"1\"}},{\"b\":[1,0],\"poly\":{\"2\":\"1\"}}]}\n"
    );
    let second = canbase(&args);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn canonical_linear_convention() {
    let out = canbase(&["canonical", "--type", "a", "--sigma", "+-", "--b", "1,1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "v[1,1] + q v[2,2]\n");
    let at_one = canbase(&[
        "canonical", "--type", "a", "--sigma", "+-", "--b", "1,1", "--q1",
    ]);
    assert_eq!(stdout(&at_one), "v[1,1] + v[2,2]\n");
}

#[test]
fn canonical_usage_errors() {
    // --sigma with the symplectic convention
    let out = canbase(&["canonical", "--type", "c", "--sigma", "+-", "--b", "1,1"]);
    assert_eq!(code(&out), 3);
    // missing --sigma in the linear convention
    let out = canbase(&["canonical", "--type", "a", "--b", "1,1"]);
    assert_eq!(code(&out), 3);
    // malformed tuple
    let out = canbase(&["canonical", "--type", "c", "--b", "1,,2"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn crystal_golden_and_none() {
    let out = canbase(&["crystal", "--op", "f", "--i", "2", "--b", "2,-1,-1,4,-2,-2,3,2,-2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "2,-1,-1,4,-2,-2,3,2,-1\n");
    let out = canbase(&["crystal", "--op", "e", "--i", "2", "--b", "2,-1,-1,4,-2,-2,3,2,-2"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "none\n");
}

#[test]
fn bruhat_equal_golden() {
    let out = canbase(&["bruhat", "--type", "c", "--a", "1,0", "--b", "1,0"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.starts_with("a ⪯ b (equal)\n"), "got {text}");
    assert!(text.contains("N_[1,2](a,1)"));
}

#[test]
fn bruhat_strict_and_json() {
    let out = canbase(&[
        "--output", "json", "bruhat", "--type", "c", "--a", "1,0", "--b", "2,-1",
    ]);
    assert_eq!(code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["relation"], "a ⪯ b (strict)");
    assert_eq!(value["leq"], true);
    assert_eq!(value["geq"], false);
}

#[test]
fn arc_golden() {
    let out = canbase(&["arc", "--b", "2,-1"]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "^v^^ ^oo\nn0 = 1, n1 = 1, atypicality = 1\n");
    let out = canbase(&["--output", "json", "arc", "--b", "2,-1"]);
    assert_eq!(
        stdout(&out),
        "{\"diagram\":{\"non_wedge\":{\"2\":\"v\"},\"n\":2},\"stats\":{\"n0\":1,\"n1\":1,\"atypicality\":1}}\n"
    );
    // non-strictly-dominant input is a usage error
    let out = canbase(&["arc", "--b", "1,2"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn scan_clean_box() {
    let out = canbase(&["scan", "--n", "2", "--box", "-2,2"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("scanned 25 tuples"));
}

#[test]
fn scan_weight_filter() {
    let out = canbase(&[
        "--output", "json", "scan", "--n", "2", "--box", "-2,2", "--weight", "1,0",
    ]);
    assert_eq!(code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["hits"], serde_json::json!([]));
    let scanned = value["scanned"].as_u64().unwrap();
    assert!(scanned < 25, "the filter must restrict the box");
}

#[test]
fn ckw_roundtrip() {
    let out = canbase(&["ckw", "--b", "1,0"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("sigma = +-"));
    assert!(text.contains("equal: true"));
}

#[test]
fn component_reports() {
    let out = canbase(&["--output", "json", "component", "--n", "1", "--box", "0,1"]);
    assert_eq!(code(&out), 0);
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(value["reached"], serde_json::json!(["0", "1"]));
    assert_eq!(value["adjacency"]["0"]["f0"], "1");
    let out = canbase(&["component", "--n", "1", "--box", "0,1", "--dot"]);
    assert!(stdout(&out).starts_with("digraph component {"));
}

#[test]
fn guard_exhaustion_exit_code() {
    let out = canbase(&["--support-guard", "2", "canonical", "--type", "c", "--b", "-1,2"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn guard_env_override() {
    let out = canbase_env(
        &["canonical", "--type", "c", "--b", "-1,2"],
        &[("CANBASE_SUPPORT_GUARD", "2")],
    );
    assert_eq!(code(&out), 2);
    let out = canbase_env(
        &["canonical", "--type", "c", "--b", "-1,2"],
        &[("CANBASE_SUPPORT_GUARD", "1000")],
    );
    assert_eq!(code(&out), 0);
}

#[test]
fn usage_exit_codes() {
    let out = canbase(&["no-such-subcommand"]);
    assert_eq!(code(&out), 3);
    let out = canbase(&["canonical", "--no-such-flag"]);
    assert_eq!(code(&out), 3);
    let out = canbase(&["--help"]);
    assert_eq!(code(&out), 0);
    let out = canbase(&["--version"]);
    assert_eq!(code(&out), 0);
}

#[test]
fn selftest_passes() {
    let out = canbase(&["selftest"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 9);
    assert!(text.lines().all(|line| line.starts_with("PASS")));
}
