//! End-to-end tests of the `shellab` binary: exit codes, certificate shape,
//! file formats, and stream separation.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn write_file(dir: &Path, name: &str, text: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shellab"))
        .args(args)
        .env_remove("SHELLAB_MAX_NODES")
        .output()
        .unwrap()
}

fn run_with_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_shellab"))
        .args(args)
        .env_remove("SHELLAB_MAX_NODES")
        .env(key, value)
        .output()
        .unwrap()
}

fn stdout_json(output: &Output) -> Value {
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

fn code(output: &Output) -> i32 {
    output.status.code().expect("exit code")
}

const FOUR: &str = "n 6\n1 2 3\n2 3 4\n3 4 5\n4 5 6\n";
const FIVE: &str = "n 7\n1 2 3\n2 3 4\n3 4 5\n4 5 6\n5 6 7\n";

#[test]
fn search_strong_yes_emits_a_reverifiable_certificate() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_file(dir.path(), "four.cx", FOUR);
    let out = run(&["search", "--strong", file.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let cert = stdout_json(&out);
    assert_eq!(cert["answer"], "yes");
    assert_eq!(cert["question"], "strong-shelling-order");

    let order: Vec<u64> =
        cert["order"].as_array().unwrap().iter().map(|v| v.as_u64().unwrap()).collect();
    let arg: Vec<String> = order.iter().map(u64::to_string).collect();
    let check = run(&[
        "check-order",
        "--strong",
        "--order",
        &arg.join(","),
        file.to_str().unwrap(),
    ]);
    assert_eq!(code(&check), 0);
}

#[test]
fn search_strong_no_has_no_order_field() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_file(dir.path(), "five.cx", FIVE);
    let out = run(&["search", "--strong", file.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    let cert = stdout_json(&out);
    assert_eq!(cert["answer"], "no");
    assert!(cert.get("order").is_none());

    // The same complex is still plainly shellable.
    let plain = run(&["search", file.to_str().unwrap()]);
    assert_eq!(code(&plain), 0);
    assert_eq!(stdout_json(&plain)["question"], "shelling-order");
}

#[test]
fn check_order_uses_the_listing_by_default() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_file(dir.path(), "five.cx", FIVE);
    assert_eq!(code(&run(&["check-order", file.to_str().unwrap()])), 0);
    assert_eq!(code(&run(&["check-order", "--strong", file.to_str().unwrap()])), 1);
}

#[test]
fn budget_flag_and_env_yield_undecided() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_file(dir.path(), "four.cx", FOUR);
    let out = run(&["search", "--strong", "--max-nodes", "1", file.to_str().unwrap()]);
    assert_eq!(code(&out), 2);
    assert_eq!(stdout_json(&out)["answer"], "undecided");

    let out = run_with_env(
        &["search", "--strong", file.to_str().unwrap()],
        "SHELLAB_MAX_NODES",
        "1",
    );
    assert_eq!(code(&out), 2);

    // An explicit flag overrides the environment.
    let out = run_with_env(
        &["search", "--strong", "--max-nodes", "1000", file.to_str().unwrap()],
        "SHELLAB_MAX_NODES",
        "1",
    );
    assert_eq!(code(&out), 0);

    let out = run_with_env(
        &["search", "--strong", file.to_str().unwrap()],
        "SHELLAB_MAX_NODES",
        "zero",
    );
    assert_eq!(code(&out), 3);
}

#[test]
fn gamma_reports_metrics_and_exports_dot() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_file(dir.path(), "path.cx", "n 5\n1 2\n2 3\n3 4\n4 5\n");
    let out = run(&["gamma", file.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    let report = stdout_json(&out);
    assert_eq!(report["answer"], "no");
    assert_eq!(report["connected"], true);
    assert_eq!(report["girth"], 0);
    assert_eq!(report["diameter"], 3);

    let dot_path = dir.path().join("gamma.dot");
    let out = run(&["gamma", "--dot", dot_path.to_str().unwrap(), file.to_str().unwrap()]);
    assert_eq!(code(&out), 1);
    stdout_json(&out);
    let dot = std::fs::read_to_string(&dot_path).unwrap();
    assert!(dot.contains("f0 -- f1;"));

    let out = run(&["gamma", "--dot", "-", file.to_str().unwrap()]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("graph gamma {"));
    assert!(text.contains("[label=\"12\"]"));
}

#[test]
fn classify_reports_all_eight_classes() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_file(dir.path(), "forest.cx", "n 3\n1 2\n1 3\n2 3\n");
    let out = run(&["classify", file.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let report = stdout_json(&out);
    for class in [
        "matroid",
        "shifted",
        "weakly_matroid",
        "vertex_decomposable",
        "hereditary_shellable",
        "hereditarily_strongly_shellable",
        "strongly_shellable",
        "shellable",
    ] {
        assert_eq!(report[class], true, "{class}");
    }
}

#[test]
fn h_decide_emits_assignment_and_reverifiable_order() {
    let dir = tempfile::tempdir().unwrap();
    let file = write_file(dir.path(), "four.cx", FOUR);
    let out = run(&["h-decide", "--strong", file.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let cert = stdout_json(&out);
    assert_eq!(cert["question"], "strongly-shellable-by-assignment");
    assert_eq!(cert["h_assignment"].as_array().unwrap().len(), 4);

    let order: Vec<String> = cert["order"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap().to_string())
        .collect();
    let check = run(&[
        "check-order",
        "--strong",
        "--order",
        &order.join(","),
        file.to_str().unwrap(),
    ]);
    assert_eq!(code(&check), 0);
}

#[test]
fn ideal_lists_generators_and_certifies_linear_quotients() {
    let dir = tempfile::tempdir().unwrap();
    let pair = write_file(dir.path(), "pair.cx", "n 4\n1 2\n3 4\n");
    let out = run(&["ideal", pair.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let listing = stdout_json(&out);
    assert_eq!(listing["n_vars"], 4);
    assert_eq!(listing["generators"][0], "x1*x2");
    assert_eq!(listing["generators"][1], "x3*x4");

    let out = run(&["ideal", "--linear-quotients", pair.to_str().unwrap()]);
    assert_eq!(code(&out), 1);

    let four = write_file(dir.path(), "four.cx", FOUR);
    let out = run(&["ideal", "--linear-quotients", four.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout_json(&out)["order"].is_array());
}

#[test]
fn poset_decides_and_emits_its_order_complex() {
    let dir = tempfile::tempdir().unwrap();
    let fence = write_file(dir.path(), "fence.p", "p 5\n1 < 2\n3 < 2\n3 < 4\n5 < 4\n");
    let chain = write_file(dir.path(), "chain.p", "p 3\n1 < 2\n2 < 3\n");
    assert_eq!(code(&run(&["poset", fence.to_str().unwrap()])), 1);
    assert_eq!(code(&run(&["poset", chain.to_str().unwrap()])), 0);

    let out = run(&["poset", "--emit-complex", fence.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "n 5\n1 2\n2 3\n3 4\n4 5\n");
}

#[test]
fn expand_prints_the_expanded_complex() {
    let dir = tempfile::tempdir().unwrap();
    let edge = write_file(dir.path(), "edge.cx", "n 2\n1 2\n");
    let out = run(&["expand", "--by", "2,1", edge.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text, "n 3\n1 3\n2 3\n");

    // Expanded output feeds straight back in.
    let expanded = write_file(dir.path(), "expanded.cx", &text);
    assert_eq!(code(&run(&["search", "--strong", expanded.to_str().unwrap()])), 0);
}

#[test]
fn diagnostics_go_to_stderr_and_errors_exit_three() {
    let dir = tempfile::tempdir().unwrap();
    let absorbed = write_file(dir.path(), "absorbed.cx", "n 3\n1 2\n1 2 3\n");
    let out = run(&["search", "--strong", absorbed.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8(out.stderr).unwrap().contains("absorbed"));

    let bad = write_file(dir.path(), "bad.cx", "n 6\n1 2 x\n");
    let out = run(&["search", bad.to_str().unwrap()]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8(out.stderr).unwrap().contains("line 2"));

    let missing = dir.path().join("nope.cx");
    assert_eq!(code(&run(&["search", missing.to_str().unwrap()])), 3);

    let four = write_file(dir.path(), "four.cx", FOUR);
    assert_eq!(
        code(&run(&["search", "--max-nodes", "0", four.to_str().unwrap()])),
        3
    );
    assert_eq!(code(&run(&["frobnicate", four.to_str().unwrap()])), 3);
    assert_eq!(code(&run(&["--help"])), 0);
}
