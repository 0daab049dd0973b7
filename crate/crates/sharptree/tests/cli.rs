//! End-to-end tests of the `sharptree` binary: output goldens, exit
//! codes, determinism, and the environment-variable cap.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sharptree"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn run_with_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sharptree"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn sharp_edges_golden_for_p5() {
    let out = run(&["sharp", &fixture("p5.txt"), "--edges"]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "1 2 2/3\n1 4 -1/3\n2 3 1/3\n2 5 -1/3\n3 4 1/3\n4 5 2/3\n"
    );
}

#[test]
fn sharp_edges_default_format_and_star_golden() {
    let out = run(&["sharp", &fixture("star12.txt")]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "1 3 1/5\n2 3 2/5\n");
}

#[test]
fn sharp_json_t6_contains_expected_edge() {
    let out = run(&["sharp", &fixture("t6.txt"), "--json"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["schema"], "sharptree/1");
    assert!(doc["input_digest"].as_str().unwrap().starts_with("sha256:"));
    let edges = doc["sharp_edges"].as_array().unwrap();
    assert!(edges
        .iter()
        .any(|e| e[0] == "4" && e[1] == "5" && e[2] == "2/5"));
}

#[test]
fn sharp_dot_output() {
    let out = run(&["sharp", &fixture("star12.txt"), "--dot"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("graph sharp {"));
    assert!(text.contains("\"1\" -- \"3\" [label=\"1/5\"];"));
}

#[test]
fn verify_exits_zero_on_fixtures() {
    for name in ["p5.txt", "t1.txt", "t6.txt", "star12.txt", "t2.txt"] {
        let out = run(&["verify", &fixture(name)]);
        assert_eq!(out.status.code(), Some(0), "{name}");
        assert!(stdout(&out).contains("result: ok"));
    }
}

#[test]
fn parse_errors_exit_one() {
    let dir = std::env::temp_dir().join("sharptree-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("corrupt.txt");
    std::fs::write(&bad, "1 2 not-a-number\n").unwrap();
    let out = run(&["verify", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["sharp", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let missing = dir.join("does-not-exist.txt");
    let out = run(&["sharp", missing.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn cycle_input_exits_one() {
    let dir = std::env::temp_dir().join("sharptree-cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    let cyclic = dir.join("cycle.txt");
    std::fs::write(&cyclic, "1 2 1\n2 3 1\n3 1 1\n").unwrap();
    let out = run(&["analyze", cyclic.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn matching_cap_flag_and_env_exit_three() {
    let out = run(&["sharp", &fixture("p5.txt"), "--cap", "2"]);
    assert_eq!(out.status.code(), Some(3));
    let out = run_with_env(
        &["matchings", &fixture("p5.txt")],
        "SHARPTREE_MATCHING_CAP",
        "1",
    );
    assert_eq!(out.status.code(), Some(3));
    // The flag wins over the environment.
    let out = run_with_env(
        &["matchings", &fixture("p5.txt"), "--cap", "100"],
        "SHARPTREE_MATCHING_CAP",
        "1",
    );
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn matchings_counts_p5() {
    let out = run(&["matchings", &fixture("p5.txt")]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["matching_summary"]["maximum_matching_count"], 3);
    assert_eq!(doc["matching_summary"]["matching_number"], 2);
    assert_eq!(doc["matching_summary"]["m_value"], "3");
}

#[test]
fn analyze_star_four_conditions_all_true() {
    let out = run(&["analyze", &fixture("star12.txt")]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let four = &doc["structure_report"]["four_conditions"];
    assert_eq!(four["alt_path_count_is_n_minus_1"], true);
    assert_eq!(four["sharp_is_tree"], true);
    assert_eq!(four["is_star"], true);
    assert_eq!(four["sharp_isomorphic_underlying"], true);
}

#[test]
fn signature_search_on_t6_reports_nonexistence() {
    let out = run(&["signature", &fixture("t6.txt"), "--search"]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["signature_report"]["search"]["signature_exists"], false);
}

#[test]
fn signature_constructed_for_t1() {
    let out = run(&["signature", &fixture("t1.txt")]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let constructed = &doc["signature_report"]["constructed"];
    assert_eq!(constructed["root"], "4");
    assert_eq!(constructed["nonnegative"], true);
    let signs: Vec<i64> = constructed["signs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_i64().unwrap())
        .collect();
    assert_eq!(signs, vec![1, -1, 1, 1, 1, -1, 1]);
}

#[test]
fn spectral_star_reports_sqrt5() {
    let out = run(&["spectral", &fixture("star12.txt")]);
    assert!(out.status.success());
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let tau = doc["spectral_report"]["tau"].as_f64().unwrap();
    assert!((tau - 5.0f64.sqrt()).abs() < 1e-10);
    assert_eq!(doc["spectral_report"]["tau_simple"], true);
}

#[test]
fn analyze_all_output_is_byte_identical_across_runs() {
    let args = ["analyze", &fixture("t1.txt"), "--all", "--search"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn multiple_inputs_with_jobs_keep_order() {
    let p5 = fixture("p5.txt");
    let star = fixture("star12.txt");
    let sequential = run(&["sharp", &p5, &star]);
    let parallel = run(&["sharp", &p5, &star, "--jobs", "2"]);
    assert!(sequential.status.success() && parallel.status.success());
    assert_eq!(sequential.stdout, parallel.stdout);
    let text = stdout(&sequential);
    let p5_header = text.find("== ").unwrap();
    assert!(text[p5_header..].contains("p5.txt"));
}

#[test]
fn sharp_edges_output_reparses_to_the_sharp_pattern() {
    let out = run(&["sharp", &fixture("t6.txt"), "--edges"]);
    assert!(out.status.success());
    let witness = sharptree::groupinv::sharp_combinatorial(&sharptree::fixtures::t6()).unwrap();
    let mut expected: Vec<(String, String)> = witness
        .sharp_graph
        .edges()
        .iter()
        .map(|e| {
            let (a, b) = (
                witness.sharp_graph.label(e.u).to_string(),
                witness.sharp_graph.label(e.v).to_string(),
            );
            if a <= b {
                (a, b)
            } else {
                (b, a)
            }
        })
        .collect();
    expected.sort();
    let mut got: Vec<(String, String)> = stdout(&out)
        .lines()
        .map(|line| {
            let mut it = line.split_whitespace();
            (
                it.next().unwrap().to_string(),
                it.next().unwrap().to_string(),
            )
        })
        .collect();
    got.sort();
    assert_eq!(got, expected);
}
