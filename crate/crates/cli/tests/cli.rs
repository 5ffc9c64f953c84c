use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_planecount"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

/// The count itself; the oracle prints witnesses before it.
fn last_line(o: &Output) -> String {
    stdout(o).lines().last().unwrap_or_default().to_string()
}

fn generate(dir: &Path, name: &str, params: &[&str]) -> PathBuf {
    let out = dir.join(format!("{name}.json"));
    let mut args = vec!["generate", name];
    args.extend_from_slice(params);
    args.extend_from_slice(&["-o", out.to_str().unwrap()]);
    let o = run(&args);
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    out
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let o = run(&full);
    serde_json::from_slice(&o.stdout).expect("valid json report")
}

#[test]
fn generate_writes_valid_instances() {
    let dir = tempfile::tempdir().unwrap();
    let fan = generate(dir.path(), "fan", &["--n", "6"]);
    let v: Value = serde_json::from_str(&std::fs::read_to_string(fan).unwrap()).unwrap();
    assert_eq!(v["n"], 6);
    assert_eq!(v["points"].as_array().unwrap().len(), 6);

    let mm = json(&[
        "generate",
        "min-monpath",
        "--l",
        "3",
        "-o",
        dir.path().join("mm.json").to_str().unwrap(),
    ]);
    assert_eq!(mm["results"]["n"], "10");
    assert_eq!(mm["verdicts"]["validate"], "PASS");
}

#[test]
fn bad_construction_parameters_are_usage_errors() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("g.json");
    let o = run(&[
        "generate",
        "gk",
        "--l",
        "2",
        "--k",
        "3",
        "-o",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!out.exists());
    assert_eq!(
        run(&["generate", "no-such-thing", "-o", out.to_str().unwrap()])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn count_and_oracle_agree() {
    let dir = tempfile::tempdir().unwrap();
    let fan = generate(dir.path(), "fan", &["--n", "6"]);
    let f = fan.to_str().unwrap();
    for (metric, want) in [
        ("convex", "10"),
        ("monotone-all", "70"),
        ("xmonotone", "25"),
    ] {
        let fast = run(&["count", metric, f]);
        let slow = run(&["oracle", metric, f]);
        assert_eq!(stdout(&fast), want, "{metric}");
        assert_eq!(last_line(&slow), want, "{metric}");
    }
    assert_eq!(last_line(&run(&["oracle", "star-total", f])), "10");
    assert_eq!(run(&["count", "star-total", f]).status.code(), Some(2));
    let dir_fast = stdout(&run(&["count", "monotone-dir", f, "--dir", "1", "-1/3"]));
    let dir_slow = last_line(&run(&["oracle", "monotone-dir", f, "--dir", "1", "-1/3"]));
    assert_eq!(dir_fast, dir_slow);
}

#[test]
fn star_center_on_an_edge_line_fails() {
    let dir = tempfile::tempdir().unwrap();
    let fan = generate(dir.path(), "fan", &["--n", "6"]);
    let o = run(&[
        "count",
        "star-center",
        fan.to_str().unwrap(),
        "--at",
        "0",
        "0",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("center"));
}

#[test]
fn analyze_quantities() {
    assert_eq!(
        stdout(&run(&["analyze", "eigenvalue", "--k", "5"])),
        "4885 9 294153 2"
    );
    assert_eq!(stdout(&run(&["analyze", "fibonacci", "--n", "10"])), "55");
    assert_eq!(
        stdout(&run(&["analyze", "transfer-matrix", "--k", "3"])),
        "[[6, 3], [4, 3]]"
    );
    assert!(stdout(&run(&["analyze", "growth-rate", "--k", "4"])).starts_with("1.70034"));
    assert!(stdout(&run(&["analyze", "tribonacci-root"])).starts_with("1.83928"));
    let bound = planecount::analytics::star_lb_bound(10, 5).unwrap();
    assert_eq!(
        stdout(&run(&["analyze", "star-bound", "--n", "10", "--k", "5"])),
        bound.to_string()
    );
}

#[test]
fn json_reports_are_deterministic_apart_from_timings() {
    let dir = tempfile::tempdir().unwrap();
    let g = generate(dir.path(), "min-convex-zigzag", &["--n", "8"]);
    let args = ["count", "convex", g.to_str().unwrap()];
    let mut a = json(&args);
    let mut b = json(&args);
    a.as_object_mut().unwrap().remove("timings_ms");
    b.as_object_mut().unwrap().remove("timings_ms");
    assert_eq!(a, b);
    assert_eq!(a["results"]["convex"], "20");
    assert_eq!(a["input_hash"].as_str().unwrap().len(), 64);
}

#[test]
fn sequential_flag_gives_the_same_counts() {
    let dir = tempfile::tempdir().unwrap();
    let g = generate(dir.path(), "monotone-lb", &["--l", "2"]);
    let f = g.to_str().unwrap();
    assert_eq!(
        stdout(&run(&["--sequential", "count", "monotone-all", f])),
        "102"
    );
    assert_eq!(stdout(&run(&["count", "monotone-all", f])), "102");
}

#[test]
fn verify_table3_passes() {
    let o = run(&["verify", "table3"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("PASS"));
}
