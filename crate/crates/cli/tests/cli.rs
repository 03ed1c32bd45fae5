//! End-to-end runs of the binary from the workspace root.
//!
//! JSON outputs are compared with `docs/golden/*.json` after zeroing
//! `timing_ms`. Set `UPDATE_GOLDEN=1` to rewrite them.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_esbss"))
        .current_dir(root())
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn json_without_timing(out: &Output) -> Value {
    let mut v: Value = serde_json::from_slice(&out.stdout).expect("valid JSON");
    let t = v["timing_ms"].as_f64().expect("timing present");
    assert!(t >= 0.0);
    v["timing_ms"] = Value::from(0.0);
    v
}

fn golden(name: &str, args: &[&str], want_code: i32) {
    let out = run(args);
    assert_eq!(code(&out), want_code, "{name}: {}", stderr(&out));
    let got = json_without_timing(&out);
    let path = root().join("docs/golden").join(format!("{name}.json"));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::create_dir_all(path.parent().unwrap()).unwrap();
        std::fs::write(&path, serde_json::to_string_pretty(&got).unwrap() + "\n").unwrap();
    }
    let want: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(got, want, "{name} differs from {}", path.display());

    let again = json_without_timing(&run(args));
    assert_eq!(again, got, "{name} is not deterministic");
}

#[test]
fn golden_reports() {
    golden(
        "check",
        &["check", "--json", "--label-offset", "1", "data/fig1b.edges"],
        1,
    );
    golden(
        "components",
        &["components", "--json", "data/fig1b.edges"],
        0,
    );
    golden(
        "bbridges",
        &["bbridges", "--json", "data/chorded_path.edges"],
        0,
    );
    golden("minimize", &["minimize", "--json", "data/fig1a.edges"], 0);
    golden(
        "minimize_exact",
        &["minimize", "--exact", "--json", "data/fig1a.edges"],
        0,
    );
    golden("gen", &["gen", "10", "15", "42", "--json"], 0);
    golden(
        "bound",
        &["bound", "--json", "docs/golden/minimize.json"],
        0,
    );
}

#[test]
fn check_exit_codes() {
    let a = run(&["check", "data/fig1a.edges"]);
    assert_eq!(code(&a), 0);
    assert!(stdout(&a).contains("2-edge strongly biconnected: yes"));

    let b = run(&["check", "--label-offset", "1", "data/fig1b.edges"]);
    assert_eq!(code(&b), 1);
    assert!(stdout(&b).contains("witness: cut vertex 5"));
    let b0 = run(&["check", "data/fig1b.edges"]);
    assert!(stdout(&b0).contains("witness: cut vertex 4"));

    let c = run(&["check", "data/fig1c.edges"]);
    assert_eq!(code(&c), 0);
    assert!(stdout(&c).contains("m=28"));
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.edges");
    for text in ["0 1\n1 x\n", "0 0\n", "0 1\n0 1\n", "n 2\n0 5\n"] {
        std::fs::write(&bad, text).unwrap();
        let out = run(&["check", bad.to_str().unwrap()]);
        assert_eq!(code(&out), 2, "{text:?}");
        assert!(stderr(&out).contains("line"), "{}", stderr(&out));
    }
    assert_eq!(code(&run(&["check", "data/missing.edges"])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
}

#[test]
fn components_text() {
    let dir = tempfile::tempdir().unwrap();
    let two = dir.path().join("two.edges");
    let tri = |o: usize| {
        [(0, 1), (1, 2), (2, 0)]
            .iter()
            .map(|(u, v)| format!("{} {}\n", u + o, v + o))
            .collect::<String>()
    };
    std::fs::write(&two, tri(0) + &tri(3)).unwrap();
    let out = stdout(&run(&["components", two.to_str().unwrap()]));
    assert!(out.contains("SCCs (2)"), "{out}");

    let out = stdout(&run(&[
        "components",
        "--label-offset",
        "1",
        "data/fig1b.edges",
    ]));
    assert!(out.contains("SCCs (1)"));
    assert!(
        out.contains("SBCs (2): {1,2,3,5,9,10} {4,5,6,7,8,11,12}"),
        "{out}"
    );
    assert!(out.contains("cut vertices: {5}"));
}

#[test]
fn bbridges_requires_strong_biconnectivity() {
    let out = run(&["bbridges", "data/fig1b.edges"]);
    assert_eq!(code(&out), 1);
    let out = run(&["bbridges", "data/fig1a.edges"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("b-bridges (0)"));
}

#[test]
fn minimize_text_and_dot() {
    let dir = tempfile::tempdir().unwrap();
    let dot = dir.path().join("out.dot");
    let out = run(&[
        "minimize",
        "data/fig1a.edges",
        "--dot",
        dot.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("size: 28"), "{text}");
    assert!(text.contains("≤ i·11 + 60"), "{text}");
    let dot = std::fs::read_to_string(&dot).unwrap();
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.matches("color=red").count(), 28);

    let exact = run(&["minimize", "--exact", "data/fig1a.edges"]);
    assert_eq!(code(&exact), 0);
    assert!(stdout(&exact).contains("optimal: 28"));

    let b = run(&["minimize", "--label-offset", "1", "data/fig1b.edges"]);
    assert_eq!(code(&b), 1);
    assert!(stderr(&b).contains("input is not 2-edge strongly biconnected"));
    assert!(stderr(&b).contains("cut vertex 5"));
}

#[test]
fn exact_budget_exhaustion_exits_3() {
    let out = run(&["minimize", "--exact", "--budget", "10", "data/fig1a.edges"]);
    assert_eq!(code(&out), 3);
    assert!(stderr(&out).contains("best known: 29"), "{}", stderr(&out));
}

#[test]
fn gen_round_trips_through_check() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("g.edges");
    let out = run(&["gen", "10", "15", "42", file.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let chk = run(&["check", file.to_str().unwrap()]);
    assert_eq!(code(&chk), 0);
    assert!(stdout(&chk).contains("m=35"));

    let tri = stdout(&run(&["gen", "3", "0", "1"]));
    assert_eq!(tri.lines().count(), 7);
    assert_eq!(code(&run(&["gen", "2", "0", "1"])), 2);
    assert_eq!(code(&run(&["gen", "3", "99", "1"])), 2);
}

#[test]
fn bound_accepts_a_bare_trace() {
    let report: Value =
        serde_json::from_slice(&run(&["minimize", "--json", "data/fig1a.edges"]).stdout).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("trace.json");
    std::fs::write(&file, report["result"]["trace"].to_string()).unwrap();
    let out = run(&["bound", file.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("upper bound: i(n-1) + 5n = 71"));

    std::fs::write(&file, "{}").unwrap();
    assert_eq!(code(&run(&["bound", file.to_str().unwrap()])), 2);
}
