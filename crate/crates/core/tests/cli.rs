use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Stdio};

use serde_json::{Value, json};

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Run {
    fn json(&self) -> Value {
        serde_json::from_str(&self.stdout).unwrap_or_else(|e| panic!("stdout is not JSON ({e}): {}", self.stdout))
    }
}

fn tck(args: &[&str], stdin: &str) -> Run {
    let argv: Vec<String> = std::iter::once("tck").chain(args.iter().copied()).map(String::from).collect();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = tck::cli::run(&argv, &mut stdin.as_bytes(), &mut out, &mut err);
    Run { code, stdout: String::from_utf8(out).unwrap(), stderr: String::from_utf8(err).unwrap() }
}

fn tmp(name: &str, contents: &str) -> PathBuf {
    let p = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(format!("cli-{}-{name}", std::process::id()));
    std::fs::write(&p, contents).unwrap();
    p
}

const ISING: &str = r#"{"rank": 3, "dual": [0, 1, 2], "N": [
  [0,0,0,1],[0,1,1,1],[0,2,2,1],[1,0,1,1],[1,1,0,1],[1,1,2,1],[1,2,1,1],[2,0,2,1],[2,1,1,1],[2,2,0,1]]}"#;
const BROKEN_FIB: &str = r#"{"rank": 2, "dual": [0, 1], "N": [[0,0,0,1],[0,1,1,1],[1,0,1,1],[1,1,1,1]]}"#;
const RANK_ONE: &str = r#"{"rank": 1, "order": 1, "S": [[{"order": 1, "coeffs": ["1/1"]}]],
  "T": [{"order": 1, "coeffs": ["1/1"]}], "C": [0], "dims": [{"order": 1, "coeffs": ["1/1"]}]}"#;

#[test]
fn report_shape_and_ring_commands() {
    let r = tck(&["validate", "-"], ISING);
    assert_eq!(r.code, 0);
    let v = r.json();
    assert_eq!(v["command"], "validate");
    assert_eq!(v["status"], "pass");
    assert!(v["details"]["timings_ms"]["total"].is_number());

    let v = tck(&["--no-timings", "fpdim", "-"], ISING).json();
    let sqrt2: f64 = format!("{:.9}", 2f64.sqrt()).parse().unwrap();
    assert_eq!(v["details"]["dims"], json!([1.0, sqrt2, 1.0]));
    assert_eq!(v["details"]["total"], json!(4.0));
    assert!(v["details"].get("timings_ms").is_none());

    let v = tck(&["grading", "-"], ISING).json();
    assert_eq!(v["details"]["order"], 2);
    assert_eq!(v["details"]["adjoint"], json!([0, 2]));
    assert_eq!(v["details"]["pointed"], false);

    let v = tck(&["nilpotent", "-"], ISING).json();
    assert_eq!(v["details"]["chain"], json!([3, 2, 1]));
    assert_eq!(v["details"]["length"], 2);
}

#[test]
fn invalid_rings_fail_with_witnesses() {
    let r = tck(&["validate", "-"], BROKEN_FIB);
    assert_eq!(r.code, 1);
    let v = r.json();
    assert_eq!(v["status"], "fail");
    assert!(v["details"]["witnesses"].as_array().unwrap().iter().any(|w| w["axiom"] == "duality" && w["witness"] == json!([1, 1])));
    // Commands that need a valid ring report the violations instead of computing.
    assert_eq!(tck(&["fpdim", "-"], BROKEN_FIB).code, 1);
}

#[test]
fn input_errors_exit_two() {
    for (args, stdin) in [
        (vec!["validate", "/nonexistent/ring.json"], ""),
        (vec!["validate", "-"], "{"),
        (vec!["validate", "-"], r#"{"rank": 1, "dual": [0], "N": [[0,0,0,0]]}"#),
        (vec!["tl", "--level", "2", "--emit", "ring"], ""),
        (vec!["tl", "--level", "13", "--emit", "ring"], ""),
        (vec!["jones", "--strands", "2", "--word", "3"], ""),
        (vec!["jones", "--strands", "17", "--word", "1"], ""),
        (vec!["center", "--group", "17", "--emit", "objects"], ""),
        (vec!["center", "--group", "2x2", "--cocycle", "1", "--emit", "objects"], ""),
    ] {
        let r = tck(&args, stdin);
        assert_eq!(r.code, 2, "{args:?}");
        assert_eq!(r.stderr.lines().count(), 1, "{args:?}: {}", r.stderr);
        assert_eq!(r.json()["status"], "error", "{args:?}");
    }
    // Usage errors print one line and no report.
    for args in [vec![], vec!["frobnicate"], vec!["tl", "--level", "x", "--emit", "ring"]] {
        let r = tck(&args, "");
        assert_eq!(r.code, 2, "{args:?}");
        assert_eq!(r.stderr.lines().count(), 1, "{args:?}");
        assert!(r.stdout.is_empty());
    }
    assert_eq!(tck(&["--help"], "").code, 0);
    assert!(tck(&["--help"], "").stdout.contains("modular"));
    assert_eq!(tck(&["--version"], "").code, 0);
}

#[test]
fn jones_payload() {
    let v = tck(&["--no-timings", "jones", "--strands", "2", "--word", "1,1,1"], "").json();
    assert_eq!(v["details"]["writhe"], 3);
    assert_eq!(v["details"]["bracket"], json!({"lo": -7, "coeffs": ["1/1", "0/1", "0/1", "0/1", "-1/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "0/1", "-1/1"]}));
    assert_eq!(v["details"]["jones_t"], json!({"lo": 1, "coeffs": ["1/1", "0/1", "1/1", "-1/1"]}));
    let v = tck(&["jones", "--strands", "2", "--word", "-1,-1,-1"], "").json();
    assert_eq!(v["details"]["jones_t"], json!({"lo": -4, "coeffs": ["-1/1", "1/1", "0/1", "1/1"]}));
    // Two-component links have no integral t expansion.
    let v = tck(&["jones", "--strands", "2", "--word", "1,1"], "").json();
    assert!(v["details"].get("jones_t").is_none());
    let v = tck(&["bracket", "--strands", "3", "--word", ""], "").json();
    assert_eq!(v["details"]["bracket"], json!({"lo": -4, "coeffs": ["1/1", "0/1", "0/1", "0/1", "2/1", "0/1", "0/1", "0/1", "1/1"]}));
    assert!(v["details"].get("jones").is_none());
}

#[test]
fn modular_subcommands() {
    let v = tck(&["modular", "verify", "-"], RANK_ONE).json();
    assert_eq!(v["status"], "pass");
    assert_eq!(v["details"]["alpha"], json!({"order": 1, "coeffs": ["1/1"]}));
    assert_eq!(v["details"]["beta"], json!({"order": 1, "coeffs": ["1/1"]}));
    assert_eq!(v["details"]["t_order"], 1);
    for sub in ["gauss", "verlinde", "bound"] {
        assert_eq!(tck(&["modular", sub, "-"], RANK_ONE).code, 0, "{sub}");
    }

    let ising = tck(&["tl", "--level", "4", "--emit", "modular"], "").stdout;
    let v = tck(&["modular", "verlinde", "-"], &ising).json();
    let ring = tck(&["tl", "--level", "4", "--emit", "ring"], "").json();
    assert_eq!(v["details"]["ring"]["N"], ring["N"]);
    assert_eq!(tck(&["modular", "bound", "-"], &ising).json()["details"]["subset"], json!([0, 2]));

    let degenerate = r#"{"rank": 2, "order": 1, "S": [[{"order":1,"coeffs":["1/1"]},{"order":1,"coeffs":["1/1"]}],
      [{"order":1,"coeffs":["1/1"]},{"order":1,"coeffs":["1/1"]}]], "T": [{"order":1,"coeffs":["1/1"]},{"order":1,"coeffs":["1/1"]}],
      "C": [0, 1], "dims": [{"order":1,"coeffs":["1/1"]},{"order":1,"coeffs":["1/1"]}]}"#;
    let r = tck(&["modular", "verify", "-"], degenerate);
    assert_eq!(r.code, 1);
    assert_eq!(r.json()["details"]["transparent"], json!([0, 1]));
}

#[test]
fn galois_flag() {
    let a = tck(&["tl", "--level", "5", "--emit", "modular", "--galois", "-1"], "");
    assert_eq!(a.code, 0);
    assert_eq!(tck(&["modular", "verify", "-"], &a.stdout).code, 0);
    assert_ne!(a.stdout, tck(&["tl", "--level", "5", "--emit", "modular"], "").stdout);
    assert_eq!(tck(&["tl", "--level", "5", "--emit", "modular", "--galois", "2"], "").code, 2);
}

#[test]
fn center_commands() {
    let v = tck(&["center", "--group", "2", "--cocycle", "1", "--emit", "objects"], "").json();
    assert_eq!(v["objects"].as_array().unwrap().len(), 4);
    let modular = tck(&["center", "--group", "2", "--cocycle", "1", "--emit", "modular"], "").stdout;
    assert_eq!(tck(&["modular", "verify", "-"], &modular).json()["details"]["t_order"], 4);

    // A cocycle file equal to the standard class gives the same output.
    let w = tck::formats::cocycle_to_json(&tck::pointed_center::standard_cocycle(3, 1).unwrap());
    let path = tmp("z3.json", &tck::formats::render(&w));
    let from_file = tck(&["center", "--group", "3", "--cocycle-file", path.to_str().unwrap(), "--emit", "modular"], "");
    assert_eq!(from_file.code, 0);
    assert_eq!(from_file.stdout, tck(&["center", "--group", "3", "--cocycle", "1", "--emit", "modular"], "").stdout);
    assert_eq!(tck(&["center", "--group", "2", "--cocycle-file", path.to_str().unwrap(), "--emit", "objects"], "").code, 2);

    // A table that breaks the cocycle identity is reported, not computed.
    let mut bad = w.clone();
    bad["values"][13] = json!({"order": 3, "coeffs": ["0/1", "1/1", "0/1"]});
    let path = tmp("bad.json", &tck::formats::render(&bad));
    let r = tck(&["center", "--group", "3", "--cocycle-file", path.to_str().unwrap(), "--emit", "objects"], "");
    assert_eq!(r.code, 1);
    assert_eq!(r.json()["status"], "fail");

    let r = tck(&["center", "--group", "2", "--cocycle", "1", "--cocycle-file", "x", "--emit", "objects"], "");
    assert_eq!(r.code, 2);
}

#[test]
fn binary_threads_are_deterministic() {
    let run = |threads: &str, args: &[&str]| {
        let mut child = Command::new(env!("CARGO_BIN_EXE_tck"))
            .args(args)
            .env("TCK_THREADS", threads)
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(Stdio::piped())
            .spawn()
            .unwrap();
        child.stdin.take().unwrap().write_all(ISING.as_bytes()).unwrap();
        let out = child.wait_with_output().unwrap();
        (out.status.code(), String::from_utf8(out.stdout).unwrap())
    };
    for args in [
        &["--no-timings", "tl", "--level", "7", "--emit", "modular"][..],
        &["--no-timings", "center", "--group", "2x2", "--emit", "ring"][..],
        &["--no-timings", "grading", "-"][..],
    ] {
        let one = run("1", args);
        assert_eq!(one.0, Some(0));
        for k in ["2", "4", "0"] {
            assert_eq!(run(k, args), one, "{args:?} with {k} threads");
        }
    }
    let (code, _) = run("1", &["validate", "/nonexistent"]);
    assert_eq!(code, Some(2));
}
