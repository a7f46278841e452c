//! The `quiverlab` binary: outputs, exit codes and determinism.
use std::io::Write;
use std::process::{Command, Output, Stdio};

fn quiverlab(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_quiverlab"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn example211_pipes_into_profile() {
    let algebra = quiverlab(&["example211", "--n", "2"], "");
    assert_eq!(algebra.status.code(), Some(0));
    let out = quiverlab(&["profile", "--format", "json"], &stdout(&algebra));
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["schema"], "quiverlab.profile/1");
    assert_eq!(v["profile"]["gldim"], 3);
    assert_eq!(v["profile"]["domdim"], 3);
    assert_eq!(v["profile"]["n_auslander"], 2);
    assert_eq!(v["closed_injectives"], serde_json::json!(["P(1)", "P(2)", "P(3)"]));
}

#[test]
fn closed_sweep_exit_codes() {
    let ok = quiverlab(&["--family", "example211:1", "verify", "--claims", "thm2.6", "--all-indec"], "");
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));
    let bad = quiverlab(&["--family", "example211:1", "verify", "--claims", "thm2.6", "--n", "2"], "");
    assert_eq!(bad.status.code(), Some(1));
    let text = stdout(&bad);
    assert!(text.contains("FAIL") && text.contains("witness: S(2)"), "{text}");
}

#[test]
fn verify_everything_and_the_mutation() {
    let ok = quiverlab(&["verify", "--claims", "all"], "");
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));
    assert!(!stdout(&ok).contains("FAIL"));
    let bad = quiverlab(&["--family", "cyclic:3:2", "verify", "--mutate"], "");
    assert_eq!(bad.status.code(), Some(1));
    assert!(stdout(&bad).contains("witness:"));
    let json = quiverlab(&["--family", "loop:2", "--format", "json", "verify", "--mutate"], "");
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    assert_eq!(v["schema"], "quiverlab.verify/1");
    assert_eq!(v["passed"], false);
}

#[test]
fn module_commands() {
    let fam = ["--family", "example211:1"];
    let run = |rest: &[&str]| {
        let args: Vec<&str> = fam.iter().chain(rest).copied().collect();
        let o = quiverlab(&args, "");
        assert_eq!(o.status.code(), Some(0), "{rest:?}: {}", String::from_utf8_lossy(&o.stderr));
        stdout(&o)
    };
    assert!(run(&["resolve", "S(1)"]).contains("S(1) <- P(1) <- P(2) <- P(3)"));
    assert!(run(&["resolve", "--injective", "P(3)"]).contains("I(3) -> I(2) -> I(1)"));
    assert!(run(&["ext", "S(1)", "S(3)", "--degree", "2"]).contains("Ext^2(S(1), S(3)) = 1"));
    assert!(run(&["gpd", "S(1)", "S(2)"]).contains("gpd S(1) = 2\ngpd S(2) = 1"));
    assert!(run(&["torsion", "S(1)"]).contains("S(1): torsion true"));
    assert!(run(&["dense-ideal"]).contains("dim J0 = 4 of 5"));
    assert!(run(&["dense-primes"]).contains("p_1: dense true  gpd(Γ/p) 2"));
    assert!(run(&["check", "prop2.2", "S(2)"]).contains("holds"));
    assert!(run(&["localize", "S(2)"]).contains("M_G = [1,1,0]"));
    assert!(run(&["closed", "P(1)"]).contains("closed true"));
    let o = run(&["--field", "2", "oracle", "--axioms", "--maranda", "--torsion", "P(1)+S(1)"]);
    assert!(o.contains("axioms on 23 ideals: pass") && o.contains("identity true") && o.contains("agree true"));
}

#[test]
fn algebra_and_module_files() {
    let dir = tempfile::tempdir().unwrap();
    let alg = dir.path().join("a.alg");
    std::fs::write(&alg, "vertices 3\narrow a 1 2\narrow b 2 3\nrelation a*b\n").unwrap();
    let module = dir.path().join("m.mod");
    std::fs::write(&module, "module M\ndim 1 1 0\nmap a 1\n").unwrap();
    let o = quiverlab(&["--algebra", alg.to_str().unwrap(), "localize", module.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("psi injective true  isomorphism true"));
}

#[test]
fn usage_and_parse_errors_exit_2() {
    assert_eq!(quiverlab(&["frobnicate"], "").status.code(), Some(2));
    assert_eq!(quiverlab(&["profile"], "").status.code(), Some(2));
    let o = quiverlab(&["profile"], "vertices 2\narrow a 1 3\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(!o.stderr.is_empty());
    assert_eq!(quiverlab(&["--family", "example211:0", "profile"], "").status.code(), Some(2));
    assert_eq!(quiverlab(&["--family", "example211:1", "resolve", "P(9)"], "").status.code(), Some(2));
    assert_eq!(quiverlab(&["--family", "example211:1", "--field", "4", "profile"], "").status.code(), Some(2));
    assert_eq!(quiverlab(&["verify", "--claims", "nonsense"], "").status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["--family", "example211:2", "--seed", "7", "--format", "json", "check", "prop2.2"];
    let a = quiverlab(&args, "");
    let b = quiverlab(&args, "");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let p = quiverlab(&["--family", "example211:3", "profile"], "");
    let q = quiverlab(&["--family", "example211:3", "profile"], "");
    assert_eq!(p.stdout, q.stdout);
}
