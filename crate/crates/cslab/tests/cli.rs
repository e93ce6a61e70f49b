use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::{json, Value};
use tempfile::TempDir;

struct Run {
    code: i32,
    report: Value,
    stdout: String,
    stderr: String,
}

struct Workspace {
    dir: TempDir,
}

impl Workspace {
    fn new() -> Self {
        let ws = Workspace { dir: tempfile::tempdir().unwrap() };
        ws.write("z2.json", &json!({ "invariant_factors": [2] }));
        ws.write("z4g.json", &json!({ "invariant_factors": [4] }));
        ws.write("x2.json", &json!({ "kind": "lcs", "group": { "invariant_factors": [2] }, "dot": [[0, 1], [0, 1]] }));
        ws.write(
            "trivial_z4.lcs.json",
            &json!({ "kind": "lcs", "group": { "invariant_factors": [4] }, "dot": [[0,1,2,3],[0,1,2,3],[0,1,2,3],[0,1,2,3]] }),
        );
        ws.write(
            "z4.json",
            &json!({ "kind": "lcs", "group": { "invariant_factors": [4] }, "dot": [[0,1,2,3],[0,3,2,1],[0,1,2,3],[0,3,2,1]] }),
        );
        // f(1,1) = 1, g = 0
        ws.write("c.json", &json!({ "f": [[[0],[0]],[[0],[1]]], "g": [[[0],[0]],[[0],[0]]] }));
        // g(0,1) = 1 but g(1,0) = 0
        ws.write("asym.json", &json!({ "f": [[[0],[0]],[[0],[0]]], "g": [[[0],[1]],[[0],[0]]] }));
        ws
    }

    fn path(&self, name: &str) -> PathBuf {
        self.dir.path().join(name)
    }

    fn write(&self, name: &str, value: &Value) {
        std::fs::write(self.path(name), serde_json::to_string(value).unwrap()).unwrap();
    }

    fn read(&self, name: &str) -> Value {
        serde_json::from_str(&std::fs::read_to_string(self.path(name)).unwrap()).unwrap()
    }

    fn run(&self, args: &[&str]) -> Run {
        self.run_env(args, None)
    }

    fn run_env(&self, args: &[&str], max_order: Option<&str>) -> Run {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_cslab"));
        cmd.current_dir(self.dir.path()).args(args).env_remove("CSLAB_MAX_ORDER");
        if let Some(v) = max_order {
            cmd.env("CSLAB_MAX_ORDER", v);
        }
        let out = cmd.output().unwrap();
        let stdout = String::from_utf8(out.stdout).unwrap();
        Run {
            code: out.status.code().unwrap(),
            report: serde_json::from_str(&stdout).unwrap_or(Value::Null),
            stdout,
            stderr: String::from_utf8(out.stderr).unwrap(),
        }
    }
}

fn dir_of(ws: &Workspace) -> &Path {
    ws.dir.path()
}

#[test]
fn check_trivial_z4_passes() {
    let ws = Workspace::new();
    let r = ws.run(&["check", "trivial_z4.lcs.json"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.report["status"], "pass");
    assert_eq!(r.report["verdict"], "pass");
}

#[test]
fn check_reports_a_replayable_witness() {
    let ws = Workspace::new();
    // L_1 swaps 0 and 1, which is not additive
    ws.write(
        "bad.json",
        &json!({ "kind": "lcs", "group": { "invariant_factors": [4] }, "dot": [[0,1,2,3],[1,0,2,3],[0,1,2,3],[0,1,2,3]] }),
    );
    let r = ws.run(&["check", "bad.json"]);
    assert_eq!(r.code, 1);
    let failure = &r.report["verdict"]["fail"];
    assert!(failure["law"].is_string());
    assert!(failure["witness"].is_array());
    let again = ws.run(&["check", "bad.json"]);
    assert_eq!(again.stdout, r.stdout);
}

#[test]
fn cohomology_with_oracle_on_trivial_z2() {
    let ws = Workspace::new();
    let r = ws.run(&["cohomology", "x2.json", "z2.json", "--oracle"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert_eq!(r.report["z2"]["order"], 4);
    assert_eq!(r.report["b2"]["order"], 1);
    assert_eq!(r.report["h2"]["invariant_factors"], json!([2, 2]));
    assert_eq!(r.report["oracle"]["agree"], true);
    assert_eq!(r.report["oracle"]["z2_order"], 4);
    assert_eq!(r.report["decomposition"]["bilin_order"], 2);
    assert_eq!(r.report["decomposition"]["h2sym_order"], 2);
}

#[test]
fn wells_writes_a_valid_certificate() {
    let ws = Workspace::new();
    let r = ws.run(&["wells", "x2.json", "z2.json", "c.json", "-o", "cert.json"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    assert!(r.stdout.is_empty());
    let cert = ws.read("cert.json");
    assert_eq!(cert["status"], "pass");
    assert_eq!(cert["valid"], true);
    assert_eq!(cert["orders"]["h2"], 4);
    assert_eq!(cert["orders"]["pairs"], 1);
    assert_eq!(cert["orders"]["z1"], 2);
    assert_eq!(cert["orders"]["aut_a_e"], 2);
}

#[test]
fn extend_then_extract_round_trips() {
    let ws = Workspace::new();
    let r = ws.run(&["extend", "x2.json", "z2.json", "c.json", "-o", "ext.json"]);
    assert_eq!(r.code, 0, "{}", r.stderr);
    let ext = ws.read("ext.json");
    assert_eq!(ext["total"]["sum"].as_array().unwrap().len(), 4);
    let back = ws.run(&["extract", "ext.json"]);
    assert_eq!(back.code, 0, "{}", back.stderr);
    assert_eq!(back.report["normalised"], true);
    assert_eq!(back.report["cocycle"], ws.read("c.json"));
    // the total space is itself a linear cycle set given by tables
    std::fs::write(dir_of(&ws).join("total.json"), ext["total"].to_string()).unwrap();
    assert_eq!(ws.run(&["check", "total.json"]).code, 0);
}

#[test]
fn non_cocycle_fails_with_witness_that_replays() {
    let ws = Workspace::new();
    let r = ws.run(&["extend", "x2.json", "z2.json", "asym.json"]);
    assert_eq!(r.code, 1);
    assert_eq!(r.report["failure"]["law"], "g-symmetric");
    assert_eq!(r.report["failure"]["witness"], json!([0, 1]));
    let replay = ws.run(&["check", "x2.json", "--cocycle", "asym.json", "--coefficients", "z2.json"]);
    assert_eq!(replay.code, 1);
    assert_eq!(replay.report["cocycle"]["fail"], r.report["failure"]);
}

#[test]
fn act_and_compare_wells_on_twisted_z4() {
    let ws = Workspace::new();
    let zero = json!(vec![vec![vec![0]; 4]; 4]);
    ws.write("zero.json", &json!({ "f": zero, "g": zero }));
    let act = ws.run(&["act", "z4.json", "z2.json", "zero.json"]);
    assert_eq!(act.code, 0, "{}", act.stderr);
    assert_eq!(act.report["theta_laws"]["holds"], true);
    assert_eq!(act.report["orbit"]["orbit_size"], 1);
    let cmp = ws.run(&["compare-wells", "z4.json", "z2.json", "zero.json"]);
    assert_eq!(cmp.code, 0, "{}", cmp.stderr);
    assert_eq!(cmp.report["diagram"]["commutes"], true);
    assert_eq!(cmp.report["group_certificate"]["valid"], true);
}

#[test]
fn oracles_agree_on_small_instances() {
    let ws = Workspace::new();
    let zero = json!(vec![vec![vec![0]; 4]; 4]);
    ws.write("zero.json", &json!({ "f": zero, "g": zero }));
    for args in [
        vec!["oracle", "cohomology", "x2.json", "z2.json"],
        vec!["oracle", "cohomology", "z4.json", "z2.json"],
        vec!["oracle", "aut", "x2.json", "z2.json", "c.json"],
        vec!["oracle", "aut", "z4.json", "z2.json", "zero.json"],
        vec!["oracle", "z1", "z4.json", "z2.json"],
        vec!["oracle", "coboundary", "x2.json", "z2.json", "c.json"],
    ] {
        let r = ws.run(&args);
        assert_eq!(r.code, 0, "{args:?}: {}", r.stderr);
        assert_eq!(r.report["status"], "pass", "{args:?}");
    }
    let cob = ws.run(&["oracle", "coboundary", "x2.json", "z2.json", "c.json"]);
    assert_eq!(cob.report["is_coboundary"], false);
}

#[test]
fn oracle_cap_and_override() {
    let ws = Workspace::new();
    let zero = json!(vec![vec![vec![0]; 4]; 4]);
    ws.write("zero.json", &json!({ "f": zero, "g": zero }));
    ws.write("a4.json", &json!({ "invariant_factors": [4] }));
    let r = ws.run(&["oracle", "aut", "z4.json", "a4.json", "zero.json"]);
    assert_eq!(r.code, 2);
    assert_eq!(r.report["status"], "error");
    assert!(r.report["error"].as_str().unwrap().contains("bound 8"));

    let capped = ws.run_env(&["cohomology", "x2.json", "z2.json"], Some("2"));
    assert_eq!(capped.code, 2);
    assert!(capped.stderr.contains("warning"));
    let flagged = ws.run_env(&["cohomology", "x2.json", "z2.json", "--max-order", "4"], Some("2"));
    assert_eq!(flagged.code, 0, "{}", flagged.stderr);
    let garbage = ws.run_env(&["cohomology", "x2.json", "z2.json"], Some("lots"));
    assert_eq!(garbage.code, 2);
}

#[test]
fn usage_errors_exit_with_two() {
    let ws = Workspace::new();
    let r = ws.run(&["frobnicate"]);
    assert_eq!(r.code, 2);
    assert!(r.stderr.contains("Usage"));
    assert_eq!(ws.run(&["check", "x2.json", "--loud"]).code, 2);
    assert_eq!(ws.run(&["check"]).code, 2);
    assert_eq!(ws.run(&["enumerate"]).code, 2);
    let missing = ws.run(&["check", "nowhere.json"]);
    assert_eq!(missing.code, 2);
    assert_eq!(missing.report["status"], "error");
    ws.write("wrong.json", &json!({ "kind": "lcs", "group": { "invariant_factors": [2] }, "dot": [[0, 1], [0, 2]] }));
    assert_eq!(ws.run(&["check", "wrong.json"]).code, 2);
    assert_eq!(ws.run(&["wells", "x2.json", "z2.json", "z2.json"]).code, 2);
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let ws = Workspace::new();
    for args in [
        vec!["cohomology", "z4.json", "z2.json"],
        vec!["wells", "x2.json", "z2.json", "c.json"],
        vec!["enumerate", "z4g.json"],
    ] {
        let (a, b) = (ws.run(&args), ws.run(&args));
        assert_eq!(a.code, 0, "{args:?}: {}", a.stderr);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn enumerate_counts() {
    let ws = Workspace::new();
    let r = ws.run(&["enumerate", "--cycle-sets", "2"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.report["count"], 2);
    assert_eq!(ws.run(&["enumerate", "--cycle-sets", "5"]).code, 2);
    let lcs = ws.run(&["enumerate", "z2.json"]);
    assert_eq!(lcs.report["count"], 1);
    for s in lcs.report["structures"].as_array().unwrap() {
        std::fs::write(dir_of(&ws).join("s.json"), s.to_string()).unwrap();
        assert_eq!(ws.run(&["check", "s.json"]).code, 0);
    }
}

#[test]
fn dynamical_verdicts() {
    let ws = Workspace::new();
    // the pair of the cocycle with f(1,1) = 1: α(s,t) = t + f, α'(s,t) = s + t
    let alpha: Vec<Vec<Vec<Vec<usize>>>> = (0..2)
        .map(|x| (0..2).map(|y| (0..2).map(|_| (0..2).map(|t| (t + x * y) % 2).collect()).collect()).collect())
        .collect();
    let prime: Vec<Vec<Vec<Vec<usize>>>> =
        (0..2).map(|_| (0..2).map(|_| (0..2).map(|s| (0..2).map(|t| (s + t) % 2).collect()).collect()).collect()).collect();
    ws.write("pair.json", &json!({ "alpha": alpha, "alpha_prime": prime }));
    let r = ws.run(&["dynamical", "x2.json", "pair.json", "--build"]);
    assert_eq!(r.code, 0, "{}", r.stdout);
    assert_eq!(r.report["report"]["agree"], true);
    let ext = ws.run(&["extend", "x2.json", "z2.json", "c.json"]);
    assert_eq!(r.report["product"]["dot"], ext.report["total"]["dot"]);
    assert_eq!(r.report["product"]["sum"], ext.report["total"]["sum"]);

    // α = t with α' ≡ 0: the conditions hold but the product has no identity
    let zero: Vec<Vec<Vec<Vec<usize>>>> = vec![vec![vec![vec![0; 2]; 2]; 2]; 2];
    let ident: Vec<Vec<Vec<Vec<usize>>>> = vec![vec![vec![vec![0, 1]; 2]; 2]; 2];
    ws.write("gap.json", &json!({ "alpha": ident, "alpha_prime": zero }));
    let gap = ws.run(&["dynamical", "x2.json", "gap.json"]);
    assert_eq!(gap.code, 1);
    assert_eq!(gap.report["report"]["conditions"], "pass");
    assert_eq!(gap.report["report"]["verdict"]["fail"]["law"], "product-not-lcs");
}
