use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

const C4: &str = "p mwis 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n";
const C5: &str = "p mwis 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n";
const P4: &str = "p mwis 4 3\ne 1 2\ne 2 3\ne 3 4\n";
const K4: &str = "p mwis 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_holefree")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let o = run(args);
    assert!(o.status.success(), "{:?}: {}", args, String::from_utf8_lossy(&o.stderr));
    serde_json::from_slice(&o.stdout).unwrap()
}

struct Dir(TempDir);

impl Dir {
    fn new() -> Self {
        Dir(tempfile::tempdir().unwrap())
    }

    fn file(&self, name: &str, body: &str) -> String {
        let p = self.0.path().join(name);
        std::fs::write(&p, body).unwrap();
        p.to_str().unwrap().to_string()
    }

    fn path(&self, name: &str) -> PathBuf {
        self.0.path().join(name)
    }

    fn generate(&self, name: &str, family: &[&str]) -> String {
        let out = self.path(name);
        let mut args = vec!["generate"];
        args.extend_from_slice(family);
        args.extend_from_slice(&["--out", out.to_str().unwrap()]);
        let o = run(&args);
        assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
        out.to_str().unwrap().to_string()
    }
}

fn read(p: &str) -> String {
    std::fs::read_to_string(Path::new(p)).unwrap()
}

#[test]
fn solve_cycle_text() {
    let d = Dir::new();
    let c4 = d.file("c4.gr", C4);
    let o = run(&["solve", &c4]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("weight 2\n"), "{out}");
    assert!(out.contains("vertices 1 3\n"), "{out}");
}

#[test]
fn solve_prism_json_is_reproducible() {
    let d = Dir::new();
    let p = d.generate("prism3.gr", &["prism", "3"]);
    let a = run(&["solve", &p, "--json"]);
    let b = run(&["solve", &p, "--json"]);
    assert_eq!(a.stdout, b.stdout);
    let v: Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["result"]["weight"], "2");
    assert_eq!(v["stats"]["minseps"], 6);
    assert_eq!(v["command"], "solve");
    assert!(v["stats"]["time_ms"].is_null());
    for key in ["version", "command", "input", "result", "verdicts", "analysis", "stats"] {
        assert!(v.get(key).is_some(), "missing {key}");
    }
    let timed = json(&["solve", &p, "--json", "--timing"]);
    assert!(timed["stats"]["time_ms"].is_number());
}

#[test]
fn parse_and_file_errors_exit_2() {
    let d = Dir::new();
    let bad = d.file("bad.gr", "p mwis 3 1\ne 1 9\n");
    assert_eq!(run(&["solve", &bad]).status.code(), Some(2));
    assert_eq!(run(&["verify", &bad]).status.code(), Some(2));
    assert_eq!(run(&["solve", d.path("missing.gr").to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(run(&["solve", &bad, "--strategy", "fastest"]).status.code(), Some(2));
}

#[test]
fn capacity_exits_3_and_auto_falls_back() {
    let d = Dir::new();
    let p = d.generate("prism5.gr", &["prism", "5"]);
    let o = run(&["solve", &p, "--strategy", "bt", "--cap-seps", "3"]);
    assert_eq!(o.status.code(), Some(3));
    let v = json(&["solve", &p, "--cap-seps", "3", "--json"]);
    assert_eq!(v["result"]["strategy"], "subexp1");
    assert_eq!(v["result"]["weight"], "2");
    assert_eq!(run(&["analyze", &p, "--cap-seps", "3"]).status.code(), Some(3));
}

#[test]
fn oracle_limit_from_environment() {
    let d = Dir::new();
    let p = d.generate("big.gr", &["chordal", "24", "40", "--seed", "3"]);
    assert_eq!(run(&["solve", &p, "--strategy", "brute"]).status.code(), Some(3));
    let o = Command::new(env!("CARGO_BIN_EXE_holefree"))
        .args(["solve", &p, "--strategy", "brute"])
        .env("HOLEFREE_ORACLE_LIMIT", "30")
        .output()
        .unwrap();
    assert!(o.status.success());
}

#[test]
fn verify_examples() {
    let d = Dir::new();
    let v = json(&["verify", &d.file("c5.gr", C5), "--json"]);
    assert_eq!(v["verdicts"]["long_hole_free"], false);
    let mut hole: Vec<u64> = v["verdicts"]["long_hole"].as_array().unwrap().iter().map(|x| x.as_u64().unwrap()).collect();
    hole.sort_unstable();
    assert_eq!(hole, vec![1, 2, 3, 4, 5]);

    let p = d.generate("prism3.gr", &["prism", "3"]);
    let v = json(&["verify", &p, "--max-k", "4", "--json"]);
    assert_eq!(v["verdicts"]["long_hole_free"], true);
    assert_eq!(v["verdicts"]["largest_prism"], 3);

    let v = json(&["verify", &d.file("p4.gr", P4), "--json"]);
    assert_eq!(v["verdicts"]["chordal"], true);
    let o = run(&["verify", &d.file("c5b.gr", C5)]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("long-hole-free false"));
}

#[test]
fn analyze_examples() {
    let d = Dir::new();
    let p = d.generate("prism3.gr", &["prism", "3"]);
    let v = json(&["analyze", &p, "--json"]);
    let a = &v["analysis"];
    assert_eq!(a["minseps"], 6);
    assert_eq!(a["minseps_bound_ok"], true);
    assert_eq!(a["dom_histogram"]["brute-fallback"], 0);
    assert_eq!(a["balanced_separator"]["bound_ok"], true);

    let v = json(&["analyze", &d.file("c4.gr", C4), "--json"]);
    assert_eq!(v["analysis"]["pmcs"], 4);
    assert_eq!(v["analysis"]["dom_histogram"]["single-vertex"], 4);
    assert_eq!(v["analysis"]["max_dom_size"], 1);

    let v = json(&["analyze", &d.file("k4.gr", K4), "--json"]);
    assert_eq!(v["analysis"]["minseps"], 0);
    assert_eq!(v["analysis"]["pmcs"], 1);
}

#[test]
fn generators() {
    let d = Dir::new();
    let p = d.generate("p4.gr", &["prism", "4"]);
    assert!(read(&p).contains("p mwis 8 16"));

    let a = d.generate("a.gr", &["chordal", "12", "20", "--seed", "7"]);
    let b = d.generate("b.gr", &["chordal", "12", "20", "--seed", "7"]);
    assert_eq!(read(&a), read(&b));
    assert!(read(&a).contains("# seed 7"));
    let v = json(&["verify", &a, "--json"]);
    assert_eq!(v["verdicts"]["long_hole_free"], true);
    assert_eq!(v["verdicts"]["chordal"], true);

    let f = d.generate("f.gr", &["lhf-filter", "10", "0.4", "--seed", "1"]);
    assert_eq!(json(&["verify", &f, "--json"])["verdicts"]["long_hole_free"], true);
    let c = d.generate("c.gr", &["lhf-chord", "18", "0.25", "--seed", "2"]);
    assert_eq!(json(&["verify", &c, "--json"])["verdicts"]["long_hole_free"], true);

    let comp = d.generate("comp.gr", &["complement-of", &p]);
    assert!(read(&comp).contains("p mwis 8 12"));

    assert_eq!(run(&["generate", "lhf-filter", "10", "1.5"]).status.code(), Some(2));
    assert_eq!(run(&["generate", "lhf-filter", "40", "0.1", "--retries", "1"]).status.code(), Some(3));
    let o = run(&["generate", "prism", "2"]);
    assert!(stdout(&o).contains("p mwis 4 4"));
}

#[test]
fn strategies_agree_through_the_cli() {
    let d = Dir::new();
    for seed in 0..6 {
        let s = seed.to_string();
        let g = d.generate(&format!("g{seed}.gr"), &["lhf-chord", "14", "0.3", "--seed", &s]);
        let answers: Vec<Value> = ["bt", "subexp1", "subexp2", "brute", "auto"]
            .iter()
            .map(|st| json(&["solve", &g, "--strategy", st, "--json"])["result"].clone())
            .collect();
        for a in &answers {
            assert_eq!(a["weight"], answers[0]["weight"]);
            assert_eq!(a["vertices"], answers[0]["vertices"]);
        }
    }
}

#[test]
fn clique_mode() {
    let d = Dir::new();
    let p = d.generate("prism3.gr", &["prism", "3"]);
    let v = json(&["solve", &p, "--clique", "--json"]);
    assert_eq!(v["result"]["weight"], "3");
    assert_eq!(v["result"]["objective"], "clique");
    assert_eq!(v["result"]["vertices"].as_array().unwrap().len(), 3);
}
