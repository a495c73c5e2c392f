use std::fs;

use hereditary::cli::run;
use hereditary::io::{digraph_to_text, graph_to_text, hypergraph_to_json, read_hypergraph};
use hereditary_core::families::{maximal_generators, stable_set_family};
use hereditary_core::fixtures::{complete_digraph, cycle, path};
use hereditary_core::{rho, HereditaryHypergraph};
use serde_json::Value;
use tempfile::TempDir;

fn exec(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("hereditary").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn json(args: &[&str]) -> Value {
    let mut a = vec!["--json"];
    a.extend_from_slice(args);
    let (code, out, err) = exec(&a);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

fn write(dir: &TempDir, name: &str, body: &str) -> String {
    let p = dir.path().join(name);
    fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_owned()
}

fn c5_file(dir: &TempDir) -> String {
    let h = maximal_generators(&stable_set_family(&cycle(5))).unwrap();
    write(dir, "c5.json", &hypergraph_to_json(&h))
}

#[test]
fn verify_exhaustive_is_clean() {
    let (code, out, _) = exec(&["verify", "--exhaustive", "-n", "4"]);
    assert_eq!(code, 0);
    assert!(out.contains("0 violations"), "{out}");
}

#[test]
fn verify_report_is_deterministic() {
    let args = ["--json", "verify", "--random", "-n", "6", "--seed", "11", "--samples", "60", "--mu", "--no-timing"];
    let (_, a, _) = exec(&args);
    let (_, b, _) = exec(&args);
    let mut single = args.to_vec();
    single.extend(["--workers", "1"]);
    let (_, c, _) = exec(&single);
    assert_eq!(a, b);
    assert_eq!(a, c);
    let v: Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["counts"]["instances_checked"], 60);
    assert_eq!(v["runtime_seconds"], 0.0);
}

#[test]
fn bad_inputs_exit_with_two() {
    let dir = TempDir::new().unwrap();
    let missing = dir.path().join("missing.json");
    assert_eq!(exec(&["rho", missing.to_str().unwrap()]).0, 2);
    let junk = write(&dir, "junk.json", "{\"n\": 2, \"generators\": [[0, 5]]}");
    assert_eq!(exec(&["rho", &junk]).0, 2);
    let uncovered = write(&dir, "uncovered.json", "{\"n\": 3, \"generators\": [[0, 1]]}");
    assert_eq!(exec(&["rho", &uncovered]).0, 2);
    assert_eq!(exec(&["verify", "--exhaustive", "-n", "6"]).0, 2);
    assert_eq!(exec(&["no-such-command"]).0, 2);
}

#[test]
fn rho_and_classification_of_c5() {
    let dir = TempDir::new().unwrap();
    let f = c5_file(&dir);
    let (code, out, _) = exec(&["rho", &f]);
    assert_eq!(code, 0);
    assert!(out.contains('3'), "{out}");
    let v = json(&["theorem", "classify", &f]);
    assert_eq!(v["case"], "equality");
    assert_eq!(v["rho"], 3);
    assert_eq!(v["structured_covers"].as_object().unwrap().len(), 5);
    let (_, text, _) = exec(&["theorem", "classify", &f]);
    assert!(text.starts_with("equality"), "{text}");
}

#[test]
fn structured_cover_and_enumeration() {
    let dir = TempDir::new().unwrap();
    let f = c5_file(&dir);
    let v = json(&["theorem", "structured-cover", "--vertex", "2", &f]);
    let cover = v["cover"].as_array().unwrap();
    assert_eq!(cover.len(), 3);
    assert!(cover.iter().any(|p| p == &serde_json::json!([2])));
    let e = json(&["cover", "enumerate", &f]);
    assert_eq!(e["rho"], 3);
    assert_eq!(e["covers"].as_array().unwrap().len(), 5);
    assert_eq!(e["truncated"], false);
    let t = json(&["cover", "enumerate", "--limit", "2", &f]);
    assert_eq!(t["truncated"], true);
    assert_eq!(t["covers"].as_array().unwrap().len(), 2);
    let strict = write(&dir, "strict.json", "{\"n\":4,\"generators\":[[0,1,2],[0,1,3],[0,2,3],[1,2,3]]}");
    assert_eq!(exec(&["theorem", "structured-cover", "--vertex", "0", &strict]).0, 2);
    assert_eq!(json(&["theorem", "classify", &strict])["case"], "strict");
}

#[test]
fn criticality_mu_and_corollary() {
    let dir = TempDir::new().unwrap();
    let f = c5_file(&dir);
    assert_eq!(json(&["critical", "check", &f])["is_critical"], true);
    let m = json(&["mu", &f]);
    let mm = json(&["mu", "--min-covers", &f]);
    assert_eq!(m["mu"], mm["mu"]);
    assert_eq!(json(&["corollary", &f])["gallai"]["holds"], true);
    let loose = write(&dir, "loose.json", "{\"n\":3,\"generators\":[[0,1],[2]]}");
    let core = json(&["critical", "core", &loose]);
    assert_eq!(core["deleted"].as_array().unwrap().len(), 1);
}

#[test]
fn family_round_trip() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "c5.txt", &graph_to_text(&cycle(5)));
    let out = dir.path().join("stable.json");
    let (code, _, err) = exec(&["family", "stable", "--input", &g, "--out", out.to_str().unwrap()]);
    assert_eq!(code, 0, "{err}");
    let h = read_hypergraph(&out).unwrap();
    assert_eq!(rho(&h), 3);
    assert_eq!(h, maximal_generators(&stable_set_family(&cycle(5))).unwrap());

    let v = json(&["family", "clique", "--input", &g]);
    assert_eq!(v["generators"].as_array().unwrap().len(), 5);
    let b = json(&["family", "bounded", "--k", "2", "--input", &g]);
    assert_eq!(b["generators"].as_array().unwrap().len(), 5);
    assert_eq!(exec(&["family", "bounded", "--input", &g]).0, 2);

    let d = write(&dir, "k3.txt", &digraph_to_text(&complete_digraph(3)));
    let a: HereditaryHypergraph =
        serde_json::from_value::<hereditary::io::HypergraphFile>(json(&["family", "acyclic", "--input", &d]))
            .unwrap()
            .to_hypergraph()
            .unwrap();
    assert_eq!(a.max_generator_size(), 1);

    let w = write(&dir, "w.txt", "n 3\n0 1 2.0\n1 2 0.5\n");
    let t = json(&["family", "threshold", "--lambda", "1.0", "--input", &w]);
    assert_eq!(t["generators"], serde_json::json!([[0, 2], [1, 2]]));
}

#[test]
fn lemma_command() {
    let dir = TempDir::new().unwrap();
    let c7 = write(&dir, "c7.txt", &graph_to_text(&cycle(7)));
    let v = json(&["lemma", &c7]);
    assert_eq!(v["holds"], true);
    assert_eq!(v["nu"], 3);
    let p4 = write(&dir, "p4.txt", &graph_to_text(&path(4)));
    assert_eq!(json(&["lemma", &p4])["applicable"], false);
}
