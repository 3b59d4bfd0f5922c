use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use fancross::embedding::{from_json, to_json};
use fancross::enumerate::{enumerate_embeddings, EnumSpec};
use fancross::{catalog, Graph};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fancross")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn emit(dir: &Path, name: &str) -> PathBuf {
    let path = dir.join(format!("{name}.json"));
    std::fs::write(&path, to_json(&catalog::entry(name).unwrap())).unwrap();
    path
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn catalog_list_and_emit() {
    let o = run(&["catalog", "--list"]);
    assert!(o.status.success());
    for x in catalog::entries() {
        assert!(stdout(&o).contains(x.name));
    }
    let o = run(&["catalog", "--emit", "k7-b"]);
    assert!(o.status.success());
    assert_eq!(from_json(&stdout(&o)).unwrap(), catalog::k7_embeddings()[1]);
    assert_eq!(run(&["catalog", "--emit", "k9"]).status.code(), Some(2));
}

#[test]
fn classify_k5_e() {
    let dir = tempfile::tempdir().unwrap();
    let e = emit(dir.path(), "k5-e");
    let o = run(&["classify", s(&e)]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("adjacency-crossing: true"));
    assert!(text.contains("fan-crossing: false"));
    assert!(text.contains("triangle-crossings: 1"));
    let o = run(&["classify", s(&e), "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["adjacency_crossing"], true);
    assert_eq!(v["fan_crossing"], false);
    assert_eq!(v["triangle_crossings"].as_array().unwrap().len(), 1);
}

#[test]
fn transform_e_to_c() {
    let dir = tempfile::tempdir().unwrap();
    let e = emit(dir.path(), "k5-e");
    let c = emit(dir.path(), "k5-c");
    let a = emit(dir.path(), "k5-a");
    let out = dir.path().join("out.json");
    let trace = dir.path().join("trace.json");
    let o = run(&["transform", s(&e), "--to", "fan-crossing", "--expect-iso", s(&c), "-o", s(&out), "--trace", s(&trace)]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(from_json(&std::fs::read_to_string(&out).unwrap()).unwrap().is_valid());
    let t: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&trace).unwrap()).unwrap();
    assert!(!t["steps"].as_array().unwrap().is_empty());
    let o = run(&["transform", s(&e), "--to", "fan-crossing", "--expect-iso", s(&a)]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn transform_m_to_fan_planar() {
    let dir = tempfile::tempdir().unwrap();
    let m = emit(dir.path(), "graph-m");
    let out = dir.path().join("out.json");
    let o = run(&["transform", s(&m), "--to", "fan-planar", "-o", s(&out)]);
    assert!(o.status.success());
    let r = run(&["classify", s(&out)]);
    assert!(stdout(&r).contains("fan-planar: true"));
}

#[test]
fn validate_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let c = emit(dir.path(), "k5-c");
    assert!(run(&["validate", s(&c)]).status.success());

    let broken = dir.path().join("broken.json");
    std::fs::write(&broken, "{\n  \"format\": \"fancross-embedding/1\",\n  \"n\": 3,\n  \"edges\": [[0, 1]\n").unwrap();
    let o = run(&["validate", s(&broken)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line"));

    let mut bad = catalog::k5_embeddings()[2].clone();
    bad.rotations[0].pop();
    let bad_path = dir.path().join("bad.json");
    std::fs::write(&bad_path, to_json(&bad)).unwrap();
    assert_eq!(run(&["validate", s(&bad_path)]).status.code(), Some(1));
    assert_eq!(run(&["classify", s(&bad_path)]).status.code(), Some(1));

    assert_eq!(run(&["validate"]).status.code(), Some(2));
    assert_eq!(run(&["transform", s(&c), "--to", "planar"]).status.code(), Some(2));
}

#[test]
fn enumerate_matches_library() {
    let dir = tempfile::tempdir().unwrap();
    let g = dir.path().join("k4.json");
    std::fs::write(&g, r#"{"n": 4, "edges": [[0,1],[0,2],[0,3],[1,2],[1,3],[2,3]]}"#).unwrap();
    let want = enumerate_embeddings(&EnumSpec::new(Graph::complete(4), 2).deduped()).unwrap();
    let o = run(&["enumerate", "--graph", s(&g), "--max-crossings", "2", "--dedupe", "--count"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), want.len().to_string());
    let o = run(&["enumerate", "--graph", s(&g), "--max-crossings", "2", "--dedupe"]);
    let docs: Vec<serde_json::Value> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(docs.len(), want.len());
    let o = run(&["enumerate", "--graph", s(&g), "--max-crossings", "1", "--filter", "no-such-class"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn render_writes_svg() {
    let dir = tempfile::tempdir().unwrap();
    let e = emit(dir.path(), "k5-e");
    let svg = dir.path().join("e.svg");
    assert!(run(&["render", s(&e), "--svg", s(&svg)]).status.success());
    let text = std::fs::read_to_string(&svg).unwrap();
    let k5e = catalog::k5_embeddings().swap_remove(4);
    assert_eq!(text.matches(r#"class="crossing""#).count(), k5e.crossing_count());
    assert_eq!(text.matches(r#"class="vertex""#).count(), 5);
}
