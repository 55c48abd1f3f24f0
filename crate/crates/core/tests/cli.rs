use std::path::PathBuf;
use std::process::{Command, Output};

use zf_core::io::{parse_graph, read_graph_file};
use zf_core::{families, is_isomorphic};

fn example(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "examples", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn zf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_zf")).args(args).output().expect("run zf")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn num_of_h_graph() {
    let o = zf(&["num", &example("h_graph.txt")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "2");
}

#[test]
fn sets_of_c4() {
    let o = zf(&["sets", &example("c4.txt")]);
    assert_eq!(stdout(&o), "{0,1}\n{0,3}\n{1,2}\n{2,3}\n");
    let o = zf(&["sets", &example("c4.txt"), "--out", "data"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["z"], 2);
    assert_eq!(v["sets"].as_array().unwrap().len(), 4);
}

#[test]
fn rgraph_stats_of_c5() {
    let o = zf(&["rgraph", &example("c5.txt"), "--stats"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for line in ["order: 5", "connected: true", "shape: cycle", "z: 2"] {
        assert!(text.lines().any(|l| l == line), "missing {line:?} in {text}");
    }
}

#[test]
fn rgraph_dot_has_one_node_per_set() {
    let o = zf(&["rgraph", &example("c5.txt"), "--out", "dot"]);
    let text = stdout(&o);
    assert!(text.starts_with("graph"));
    assert_eq!(text.matches("label=").count(), 5);
    assert_eq!(text.matches(" -- ").count(), 5);
}

#[test]
fn check_reports_through_exit_code() {
    let o = zf(&["check", &example("c4.txt"), "--set", "0,2"]);
    assert_eq!(o.status.code(), Some(1));
    let o = zf(&["check", &example("c4.txt"), "--set", "0,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "zero forcing set");
}

#[test]
fn closure_trace_lists_forces() {
    let o = zf(&["closure", &example("c4.txt"), "--set", "0,1", "--trace"]);
    let text = stdout(&o);
    assert_eq!(text.lines().filter(|l| l.contains(" -> ")).count(), 2);
    assert!(text.contains("reversal: "));
}

#[test]
fn rdist_on_c5() {
    let o = zf(&["rdist", &example("c5.txt"), "--from", "0,1", "--to", "2,3"]);
    assert_eq!(stdout(&o).trim(), "2");
    let o = zf(&["rdist", &example("c5.txt"), "--from", "0,2", "--to", "2,3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn rdist_unreachable_across_components() {
    let dir = tempfile::tempdir().unwrap();
    let prism = zf(&["family", "prism_with_leaves", "3"]);
    let f = write(&dir, "prism.txt", &stdout(&prism));
    let o = zf(&["rgraph", &f, "--components"]);
    assert_eq!(o.status.code(), Some(0));
    let o = zf(&["rgraph", &f, "--out", "data"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let nodes = v["nodes"].as_array().unwrap();
    let edges = v["edges"].as_array().unwrap();
    let isolated = (0..nodes.len())
        .find(|&i| !edges.iter().any(|e| e[0] == i || e[1] == i))
        .expect("an isolated node");
    let other = (isolated + 1) % nodes.len();
    let fmt = |x: &serde_json::Value| {
        x.as_array().unwrap().iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
    };
    let o = zf(&["rdist", &f, "--from", &fmt(&nodes[isolated]), "--to", &fmt(&nodes[other])]);
    assert_eq!(stdout(&o).trim(), "unreachable");
}

#[test]
fn convert_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let json = zf(&["convert", &example("h_graph.txt"), "--to", "json"]);
    let f = write(&dir, "h.json", &stdout(&json));
    let back = zf(&["convert", &f, "--to", "edgelist"]);
    let g = parse_graph(&stdout(&back)).unwrap();
    assert!(is_isomorphic(&g, &families::h_graph()).unwrap());
    assert_eq!(g, read_graph_file(&example("h_graph.txt")).unwrap());
}

#[test]
fn path_dot_output() {
    let o = zf(&["family", "path", "6", "--out", "dot"]);
    let text = stdout(&o);
    let nodes = text.lines().filter(|l| l.trim().ends_with(';') && !l.contains("--")).count();
    assert_eq!(nodes, 6);
    assert_eq!(text.matches(" -- ").count(), 5);
}

#[test]
fn empty_graph_formats() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(&dir, "empty.txt", "0 0\n");
    assert_eq!(stdout(&zf(&["convert", &f, "--to", "json"])).trim(), r#"{"n":0,"edges":[]}"#);
    let j = write(&dir, "empty.json", r#"{"n":0,"edges":[]}"#);
    assert_eq!(stdout(&zf(&["convert", &j, "--to", "edgelist"])).trim(), "0 0");
    assert_eq!(stdout(&zf(&["num", &f])).trim(), "0");
}

#[test]
fn out_path_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let target = dir.path().join("c5.json");
    let o = zf(&["family", "cycle", "5", "--out", target.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let g = read_graph_file(target.to_str().unwrap()).unwrap();
    assert!(is_isomorphic(&g, &families::cycle(5).unwrap()).unwrap());
}

#[test]
fn malformed_input_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    for (name, text) in [
        ("range.txt", "3 1\n0 9\n"),
        ("count.txt", "3 2\n0 1\n"),
        ("loop.txt", "3 1\n1 1\n"),
        ("junk.txt", "three vertices\n"),
        ("extra.json", r#"{"n":2,"edges":[[0,1]],"w":1}"#),
    ] {
        let f = write(&dir, name, text);
        assert_eq!(zf(&["num", &f]).status.code(), Some(2), "{name}");
    }
    assert_eq!(zf(&["num", "/nonexistent/graph.txt"]).status.code(), Some(2));
    assert_eq!(zf(&["check", &example("c4.txt"), "--set", "0, 1"]).status.code(), Some(2));
    assert_eq!(zf(&["check", &example("c4.txt"), "--set", "0,7"]).status.code(), Some(2));
    assert_eq!(zf(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn capacity_exits_three() {
    let dir = tempfile::tempdir().unwrap();
    let c40 = write(&dir, "c40.txt", &stdout(&zf(&["family", "cycle", "40"])));
    let o = zf(&["num", &c40]);
    assert_eq!(o.status.code(), Some(3));
    assert!(!o.stderr.is_empty());
    assert_eq!(zf(&["--cap", "4", "num", &example("c5.txt")]).status.code(), Some(3));
}

#[test]
fn large_cap_needs_acknowledgement() {
    assert_eq!(zf(&["--cap", "40", "num", &example("c4.txt")]).status.code(), Some(2));
    let o = zf(&["--cap", "40", "--allow-slow", "num", &example("c4.txt")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(zf(&["--cap", "65", "--allow-slow", "num", &example("c4.txt")]).status.code(), Some(3));
}

#[test]
fn tree_pathcover_commands() {
    let dir = tempfile::tempdir().unwrap();
    let h2 = write(&dir, "h2.txt", &stdout(&zf(&["family", "spider_tree_three_leaves", "2"])));
    let o = zf(&["tree", "pathcover", &h2]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).lines().count(), 4);
    let o = zf(&["tree", "pathcover", &example("h_graph.txt"), "--all"]);
    let covers = stdout(&o);
    assert_eq!(covers.trim().split("\n\n").count(), 1);
    assert_eq!(zf(&["tree", "pathcover", &example("c4.txt")]).status.code(), Some(2));
}

#[test]
fn tree_suppress_command() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(&dir, "p5.txt", &stdout(&zf(&["family", "path", "5"])));
    let o = zf(&["tree", "suppress", &p, "--triple", "1,2,3"]);
    assert_eq!(o.status.code(), Some(0));
    let g = parse_graph(&stdout(&o)).unwrap();
    assert!(is_isomorphic(&g, &families::path(4).unwrap()).unwrap());
    assert_eq!(zf(&["tree", "suppress", &p, "--triple", "0,1,2"]).status.code(), Some(2));
}

#[test]
fn verify_exit_codes_and_report() {
    let dir = tempfile::tempdir().unwrap();
    let report = dir.path().join("report.json");
    let o = zf(&["verify", "cn2_path", "--max-n", "7", "--report", report.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("PASS cn2_path"));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    let r = &v.as_array().unwrap()[0];
    assert_eq!(r["law_id"], "cn2_path");
    assert!(r["instances_checked"].as_u64().unwrap() > 0);
    assert_eq!(r["failures"].as_array().unwrap().len(), 0);

    assert_eq!(zf(&["verify", "no_such_law"]).status.code(), Some(2));
    assert_eq!(zf(&["verify", "hypercube_trees", "--max-n", "9"]).status.code(), Some(3));
    let list = stdout(&zf(&["verify", "--list"]));
    assert!(list.lines().count() >= 20);
    assert!(list.contains("tree_connected"));
}

#[test]
fn family_listing_rejects_unknown_names() {
    assert_eq!(zf(&["family", "dodecahedron"]).status.code(), Some(2));
    assert_eq!(zf(&["family", "cycle"]).status.code(), Some(2));
}

#[test]
fn shipped_examples_parse() {
    let dir: PathBuf = [env!("CARGO_MANIFEST_DIR"), "examples"].iter().collect();
    let mut seen = 0;
    for entry in std::fs::read_dir(dir).unwrap() {
        let p = entry.unwrap().path();
        if p.extension().is_some_and(|e| e == "txt" || e == "json") {
            read_graph_file(p.to_str().unwrap()).unwrap();
            assert_eq!(zf(&["num", p.to_str().unwrap()]).status.code(), Some(0));
            seen += 1;
        }
    }
    assert!(seen >= 3);
}
