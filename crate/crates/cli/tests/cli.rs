use std::fs;
use std::path::PathBuf;
use std::process::Command;

use balgraph::digraph::LabeledDigraph;
use balgraph::ncpoly::parse_cd;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_balgraph"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let (code, out) = run(&all);
    (code, serde_json::from_str(&out).expect("valid json"))
}

fn fixture_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/fixtures")
}

fn fixture(name: &str) -> String {
    fixture_dir().join(name).display().to_string()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("balgraph-cli-{}-{name}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn cdindex_of_fixture_files() {
    assert_eq!(
        run(&["cdindex", "--graph", &fixture("fig1_left.json")]),
        (0, "2*c + 3\n".into())
    );
    assert_eq!(
        run(&["cdindex", "--graph", &fixture("fig1_right.json")]),
        (0, "5*d\n".into())
    );
    assert_eq!(
        run(&["cdindex", "--graph", "fig2_relation_ii.json"]),
        (0, "cc - d\n".into())
    );
    let (code, v) = run_json(&["cdindex", "--graph", "fig2_relation_i", "--ab"]);
    assert_eq!((code, v["ab_index"].as_str()), (0, Some("ab + ba")));
}

#[test]
fn unbalanced_chain_exits_one() {
    let (code, out) = run(&["balance", "--graph", &fixture("chain21.json")]);
    assert_eq!(code, 1);
    assert!(
        out.starts_with("unbalanced\nwitness: [0, 1] length 2"),
        "{out}"
    );
    let (code, v) = run_json(&["balance", "--graph", "chain21", "--equivalence"]);
    assert_eq!(code, 1);
    assert_eq!(v["balanced"], false);
    assert_eq!(v["witness"]["falling"], "1");
    assert_eq!(v["equivalence"]["cd_exists"], false);
    let (code, _) = run(&["cdindex", "--graph", "chain21"]);
    assert_eq!(code, 1);
}

#[test]
fn balanced_graph_reports_cd_index() {
    let (code, v) = run_json(&["balance", "--graph", "fig1_left", "--equivalence"]);
    assert_eq!(code, 0);
    assert_eq!(v["cd_index"], "2*c + 3");
    assert_eq!(v["equivalence"]["even_lengths"], true);
}

#[test]
fn bruhat_s3_longest_interval() {
    let (code, out) = run(&[
        "bruhat",
        "--type",
        "A",
        "--n",
        "3",
        "--interval",
        "123:321",
        "--complete-cd",
    ]);
    assert_eq!(code, 0);
    assert_eq!(parse_cd(out.trim()).unwrap(), parse_cd("1 + cc").unwrap());
    let (_, v) = run_json(&[
        "bruhat",
        "--type",
        "A",
        "--n",
        "3",
        "--interval",
        "1,2,3:3,2,1",
        "--poset-cd",
        "--r-poly",
    ]);
    assert_eq!(v["poset_cd"], "cc");
    assert_eq!(v["r_poly"], "q^3 - 2*q^2 + 2*q - 1");
    assert!(v.get("complete_cd").is_none());
    let (code, _) = run(&["bruhat", "--type", "A", "--n", "3", "--interval", "321:123"]);
    assert_eq!(code, 2);
}

#[test]
fn bruhat_dihedral_and_graph_output() {
    let dir = scratch("bruhat");
    let path = dir.join("i5.json");
    let (code, out) = run(&[
        "bruhat",
        "--type",
        "I",
        "--n",
        "5",
        "--poset-cd",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!((code, out.as_str()), (0, "cccc\n"));
    let g = LabeledDigraph::from_json(&fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(g.vertex_count(), 10);
    assert!(g.is_balanced().balanced);
}

#[test]
fn alexander_subset_and_sweep() {
    let (code, out) = run(&["alexander", "--graph", "fig3_b3", "--subset", "{1},{1,3}"]);
    assert_eq!(code, 0);
    assert!(out.contains("lhs=0 rhs=0 equal"), "{out}");
    let (code, v) = run_json(&["alexander", "--graph", "fig3_b3", "--all"]);
    assert_eq!(code, 0);
    assert_eq!(v["checks"].as_array().unwrap().len(), 64);
    assert_eq!(v["unequal"], 0);
    let (code, _) = run(&["alexander", "--graph", "fig3_b3", "--subset", "nope"]);
    assert_eq!(code, 2);
}

#[test]
fn qsym_bases() {
    let (_, out) = run(&["qsym", "--graph", "fig1_left", "--basis", "L"]);
    assert!(
        out.starts_with("rising: 3*L[1] + 2*L[2] + 2*L[1,1]\n"),
        "{out}"
    );
    let (_, v) = run_json(&["qsym", "--graph", "fig1_left", "--basis", "M"]);
    assert_eq!(v["rising"], "3*M[1] + 2*M[2] + 4*M[1,1]");
    assert_eq!(v["peak"], true);
    let (_, v) = run_json(&["qsym", "--graph", "chain21"]);
    assert_eq!(v["peak"], false);
}

#[test]
fn construct_roundtrip() {
    let dir = scratch("construct");
    let path = dir.join("g.json");
    let (code, _) = run(&[
        "construct",
        "--cd",
        "2*c + 3",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let p = path.to_str().unwrap();
    assert_eq!(run(&["cdindex", "--graph", p]), (0, "2*c + 3\n".into()));
    assert_eq!(run(&["balance", "--graph", p]).0, 0);
    let (code, v) = run_json(&["construct", "--cd", "cdc + dd"]);
    assert_eq!(code, 0);
    let g = LabeledDigraph::from_json(&v["graph"].to_string()).unwrap();
    assert_eq!(g.cd_index().unwrap(), parse_cd("cdc + dd").unwrap());
    assert_eq!(run(&["construct", "--cd", "c - d"]).0, 2);
    assert_eq!(run(&["construct", "--cd", "c + x"]).0, 2);
}

#[test]
fn search_is_deterministic() {
    let args = [
        "search",
        "--trials",
        "300",
        "--max-vertices",
        "7",
        "--seed",
        "5",
    ];
    let (code, a) = run_json(&args);
    let (_, b) = run_json(&args);
    assert_eq!(code, 0);
    assert_eq!(a, b);
    assert_eq!(a["trials"], 300);
    assert!(a["balanced"].as_u64().unwrap() > 0);
}

#[test]
fn fixtures_are_regenerated_exactly() {
    let dir = scratch("fixtures");
    let (code, _) = run(&["fixtures", "--out", dir.to_str().unwrap()]);
    assert_eq!(code, 0);
    for entry in fs::read_dir(fixture_dir()).unwrap() {
        let path = entry.unwrap().path();
        let fresh = dir.join(path.file_name().unwrap());
        assert_eq!(
            fs::read(&path).unwrap(),
            fs::read(&fresh).unwrap(),
            "{}",
            path.display()
        );
    }
    let shipped = fixture_dir();
    assert_eq!(
        run(&["fixtures", "--out", shipped.to_str().unwrap(), "--check"]).0,
        0
    );
    fs::write(dir.join("chain21.json"), "{}").unwrap();
    assert_eq!(
        run(&["fixtures", "--out", dir.to_str().unwrap(), "--check"]).0,
        1
    );
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["cdindex"]).0, 2);
    assert_eq!(run(&["cdindex", "--graph", "/nonexistent/graph.json"]).0, 2);
    assert_eq!(run(&["alexander", "--graph", "fig3_b3"]).0, 2);
}
