use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::{json, Value};

use torfib::document::Document;

fn torfib(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_torfib"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn torfib_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_torfib"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn report(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "exit {:?}, stderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("report is JSON")
}

fn temp_file(name: &str, contents: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("torfib-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

#[test]
fn twisted_rp2_top_cohomology() {
    let r = report(&torfib(&["cohomology", "--degree", "2", "builtin:rp2-twisted"]));
    assert_eq!(r["result"], "Z^3");
    let r = report(&torfib(&["cohomology", "--degree", "1", "builtin:rp2-twisted"]));
    assert_eq!(r["result"], "(Z/2)^3");
}

#[test]
fn cech_cohomology_of_the_bundle_matches() {
    let r = report(&torfib(&["cohomology", "--degree", "2", "builtin:rp2-bundle"]));
    assert_eq!(r["result"], "Z^3");
}

#[test]
fn rp2_bundle_monodromy() {
    let r = report(&torfib(&["monodromy", "builtin:rp2-bundle"]));
    assert_eq!(r["result"]["a"], json!([[-1, 0, 0], [0, -1, 0], [0, 0, -1]]));
}

#[test]
fn snf_of_small_matrix() {
    let doc = r#"{"schema": "torfib/1", "kind": "matrix", "rows": [[2, 4], [6, 8]]}"#;
    let r = report(&torfib_stdin(&["snf", "-"], doc));
    assert_eq!(r["result"]["diagonal"], json!([2, 4]));
    let m = |v: &Value| -> Vec<Vec<i64>> { serde_json::from_value(v.clone()).unwrap() };
    let (u, v) = (m(&r["witness"]["u"]), m(&r["witness"]["v"]));
    let a = [[2i64, 4], [6, 8]];
    let mut uav = [[0i64; 2]; 2];
    for (i, row) in uav.iter_mut().enumerate() {
        for (j, e) in row.iter_mut().enumerate() {
            *e = (0..2)
                .flat_map(|k| (0..2).map(move |l| (k, l)))
                .map(|(k, l)| u[i][k] * a[k][l] * v[l][j])
                .sum();
        }
    }
    assert_eq!(uav, [[2, 0], [0, 4]]);
}

#[test]
fn chern_of_s2_tetra() {
    let r = report(&torfib(&["chern", "builtin:s2-tetra"]));
    let values: Vec<i64> = r["result"]["values"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v["value"][0].as_i64().unwrap())
        .collect();
    assert_eq!(values, vec![0, 0, 0, 1]);
    assert_eq!(r["result"]["class"]["free"].as_array().unwrap().len(), 1);
}

#[test]
fn verify_cocycle_reports() {
    let r = report(&torfib(&["verify-cocycle", "builtin:circle-loop"]));
    assert_eq!(r["result"], "ok");
    assert!(r.get("violations").is_none());

    let bad = r#"{"schema": "torfib/1", "kind": "transition-data", "dim": 1,
      "nerve": {"vertices": ["A", "B", "C"],
                "edges": [["A", "B"], ["B", "C"], ["A", "C"]],
                "triangles": [["A", "B", "C"]],
                "spanning_tree": [["A", "B"], ["B", "C"]],
                "loops": [{"edge": ["A", "C"], "word": ""}]},
      "labels": [{"edge": ["A", "B"], "linear": [[1]], "translation": ["1/2"]},
                 {"edge": ["B", "C"], "linear": [[1]], "translation": ["7/10"]},
                 {"edge": ["A", "C"], "linear": [[1]], "translation": ["3/10"]}]}"#;
    let path = temp_file("bad.json", bad);
    let r = report(&torfib(&["verify-cocycle", path.to_str().unwrap()]));
    assert_eq!(r["result"], "violated");
    assert_eq!(r["violations"][0]["discrepancy"], json!(["9/10"]));
}

#[test]
fn twist_then_read_back() {
    let r = report(&torfib(&["twist", "--class", "1,0,0", "builtin:rp2-bundle"]));
    let doc = Document::from_json(&r["result"]).unwrap();
    let Document::TransitionData(td) = doc else {
        panic!("twist returns transition data")
    };
    let mono = torfib::cocycles::monodromy_of(&td).unwrap();
    assert_eq!(mono, torfib::cocycles::monodromy_of(&torfib::datasets::rp2_bundle()).unwrap());
    assert!(!r["witness"]["class"]["free"].as_array().unwrap().iter().all(|x| x == 0));
}

#[test]
fn realize_with_negative_entries() {
    let r = report(&torfib(&["realize", "--class", "-2,5,-1", "builtin:rp2-bundle"]));
    assert!(r["witness"]["coboundary"].is_array());
    let Document::TransitionData(td) = Document::from_json(&r["result"]).unwrap() else {
        panic!()
    };
    assert!(torfib::cocycles::verify_cocycle(&td).is_ok());
}

#[test]
fn realize_on_bare_nerve() {
    let nerve = Document::Nerve(torfib::datasets::s2_tetra_nerve()).to_pretty_string();
    let path = temp_file("s2-nerve.json", &nerve);
    let r = report(&torfib(&["realize", "--class", "3", path.to_str().unwrap()]));
    assert!(r["result"]["labels"].is_array());
}

#[test]
fn conjugacy_verdicts() {
    let rep = |rows: &str| {
        format!(
            r#"{{"schema": "torfib/1", "kind": "representation", "generators": ["a"],
               "relators": ["a^2"], "dim": 2, "images": [{rows}]}}"#
        )
    };
    let swap = temp_file("swap.json", &rep("[[0, 1], [1, 0]]"));
    let reflect = temp_file("reflect.json", &rep("[[1, 0], [0, -1]]"));
    let swap2 = temp_file("swap2.json", &rep("[[1, 0], [-1, -1]]"));
    let r = report(&torfib(&["conjugacy", "--bound", "2", swap.to_str().unwrap(), reflect.to_str().unwrap()]));
    assert_eq!(r["result"], "not-conjugate");
    assert_eq!(r["witness"]["invariant"], "FixedCokernel");
    let r = report(&torfib(&["conjugacy", "--bound", "2", swap.to_str().unwrap(), swap2.to_str().unwrap()]));
    assert_eq!(r["result"], "conjugate");
}

#[test]
fn exit_codes() {
    let out = torfib(&["cohomology", "--degree", "7", "builtin:rp2-twisted"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("DegreeOutOfRange"));

    let out = torfib_stdin(&["snf", "-"], "{not json");
    assert_eq!(out.status.code(), Some(2));

    let out = torfib(&["monodromy", "builtin:nowhere"]);
    assert_eq!(out.status.code(), Some(2));

    let out = torfib(&["monodromy", "builtin:rp2-twisted"]);
    assert_eq!(out.status.code(), Some(2));

    let out = torfib(&["twist", "--class", "1,0", "builtin:rp2-bundle"]);
    assert_eq!(out.status.code(), Some(2));

    let out = torfib(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["chern", "builtin:rp2-bundle"][..],
        &["realize", "--class", "2,5,-1", "builtin:rp2-bundle"][..],
    ] {
        assert_eq!(torfib(args).stdout, torfib(args).stdout);
    }
}

#[test]
fn paper_examples_pass() {
    let r = report(&torfib(&["paper-examples"]));
    assert_eq!(r["result"], "pass");
    assert!(r["checks"].as_array().unwrap().iter().all(|c| c["pass"] == true));
}
