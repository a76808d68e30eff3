use std::process::Command;

use mdepth::cli::run;

const C8: &str = "n=8; edges=1-2,2-3,3-4,4-5,5-6,6-7,7-8,8-1";

fn json(args: &[&str]) -> serde_json::Value {
    let mut full = vec!["mdepth"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--format", "json"]);
    let out = run(full);
    assert_eq!(out.code, 0, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn analyze_octagon() {
    let v = json(&["analyze", "--edges", C8]);
    assert_eq!(v["depth"], 3);
    assert_eq!(v["mdepth"], 3);
    assert_eq!(v["dim"], 4);
    assert_eq!(v["maximal_depth"], true);
    assert_eq!(v["ass"].as_array().unwrap().len(), 10);
}

#[test]
fn analyze_two_planes() {
    let v = json(&["analyze", "--gens", "x1*x3,x1*x4,x2*x3,x2*x4"]);
    assert_eq!(v["depth"], 1);
    assert_eq!(v["mdepth"], 2);
    assert_eq!(v["generalized_cm"], true);
    assert_eq!(v["h_table"][1]["k_dim"], 1);
    assert!(v["h_table"][2].get("k_dim").is_none());
}

#[test]
fn filtration_and_seqcm_documents() {
    let f = json(&["filtration", "--edges", C8]);
    assert_eq!(f["t"], 3);
    assert_eq!(f["levels"][3]["depth_interval"], serde_json::json!([2, 2]));
    assert_eq!(f["levels"][4]["ideal_gens"], serde_json::json!(["1"]));
    let s = json(&["seqcm", "--edges", "1-2,2-3,3-4,4-5,5-1"]);
    assert_eq!(s["sequentially_cm"], true);
    let s = json(&["seqcm", "--edges", C8]);
    assert_eq!(s["sequentially_cm"], false);
    assert!(s["witness"]["face"].is_string());
}

#[test]
fn att_tags() {
    let v = json(&["att", "--edges", C8]);
    let top = &v["degrees"][4]["claims"];
    let tags: Vec<&str> = top.as_array().unwrap().iter().map(|c| c["tag"].as_str().unwrap()).collect();
    assert_eq!(tags, ["top-assh", "lower-bound-only"]);
}

#[test]
fn file_inputs_by_format() {
    let dir = std::env::temp_dir().join(format!("mdepth-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let edges = dir.join("c8.txt");
    std::fs::write(&edges, C8).unwrap();
    let facets = dir.join("tri.json");
    std::fs::write(&facets, r#"{"vertices": 3, "facets": [[1,2],[2,3],[1,3]]}"#).unwrap();
    let a = json(&["analyze", edges.to_str().unwrap()]);
    assert_eq!(a["depth"], 3);
    let b = json(&["analyze", facets.to_str().unwrap()]);
    assert_eq!((b["dim"].as_u64(), b["depth"].as_u64()), (Some(2), Some(2)));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn exit_codes() {
    let cases: &[(&[&str], i32)] = &[
        (&["analyze", "--gens", "x1**x2"], 2),
        (&["analyze", "--edges", "1-1"], 2),
        (&["analyze"], 2),
        (&["analyze", "--gens", "x1", "--field", "fp=9"], 2),
        (&["analyze", "--gens", "x1*x2", "--max-vertices", "1"], 3),
        (&["analyze", "--gens", "x1^40*x2^40*x3^40*x4^40*x5^40", "--search-cap", "1000"], 3),
        (&["analyze", "--gens", "1", "--vars", "x"], 4),
        (&["localize", "--edges", "1-2", "--face", "1,2"], 4),
        (&["psupp", "--gens", "x1*x2", "--degree", "9"], 4),
        (&["directsum", "--gens", "x1", "--gens", "y1"], 4),
        (&["regress"], 0),
    ];
    for (args, code) in cases {
        let mut full = vec!["mdepth"];
        full.extend_from_slice(args);
        let out = run(full);
        assert_eq!(out.code, *code, "{args:?}: {}", out.stderr);
        if *code != 0 {
            assert_eq!(out.stderr.lines().count(), 1, "{args:?}: one-line reason expected");
            assert!(out.stderr.starts_with("error["));
        }
    }
}

#[test]
fn binary_reruns_are_byte_identical() {
    let exe = env!("CARGO_BIN_EXE_mdepth");
    let runs: Vec<_> = (0..2)
        .map(|_| {
            Command::new(exe)
                .args(["probe", "--seed", "11", "--samples", "40", "--format", "json"])
                .output()
                .unwrap()
        })
        .collect();
    assert_eq!(runs[0].status.code(), Some(0));
    assert_eq!(runs[0].stdout, runs[1].stdout);
    let bad = Command::new(exe).args(["analyze", "--gens", "x1^"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn tensor_and_polarize() {
    let t = json(&["tensor", "--gens", "x1*x2", "--gens", "x1*x2,x2*x3"]);
    assert_eq!(t["factor_depths"], serde_json::json!([1, 1]));
    assert_eq!(t["join"]["depth"], 2);
    let p = json(&["polarize", "--gens", "x^2,x*y"]);
    assert_eq!(p["gens"], serde_json::json!(["x*y", "x*x_2"]));
    assert_eq!(p["added_vars"], 1);
}
