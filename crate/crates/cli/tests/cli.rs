use std::collections::BTreeSet;
use std::process::{Command, Output};

use serde_json::Value;

fn burnside(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_burnside")).args(args).output().expect("binary runs")
}

fn json_of(args: &[&str]) -> Value {
    let out = burnside(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("JSON report")
}

fn numbers(v: &Value, acc: &mut Vec<String>) {
    match v {
        Value::Number(n) => acc.push(n.to_string()),
        Value::Array(a) => a.iter().for_each(|x| numbers(x, acc)),
        Value::Object(o) => o.values().for_each(|x| numbers(x, acc)),
        _ => {}
    }
}

#[test]
fn marks_of_zero_one() {
    let v = json_of(&["marks", "--catalog", "mono_01"]);
    assert_eq!(v["matrix"], serde_json::json!([[1, 1], [0, 1]]));
    assert_eq!(v["determinant"], "1");
    assert_eq!(v["certificate"]["semisimple"], true);
}

#[test]
fn t2_is_not_distinguishable_at_rank_one() {
    let v = json_of(&["structure", "--catalog", "full_transformation 2"]);
    assert_eq!(v["verdict"], "not distinguishable");
    let witnesses = v["witnesses"].as_array().unwrap();
    assert_eq!(witnesses.len(), 1);
    // the witness J-class consists of constant maps
    let label = witnesses[0]["designated_idempotent"].as_str().unwrap();
    let digits: BTreeSet<char> = label.chars().filter(char::is_ascii_digit).collect();
    assert_eq!(digits.len(), 1, "{label}");
    assert_eq!(v["isomorphic"], false);
    assert_eq!(v["rank"], 4);
    assert_eq!(v["product_rank"], 3);
}

#[test]
fn appendix_maximal_subgroup_has_order_two() {
    let v = json_of(&["analyze", "--catalog", "appendix_counterexample"]);
    assert_eq!(v["size"], 13);
    let orders: Vec<u64> = v["j_classes"]
        .as_array()
        .unwrap()
        .iter()
        .filter_map(|j| j["maximal_subgroup"]["order"].as_u64())
        .collect();
    assert_eq!(orders, [1, 2]);
}

#[test]
fn exit_codes() {
    assert_eq!(burnside(&["analyze", "--catalog", "no_such_monoid"]).status.code(), Some(2));
    assert_eq!(burnside(&["analyze"]).status.code(), Some(2));
    let capped = burnside(&["burnside", "--catalog", "full_transformation 2", "--congruence-cap", "1"]);
    assert_eq!(capped.status.code(), Some(3));
    let err: Value = serde_json::from_slice(&capped.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "cap_exceeded");
}

#[test]
fn malformed_inputs_are_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        ("not json", "{"),
        ("non-associative", r#"{"size":3,"identity":0,"cayley":[[0,1,2],[1,2,1],[2,1,1]],"labels":["1","a","b"]}"#),
        ("wrong identity", r#"{"size":2,"identity":0,"cayley":[[0,0],[0,1]]}"#),
        ("bad image", r#"{"type":"transformations","degree":2,"generators":[[1,3]]}"#),
        ("bad field", r#"{"type":"matrices","field":6,"dim":1,"generators":[[[1]]]}"#),
        ("bad action", r#"{"monoid":"mono_01","points":2,"action":[[0,1],[1,1]]}"#),
    ];
    for (name, body) in cases {
        let path = dir.path().join("in.json");
        std::fs::write(&path, body).unwrap();
        let out = burnside(&["analyze", "--input", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(2), "{name}: {}", String::from_utf8_lossy(&out.stderr));
    }
    let path = dir.path().join("big.json");
    std::fs::write(&path, r#"{"type":"transformations","degree":3,"generators":[[2,1,3],[2,3,1],[1,1,3]]}"#).unwrap();
    let out = burnside(&["analyze", "--input", path.to_str().unwrap(), "--element-cap", "10"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn generator_inputs_match_catalog() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t3.json");
    std::fs::write(&path, r#"{"type":"transformations","degree":3,"generators":[[2,1,3],[2,3,1],[1,1,3]]}"#).unwrap();
    let v = json_of(&["burnside", "--input", path.to_str().unwrap()]);
    assert_eq!(v["rank"], 8);
    let path = dir.path().join("m22.json");
    let gens: Vec<String> = (0..16)
        .map(|c: u32| format!("[[{},{}],[{},{}]]", c >> 3 & 1, c >> 2 & 1, c >> 1 & 1, c & 1))
        .collect();
    std::fs::write(&path, format!(r#"{{"type":"matrices","field":2,"dim":2,"generators":[{}]}}"#, gens.join(","))).unwrap();
    let v = json_of(&["structure", "--input", path.to_str().unwrap()]);
    assert_eq!(v["verdict"], "distinguishable");
    assert_eq!(v["rank"], 6);
}

#[test]
fn emitted_catalog_entries_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["five_element_nonsubring", "chain_mset 3", "symmetric_group 3"] {
        let path = dir.path().join("entry.json");
        let emit = burnside(&["catalog", "emit", name, "--out", path.to_str().unwrap()]);
        assert!(emit.status.success());
        let direct = burnside(&["burnside", "--catalog", name]);
        let via_file = burnside(&["burnside", "--input", path.to_str().unwrap()]);
        assert_eq!(direct.stdout, via_file.stdout, "{name}");
    }
}

#[test]
fn output_is_deterministic() {
    let args = ["marks", "--catalog", "matrix_monoid 2 2", "--seed", "17"];
    assert_eq!(burnside(&args).stdout, burnside(&args).stdout);
}

#[test]
fn text_and_json_carry_the_same_numbers() {
    for cmd in ["analyze", "orbits", "burnside", "marks", "structure"] {
        let v = json_of(&[cmd, "--catalog", "full_transformation 2"]);
        let text = burnside(&[cmd, "--catalog", "full_transformation 2", "--format", "text"]);
        let text = String::from_utf8(text.stdout).unwrap();
        let mut from_json = Vec::new();
        numbers(&v, &mut from_json);
        let from_text: Vec<String> = text
            .split(|c: char| !(c.is_ascii_digit() || c == '-'))
            .filter(|s| !s.is_empty() && s.parse::<i64>().is_ok())
            .map(String::from)
            .collect();
        // labels like [1,2] contribute digits too, so compare as multisets restricted to JSON numbers
        let mut pool = from_text.clone();
        for n in &from_json {
            let pos = pool.iter().position(|t| t == n);
            assert!(pos.is_some(), "{cmd}: {n} missing from text output");
            pool.remove(pos.unwrap());
        }
    }
}

#[test]
fn orbits_of_a_monoid_use_the_regular_action() {
    let v = json_of(&["orbits", "--catalog", "full_transformation 2"]);
    assert_eq!(v["points"], 4);
    let sinks = v["strong_orbits"].as_array().unwrap().iter().filter(|o| o["sink"] == true).count();
    assert_eq!(sinks, 1);
}
