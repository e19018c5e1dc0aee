use std::process::{Command, Output};

use serde_json::Value;

fn triads(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_triads"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json_lines(o: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&o.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).expect("each line is JSON"))
        .collect()
}

#[test]
fn verify_success_prints_certificate() {
    let o = triads(&["verify", "45", "64", "180"]);
    assert_eq!(code(&o), 0);
    let v = &json_lines(&o)[0];
    assert_eq!(v["f"], "17");
    assert_eq!(v["g"], "150");
    assert_eq!(v["h"], "720");
}

#[test]
fn verify_failure_names_e1() {
    let o = triads(&["verify", "1", "2", "3"]);
    assert_eq!(code(&o), 1);
    let v = &json_lines(&o)[0];
    assert_eq!(v["failed"], "e1");
    assert_eq!(v["value"], "6");
}

#[test]
fn verify_failure_names_e2_and_e3() {
    // sum 4, pairwise sum 5
    assert_eq!(json_lines(&triads(&["verify", "1", "1", "2"]))[0]["failed"], "e2");
    // sum 16, pairwise sum 81, product 126
    let o = triads(&["verify", "3", "6", "7"]);
    assert_eq!(code(&o), 1);
    assert_eq!(json_lines(&o)[0]["failed"], "e3");
    assert_eq!(json_lines(&o)[0]["value"], "126");
}

#[test]
fn verify_usage_errors() {
    assert_eq!(code(&triads(&["verify", "45", "64"])), 2);
    assert_eq!(code(&triads(&["verify", "45", "64", "x"])), 2);
    assert_eq!(code(&triads(&["verify", "0", "64", "180"])), 2);
    assert_eq!(code(&triads(&["frobnicate"])), 2);
    assert_eq!(code(&triads(&["--format", "yaml", "verify", "1", "1", "1"])), 2);
}

#[test]
fn verify_big_triad() {
    let o = triads(&["verify", "1633780814400", "252782198228", "3474741058973"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn family_eval_with_provenance() {
    let o = triads(&["family", "parmsol1", "1", "2"]);
    assert_eq!(code(&o), 0);
    let v = &json_lines(&o)[0];
    let mut got: Vec<&str> = ["a", "b", "c"].iter().map(|k| v[k].as_str().unwrap()).collect();
    got.sort_by_key(|s| s.parse::<u64>().unwrap());
    assert_eq!(got, ["45", "64", "180"]);
    assert!(v["provenance"].as_str().unwrap().contains("(s, t) = (1, 2)"));
}

#[test]
fn family_errors() {
    assert_eq!(code(&triads(&["family", "parmsol1", "1", "1"])), 1);
    assert_eq!(code(&triads(&["family", "parmsol1", "1"])), 2);
    assert_eq!(code(&triads(&["family", "nosuch", "1", "2"])), 2);
    assert_eq!(code(&triads(&["family-check", "nosuch"])), 2);
}

#[test]
fn family_list_has_all_entries() {
    let o = triads(&["family-list"]);
    assert_eq!(code(&o), 0);
    let names: Vec<String> = json_lines(&o)
        .iter()
        .map(|v| v["name"].as_str().unwrap().to_string())
        .collect();
    for n in ["parmsol1", "parmsol4", "allsq1", "allsq4", "gensol1"] {
        assert!(names.iter().any(|x| x == n), "{n} missing");
    }
}

#[test]
fn family_check_gensol1() {
    let o = triads(&["family-check", "gensol1"]);
    assert_eq!(code(&o), 0);
    let v = &json_lines(&o)[0];
    assert_eq!(v["verified"], true);
    assert_eq!(v["classification"], "no-squares");
    assert_eq!(v["square_members"], serde_json::json!([false, false, false]));
}

#[test]
fn generate_one_and_two() {
    let o = triads(&["generate", "1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json_lines(&o)[0]["degree"], 8);
    let o = triads(&["generate", "2"]);
    assert_eq!(code(&o), 0);
    assert_eq!(json_lines(&o)[0]["verified"], true);
}

#[test]
fn generate_zero_is_usage_error() {
    assert_eq!(code(&triads(&["generate", "0"])), 2);
}

#[test]
fn search_streams_known_triads() {
    let o = triads(&["search", "200"]);
    assert_eq!(code(&o), 0);
    let lines = json_lines(&o);
    let has = |a: &str, b: &str, c: &str| {
        lines.iter().any(|v| v["a"] == a && v["b"] == b && v["c"] == c)
    };
    assert!(has("45", "64", "180"));
    assert!(has("72", "136", "153"));
    assert_eq!(o.stdout, triads(&["search", "--bound", "200", "--workers", "1"]).stdout);
}

#[test]
fn search_csv_and_primitive() {
    let o = triads(&["--format", "csv", "search", "--bound", "200", "--primitive"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("a,b,c,f,g,h"));
    assert!(text.contains("45,64,180,17,150,720"));
    assert_eq!(code(&triads(&["search", "0"])), 2);
}

#[test]
fn table1_all_rows() {
    let o = triads(&["table1"]);
    assert_eq!(code(&o), 0);
    let lines = json_lines(&o);
    let last = lines.last().unwrap();
    assert_eq!(last["matched"], 21);
    assert_eq!(last["total"], 21);
}

#[test]
fn corpus_includes_big_triad() {
    let o = triads(&["corpus"]);
    assert_eq!(code(&o), 0);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.contains("1633780814400"));
}

#[test]
fn two_squares() {
    let o = triads(&["two-squares", "13/4"]);
    assert_eq!(code(&o), 0);
    let v = &json_lines(&o)[0];
    let p: f64 = eval(v["p"].as_str().unwrap());
    let q: f64 = eval(v["q"].as_str().unwrap());
    assert!((p * p + q * q - 3.25).abs() < 1e-12);
    assert_eq!(code(&triads(&["two-squares", "3"])), 1);
    assert_eq!(code(&triads(&["two-squares", "abc"])), 2);
}

fn eval(r: &str) -> f64 {
    match r.split_once('/') {
        Some((n, d)) => n.parse::<f64>().unwrap() / d.parse::<f64>().unwrap(),
        None => r.parse().unwrap(),
    }
}

#[test]
fn fermat_symbolic_and_numeric() {
    let o = triads(&["fermat"]);
    assert_eq!(code(&o), 0);
    let lines = json_lines(&o);
    assert_eq!(lines[0]["u"], "2*s^3/(s^2 - t^2)");
    assert_eq!(lines[1]["u"], "(s^4 - t^4)/(2*s^3)");
    let o = triads(&["fermat", "1", "2", "--side", "constant"]);
    assert_eq!(json_lines(&o)[0]["u"], "-2/3");
}

#[test]
fn compose_points() {
    let o = triads(&["compose", "1", "2", "-2/3", "-19/9", "-15/2", "-95/4"]);
    assert_eq!(code(&o), 0);
    assert_eq!(code(&triads(&["compose", "1", "2", "0", "1", "1", "1"])), 1);
    assert_eq!(code(&triads(&["compose", "1", "2"])), 2);
}

#[test]
fn text_format_verify() {
    let o = triads(&["--format", "text", "verify", "45", "64", "180"]);
    let text = String::from_utf8(o.stdout).unwrap();
    assert!(text.starts_with("(45, 64, 180)"));
}
