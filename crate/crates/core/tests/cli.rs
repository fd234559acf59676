use std::process::Command;

use intervalia::io::{self, ErrorDoc, OrderAnalysisDoc, OrderDoc, RepresentationDoc, VerdictDoc, AnswerDoc};
use intervalia::order::{order_from_ascent, verify_order_representation};
use intervalia::perm::verify_perm_representation;
use intervalia::{AscentSequence, Permutation};

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_intervalia")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn analyze_eleven() {
    let (code, out) = run(&["analyze", "--ascent", "0,1,2,0,3,2,3,0,2,4,2"]);
    assert_eq!(code, 0);
    let d: OrderAnalysisDoc = io::from_json(&out).unwrap();
    assert_eq!((d.depth, d.magnitude, d.four_plus_one_free), (2, 7, true));
    assert!(!d.springs.is_empty());
    assert_eq!(d.pp_arcs, vec![[2, 4], [2, 8], [3, 9], [3, 11], [6, 11]]);
    assert!(out.trim_start().starts_with("{\n  \"schema\": \"intervalia/1\""));
}

#[test]
fn depth_three_perm_is_domain_error() {
    let (code, out) = run(&["twocount-perm", "[3,2,1]"]);
    assert_eq!(code, 1);
    let e: ErrorDoc = io::from_json(&out).unwrap();
    assert_eq!(e.error, "DepthExceeded");
}

#[test]
fn ten_element_perm_not_three_count() {
    let (code, out) = run(&["kcount", "--perm", "[4,2,5,10,3,1,7,6,9,8]", "--k", "3"]);
    assert_eq!(code, 0);
    let v: VerdictDoc = io::from_json(&out).unwrap();
    assert_eq!(v.answer, AnswerDoc::No);
    assert_eq!(v.to_verdict().unwrap().k, 3);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["kcount", "--k", "2"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["analyze", "--ascent", "0,1", "--format", "yaml"]).0, 2);
}

#[test]
fn representations_round_trip_and_verify() {
    let (code, out) = run(&["twocount-perm", "[2,4,1,3]"]);
    assert_eq!(code, 0);
    let f = io::from_json::<RepresentationDoc>(&out).unwrap().to_family().unwrap();
    let pi = Permutation::parse("[2,4,1,3]").unwrap();
    assert!(verify_perm_representation(&pi, &f).unwrap().is_ok());

    let s = "0,1,0,1,2,1,0,2,0,2,0,3";
    let (code, out) = run(&["twocount-order", "--ascent", s]);
    assert_eq!(code, 0);
    let f = io::from_json::<RepresentationDoc>(&out).unwrap().to_family().unwrap();
    let o = order_from_ascent(&AscentSequence::parse(s).unwrap());
    assert!(verify_order_representation(&o, &f).unwrap().is_ok());
    assert!(f.distinct_lengths().len() <= 2);
}

#[test]
fn order_file_input_and_out_flag() {
    let dir = tempfile::tempdir().unwrap();
    let (_, parsed) = run(&["parse", "--ascent", "0,1,0,2,1"]);
    let order_path = dir.path().join("o.json");
    std::fs::write(&order_path, &parsed).unwrap();
    let out_path = dir.path().join("again.json");
    let (code, stdout) = run(&["parse", "--order", order_path.to_str().unwrap(), "--out", out_path.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(stdout.is_empty());
    let again = std::fs::read_to_string(&out_path).unwrap();
    assert_eq!(again, parsed);
    let d: OrderDoc = io::from_json(&again).unwrap();
    assert_eq!(d.n, 5);
}

#[test]
fn render_is_deterministic_svg() {
    let args = ["render", "--ascent", "0,1,2,0,3,2,3,0,2,4,2", "--target", "ppgraph", "--format", "svg"];
    let (code, a) = run(&args);
    assert_eq!(code, 0);
    assert_eq!(a, run(&args).1);
    assert!(a.starts_with("<svg"));
    assert_eq!(a.matches("marker-end").count(), 5);
    let (code, out) = run(&["render", "--ascent", "0,1", "--target", "tikz"]);
    assert_eq!(code, 1);
    assert_eq!(io::from_json::<ErrorDoc>(&out).unwrap().error, "UnsupportedTarget");
}

#[test]
fn search_writes_report() {
    let dir = tempfile::tempdir().unwrap();
    let (code, _) = run(&["search", "orders", "--max-n", "5", "--jobs", "2", "--results", dir.path().to_str().unwrap()]);
    assert_eq!(code, 0);
    let r = intervalia::explorer::read_report(&dir.path().join("orders-n5.json")).unwrap();
    assert!(r.witnesses.is_empty());
    assert_eq!(r.counts.len(), 5);
}
