mod common;

use std::process::{Command, Output};

use common::fixture_path;
use knotcert::certify::{Outcome, Verdict};
use knotcert::diagram::parse_diagram;
use knotcert::poly::{JsonTerm, LaurentPoly, Var};

fn knotcert(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_knotcert")).args(args).output().expect("binary runs")
}

fn fx(name: &str) -> String {
    fixture_path(name).to_str().unwrap().to_owned()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn torus_jones_text() {
    let o = knotcert(&["torus", "--n", "3", "--jones"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "t^(1) + t^(3) - t^(4)\n");
}

#[test]
fn torus_emits_pd_matching_fixture() {
    let o = knotcert(&["torus", "--n", "5", "--emit-pd"]);
    assert_eq!(stdout(&o), common::fixture("torus_5.pd"));
    assert_eq!(knotcert(&["torus", "--n", "0"]).status.code(), Some(2));
}

#[test]
fn unknot_jones_is_one() {
    let o = knotcert(&["jones", &fx("unknot.pd")]);
    assert_eq!((o.status.code(), stdout(&o)), (Some(0), "1\n".into()));
}

#[test]
fn certify_torus_worked_example() {
    let o = knotcert(&["certify-torus", &fx("x0.marked.json"), "--m", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "Distinguished\nlhs: 1\nrhs: t^(3)\ndelta_w: 1\ntriviality_check: jones_only\n"
    );
}

#[test]
fn certify_exit_codes() {
    assert_eq!(knotcert(&["certify", &fx("x0.marked.json"), &fx("y1.marked.json")]).status.code(), Some(0));
    assert_eq!(knotcert(&["certify", &fx("x0.marked.json"), &fx("x0.marked.json")]).status.code(), Some(3));
    assert_eq!(knotcert(&["certify", &fx("y1.marked.json"), &fx("y1.marked.json")]).status.code(), Some(3));
    assert_eq!(knotcert(&["certify-torus", &fx("y1.marked.json"), "--m", "1"]).status.code(), Some(3));
}

#[test]
fn verdict_json_round_trips() {
    let o = knotcert(&["--json", "certify-torus", &fx("x0.marked.json"), "--m", "1"]);
    let text = stdout(&o);
    let v = Verdict::from_json_str(&text).unwrap();
    assert_eq!(v.outcome, Outcome::Distinguished);
    assert_eq!(v.rhs, LaurentPoly::monomial(Var::T, 1, 12));
    assert_eq!(v.to_json().to_string() + "\n", text);
}

#[test]
fn jones_json_round_trips() {
    let o = knotcert(&["jones", "--json", &fx("torus_2.pd")]);
    let terms: Vec<JsonTerm> = serde_json::from_str(&stdout(&o)).unwrap();
    let p = LaurentPoly::from_json_terms(Var::T, &terms).unwrap();
    assert_eq!(p.to_string(), "-t^(1/2) - t^(5/2)");
}

#[test]
fn moves_print_diagrams() {
    let o = knotcert(&["saddle", &fx("y1.marked.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(parse_diagram(&stdout(&o)).unwrap().component_count(), 2);
    let o = knotcert(&["--json", "crossing", &fx("y1.marked.json")]);
    let d = parse_diagram(&stdout(&o)).unwrap();
    assert_eq!((d.crossing_count(), d.writhe()), (3, 3));
}

#[test]
fn identity_reports_both_sides() {
    let o = knotcert(&["identity", &fx("y1.marked.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "holds\nlhs: t^(1) + t^(3) - t^(4)\nrhs: t^(1) + t^(3) - t^(4)\ndelta_w: 5\n");
}

#[test]
fn invariants_of_files() {
    assert_eq!(stdout(&knotcert(&["writhe", &fx("trefoil_negative.pd")])), "-3\n");
    assert_eq!(stdout(&knotcert(&["lk", &fx("torus_6.pd"), "--c1", "0", "--c2", "1"])), "3\n");
    assert_eq!(stdout(&knotcert(&["bracket", &fx("torus_1.pd")])), "-A^(3)\n");
    assert!(stdout(&knotcert(&["validate", &fx("trefoil.pd")])).starts_with("valid: 3 crossings, 1 components"));
}

#[test]
fn connected_sum_command() {
    let o = knotcert(&["consum", &fx("trefoil.pd"), "--arc", "1", &fx("trefoil.pd"), "--arc", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let d = parse_diagram(&stdout(&o)).unwrap();
    assert_eq!((d.crossing_count(), d.component_count()), (6, 1));
    let bad = knotcert(&["consum", &fx("trefoil.pd"), "--arc", "99", &fx("trefoil.pd"), "--arc", "1"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn input_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.pd");
    std::fs::write(&bad, "X[1,2,3]").unwrap();
    let o = knotcert(&["jones", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("syntax error"));
    assert_eq!(knotcert(&["jones", "/nonexistent/file.pd"]).status.code(), Some(2));
    assert_eq!(knotcert(&["saddle", &fx("parallel.marked.json")]).status.code(), Some(2));
    assert_eq!(knotcert(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(knotcert(&["lk", &fx("trefoil.pd"), "--c1", "0", "--c2", "0"]).status.code(), Some(2));
}

#[test]
fn cap_exceeded_exits_4() {
    let o = knotcert(&["--cap", "5", "jones", &fx("torus_11.pd")]);
    assert_eq!(o.status.code(), Some(4));
    assert!(o.stdout.is_empty());
}

#[test]
fn threads_do_not_change_output() {
    let seq = knotcert(&["jones", &fx("torus_9.pd")]);
    let par = knotcert(&["--threads", "4", "jones", &fx("torus_9.pd")]);
    assert_eq!(seq.stdout, par.stdout);
}

#[test]
fn output_is_deterministic() {
    for args in [vec!["crossing".to_owned(), fx("x0.marked.json")], vec!["--json".into(), "saddle".into(), fx("y1.marked.json")]] {
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        assert_eq!(knotcert(&args).stdout, knotcert(&args).stdout);
    }
}
