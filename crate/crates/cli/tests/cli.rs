use std::process::{Command, Output};

use pell_core::Report;

fn pell(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pell")).args(args).output().expect("pell binary runs")
}

fn text(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn solve_prints_fundamental_and_small_rhs() {
    let out = pell(&["solve", "61"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(text(&out).contains("fundamental: x=1766319049, y=226153980"));
    assert!(text(&out).contains("N=-1: x=29718, y=3805"));
    let out = pell(&["solve", "941", "--rhs", "-4"]);
    assert!(text(&out).contains("N=-4: x=1135, y=37"));
}

#[test]
fn domain_errors_exit_2() {
    let out = pell(&["solve", "16"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("perfect square"));
    assert_eq!(pell(&["solve", "abc"]).status.code(), Some(2));
    assert_eq!(pell(&["negpell", "12"]).status.code(), Some(2));
    assert_eq!(pell(&["descent", "13", "--method", "nope"]).status.code(), Some(2));
    assert_eq!(pell(&["descent", "13", "--method", "bapoungue", "--k", "5"]).status.code(), Some(2));
    assert_eq!(pell(&["table", "--family", "euler1", "--p", "3"]).status.code(), Some(2));
    assert_eq!(pell(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn descent_examples() {
    let out = pell(&["descent", "13", "--method", "euler_neg1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(text(&out).contains("certificate: f=2, g=3, b=3, c=4, p=5, q=18"));
    let out = pell(&["descent", "61", "--method", "hart", "--bound", "100"]);
    assert!(text(&out).contains("y=3805"));
    let out = pell(&["descent", "15", "--method", "sylvester"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(text(&out).contains("NOT_APPLICABLE"));
}

#[test]
fn json_reports_round_trip() {
    for args in [
        ["descent", "109", "--method", "euler_neg4"],
        ["descent", "941", "--method", "gerardin_c"],
        ["descent", "7", "--method", "arteha_7mod8"],
        ["descent", "3", "--method", "hart"],
    ] {
        let mut args = args.to_vec();
        args.push("--json");
        let out = pell(&args);
        let raw = text(&out);
        let report: Report = serde_json::from_str(&raw).unwrap();
        assert_eq!(report.to_json(), raw.trim_end(), "{args:?}");
        let generic: serde_json::Value = serde_json::from_str(&raw).unwrap();
        assert_eq!(serde_json::from_value::<Report>(generic).unwrap(), report);
    }
}

#[test]
fn table_extension_for_13() {
    let out = pell(&["table", "--family", "euler1", "--p", "13", "--csv"]);
    assert_eq!(out.status.code(), Some(0));
    let rows: Vec<String> = text(&out).lines().skip(1).map(String::from).collect();
    assert_eq!(rows.len(), 6);
    // a = 169k² − 140k + 29 at k = 1 is 58
    assert!(rows.iter().any(|r| r.split(',').nth(2) == Some("58")), "{rows:?}");
}

#[test]
fn negpell_examples() {
    let out = text(&pell(&["negpell", "2306"]));
    assert!(out.contains("necessary_ok=true") && out.contains("actually_solvable=false"));
    let out = text(&pell(&["negpell", "13"]));
    assert!(out.contains("necessary_ok=true") && out.contains("actually_solvable=true"));
    let out = text(&pell(&["negpell", "34"]));
    assert!(out.contains("necessary_ok=false") && out.contains("actually_solvable=false"));
}

#[test]
fn families_exit_zero_and_report_family5() {
    let out = pell(&["families", "--kmax", "10", "--umax", "10"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(text(&out).contains("family5 k=1 u=1 d=13 [3; 1, 1, 1, 1, 6] mismatch"));
}

#[test]
fn verify_small_and_injected_fault() {
    let out = pell(&["verify", "--dmax", "100", "--samples", "10"]);
    assert_eq!(out.status.code(), Some(0), "{}", text(&out));
    let out = pell(&["verify", "--dmax", "10", "--samples", "0", "--inject-wrong-lift"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(text(&out).contains("FAIL d="));
    let out = pell(&["verify", "--dmax", "30", "--samples", "0", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["failures"], serde_json::json!([]));
}
