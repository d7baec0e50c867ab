use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_multiseg"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

fn json(args: &[&str]) -> Value {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    serde_json::from_str(&stdout(&all)).unwrap()
}

fn same_multisegment(a: &str, b: &str) -> bool {
    multiseg::parse(a).unwrap() == multiseg::parse(b).unwrap()
}

fn batch(input: &str) -> Vec<Value> {
    let mut child = bin()
        .arg("batch")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    String::from_utf8(out.stdout)
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn involution_of_a_segment() {
    let out = stdout(&["involution", "[0,1]"]);
    assert!(same_multisegment(&out, "[0,0]+[1,1]"));
    assert_eq!(out, "[1,1]+[0,0]");
}

#[test]
fn juxtaposed_points_are_reducible() {
    assert_eq!(stdout(&["irreducible", "--seg", "[0,0]", "--with", "[1,1]"]), "false");
    assert_eq!(stdout(&["irreducible", "[0,0]", "[5,5]"]), "true");
}

#[test]
fn sweep_reports_count() {
    let out = stdout(&["sweep", "--suite", "seg-criteria", "--max-coord", "4", "--max-segs", "3"]);
    assert!(out.starts_with("OK, ") && out.ends_with(" instances, 0 mismatches"), "{out}");
    let v = json(&["sweep", "--suite", "seg-criteria", "--max-coord", "2", "--max-segs", "2"]);
    assert_eq!(v["result"]["mismatches"], 0);
    assert_eq!(v["result"]["instances"], 6 * 28);
}

#[test]
fn exit_codes() {
    let parse = run(&["involution", "[0,1"]);
    assert_eq!(parse.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&parse.stderr).contains("[0,1"));

    let unsupported = run(&["irreducible", "[0,0]+[0,0]+[1,1]", "[0,0]+[1,1]+[1,1]"]);
    assert_eq!(unsupported.status.code(), Some(3));

    let cap = bin()
        .args(["sweep", "--suite", "dominance", "--max-coord", "1", "--max-segs", "2"])
        .env("MULTISEG_ORACLE_CAP", "1")
        .output()
        .unwrap();
    // the report is still printed
    assert_eq!(cap.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&cap.stdout).contains("skipped over cap"));

    assert_eq!(run(&["socle", "--with", "[0,0]"]).status.code(), Some(2));
    assert_eq!(run(&["sweep", "--suite", "nope"]).status.code(), Some(2));
}

#[test]
fn socle_and_cosocle() {
    assert_eq!(stdout(&["socle", "--seg", "[0,1]", "--with", "[1,1]"]), "[1,1]+[0,1]");
    assert_eq!(stdout(&["socle", "--ladder", "[0,0]", "--with", "[1,1]"]), "[0,1]");
    assert_eq!(stdout(&["cosocle", "--ladder", "[1,1]", "--with", "[0,0]"]), "[0,1]");
    assert_eq!(stdout(&["socle", "--rho", "0", "--power", "3", "--with", "[1,2]"]), "[0,2]+[0,0]+[0,0]");
    let not_ladder = run(&["socle", "--ladder", "[0,2]+[1,1]", "--with", "0"]);
    assert_eq!(not_ladder.status.code(), Some(1));
}

#[test]
fn ladder_trace_is_outermost_first() {
    let v = json(&["--explain", "socle", "--ladder", "[1,2]+[0,1]", "--with", "[2,2]"]);
    let w = v["witness"].as_array().unwrap();
    assert_eq!(w.len(), 2);
    assert_eq!(w[0]["delta"], "[1,2]");
    assert_eq!(w[0]["result"], v["result"]);
}

#[test]
fn lc_and_rc() {
    assert_eq!(stdout(&["lc", "--seg", "[0,0]", "--with", "[1,1]"]), "false");
    assert_eq!(stdout(&["rc", "--seg", "[0,0]", "--with", "[1,1]"]), "true");
    assert_eq!(stdout(&["lc", "--m", "[0,0]+[0,0]+[1,1]", "--with", "[0,0]+[1,1]+[1,1]"]), "true");
    let v = json(&["--explain", "lc", "--seg", "[0,0]", "--with", "[1,1]+[1,2]+[0,0]"]);
    assert_eq!(v["result"], false);
    assert_eq!(v["witness"]["unmatched"], serde_json::json!(["[1,2]"]));
}

#[test]
fn divide_and_extract() {
    assert_eq!(stdout(&["divide", "[0,1]+[1,1]", "--seg", "[0,1]"]), "[1,1]");
    assert_eq!(stdout(&["divide", "[0,0]", "--seg", "[0,1]"]), "none");
    assert_eq!(stdout(&["extract", "[0,1]+[1,2]", "--rho", "1"]), "power: 1\nrest: [2,2]+[0,1]");
    let v = json(&["extract", "[3,3]", "--rho", "[3,3]"]);
    assert_eq!(v["result"]["power"], 1);
    assert_eq!(v["result"]["rest"], "0");
}

#[test]
fn classify_flags() {
    let v = json(&["classify", "[3,4]+[1,3]+[2,2]+[0,1]"]);
    assert_eq!(v["result"]["ladder"], false);
    let v = json(&["classify", "[1,2]+[0,1]+[-1,0]"]);
    assert_eq!(v["result"]["speh"], true);
    assert_eq!(v["result"]["saturated"], true);
    assert_eq!(v["result"]["totally_unlinked"], false);
}

#[test]
fn speh_and_tadic() {
    assert_eq!(stdout(&["speh-build", "--n", "2", "--d", "2"]), "[0,1]+[-1,0]");
    assert_eq!(stdout(&["speh-build", "--n", "3", "--d", "1", "--center", "1"]), "[1,1]+[0,0]+[-1,-1]");
    let v = json(&["tadic-product", "2,2", "2,2"]);
    assert_eq!(v["result"]["irreducible"], true);
    let v = json(&["tadic-product", "1,1@0", "1,1@1"]);
    assert_eq!(v["result"]["irreducible"], false);
    assert_eq!(run(&["tadic-product", "1,1~1/2"]).status.code(), Some(1));
}

#[test]
fn batch_preserves_order_and_isolates_errors() {
    let out = batch(concat!(
        "{\"op\":\"involution\",\"m\":\"[0,1]+[1,2]\"}\n",
        "{\"op\":\"classify\",\"m\":\"[3,4]+[1,3]+[2,2]+[0,1]\"}\n",
        "this is not json\n",
        "\n",
        "{\"op\":\"irreducible\",\"seg\":\"[0,0]\",\"with\":\"[1,1]\",\"explain\":true}\n",
        "{\"op\":\"involution\",\"m\":\"[9,\"}\n",
    ));
    assert_eq!(out.len(), 5);
    assert!(same_multisegment(out[0]["result"].as_str().unwrap(), "[0,1]+[1,2]"));
    assert_eq!(out[1]["result"]["ladder"], false);
    assert_eq!(out[2]["error"]["code"], 2);
    assert_eq!(out[3]["result"], false);
    assert_eq!(out[3]["witness"][0]["method"], "segment");
    assert_eq!(out[4]["error"]["code"], 2);
    assert_eq!(out[4]["op"], "involution");
}

#[test]
fn batch_agrees_with_single_shot() {
    let single = json(&["socle", "--ladder", "[1,2]+[0,1]", "--with", "[2,2]"]);
    let out = batch("{\"op\":\"socle\",\"ladder\":\"[1,2]+[0,1]\",\"with\":\"[2,2]\"}\n");
    assert_eq!(out[0], single);
    let text = stdout(&["socle", "--ladder", "[1,2]+[0,1]", "--with", "[2,2]"]);
    assert_eq!(single["result"], text.as_str());
}
