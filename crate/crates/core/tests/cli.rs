//! End-to-end tests of the `hypersym` binary.

use std::io::Write as _;
use std::path::PathBuf;
use std::process::{Command, Output};

use hypersym::classify::ClassifyError;
use hypersym::cli::CliError;
use hypersym::diagact::DiagonalAutomorphism;
use hypersym::polyforms::Support;
use jsonschema::JSONSchema;
use num_bigint::BigInt;
use serde_json::Value;

fn bin() -> Command {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_hypersym"));
    cmd.env_remove("HYPERSYM_BUDGET");
    cmd
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?} failed: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).expect("utf-8")
}

fn schema() -> JSONSchema {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../docs/output.schema.json");
    let text = std::fs::read_to_string(&path).expect("schema file is committed");
    let value: Value = serde_json::from_str(&text).expect("schema is JSON");
    JSONSchema::compile(&value).expect("schema compiles")
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.push("--json");
    let text = stdout(&full);
    let value: Value = serde_json::from_str(&text).expect("output is JSON");
    let compiled = schema();
    if let Err(errors) = compiled.validate(&value) {
        let msgs: Vec<String> = errors.map(|e| format!("{e} at {}", e.instance_path)).collect();
        panic!("{args:?} output violates the schema:\n{}", msgs.join("\n"));
    }
    value
}

fn support_file(contents: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().expect("temp file");
    f.write_all(contents.as_bytes()).expect("write");
    f
}

#[test]
fn orders_text_lists_maximal_orders() {
    let out = stdout(&["orders", "--d", "3", "--N", "6"]);
    let first = out.lines().next().unwrap();
    assert!(first.contains("21 30 32 33 36 48"), "{first}");
    let out = stdout(&["orders", "--d", "3", "--N", "5"]);
    assert!(out.lines().next().unwrap().contains("11 15 16 18 24"), "{out}");
}

#[test]
fn orders_expand_lists_divisors() {
    let v = json(&["orders", "--d", "3", "--N", "3", "--expand"]);
    let divisors: Vec<&str> = v["result"]["expanded"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    assert!(divisors.contains(&"1"));
    for m in v["result"]["maximal"].as_array().unwrap() {
        assert!(divisors.contains(&m.as_str().unwrap()));
    }
}

#[test]
fn every_command_validates_against_schema() {
    json(&["orders", "--d", "3", "--N", "4"]);
    json(&["orders", "--d", "4", "--N", "3", "--expand"]);
    json(&["group", "--d", "3", "--type", "T2+K4"]);
    json(&["group", "--d", "3", "--type", "K1+K1+K1"]);
    json(&["smooth", "--d", "3", "--targets", "2,3,1"]);
    json(&["smooth", "--d", "3", "--targets", "3,3,1", "--witness"]);
    json(&["witness", "--d", "3", "--N", "6", "--order", "48"]);
    json(&["witness", "--d", "3", "--N", "6", "--order", "50"]);
    json(&["cubic4"]);
}

#[test]
fn group_of_table_types() {
    let v = json(&["group", "--d", "3", "--type", "K6"]);
    assert_eq!(v["result"]["invariant_factors"], serde_json::json!(["21"]));
    let v = json(&["group", "--d", "3", "--type", "T6"]);
    assert_eq!(v["result"]["order"], "32");
    let v = json(&["group", "--d", "3", "--type", "K1+K1+K1"]);
    assert_eq!(v["result"]["invariant_factors"], serde_json::json!(["3", "3"]));
}

#[test]
fn group_from_support_file() {
    let klein = support_file("[[2,1,0],[0,2,1],[1,0,2]]");
    let v = json(&["group", "--d", "3", "--support", klein.path().to_str().unwrap()]);
    assert_eq!(v["result"]["kind"], "finite");
    assert_eq!(v["result"]["order"], "3");

    let degenerate = support_file(r#"{"d": 3, "n_vars": 3, "monomials": [[2,1,0],[1,2,0]]}"#);
    let path = degenerate.path().to_str().unwrap();
    let v = json(&["group", "--d", "3", "--support", path]);
    assert_eq!(v["result"]["kind"], "infinite");
    let text = stdout(&["group", "--d", "3", "--support", path]);
    assert!(text.starts_with("INFINITE"), "{text}");
}

#[test]
fn smooth_verdicts() {
    assert_eq!(stdout(&["smooth", "--d", "3", "--targets", "2,3,1"]).trim(), "SMOOTH type K3");
    let out = stdout(&["smooth", "--d", "3", "--targets", "3,3,1", "--witness"]);
    assert!(out.starts_with("SINGULAR at [1 : e^{iπ/2} : 0]"), "{out}");
    let out = stdout(&["smooth", "--d", "3", "--targets", "3,3,1"]);
    assert!(out.starts_with("SINGULAR"), "{out}");
}

#[test]
fn witness_output_round_trips() {
    for order in ["21", "30", "32", "33", "36", "48", "16", "7"] {
        let v = json(&["witness", "--d", "3", "--N", "6", "--order", order]);
        let r = &v["result"];
        assert_eq!(r["found"], true, "order {order}");
        let support = Support::parse_polynomial(3, 6, r["polynomial"].as_str().unwrap()).unwrap();
        let g: DiagonalAutomorphism = r["automorphism"]["text"].as_str().unwrap().parse().unwrap();
        assert!(g.acts_with_character(&support).is_ok(), "order {order}");
        assert_eq!(g.pgl_order(), order.parse::<BigInt>().unwrap());
    }
    let text = stdout(&["witness", "--d", "3", "--N", "6", "--order", "48"]);
    let line = |key: &str| {
        text.lines()
            .find_map(|l| l.strip_prefix(key))
            .unwrap_or_else(|| panic!("no {key} line in {text}"))
            .trim()
            .to_string()
    };
    assert_eq!(line("automorphism"), "1/48(3,-6,12,-24,0,16)");
    let support = Support::parse_polynomial(3, 6, &line("polynomial")).unwrap();
    let g: DiagonalAutomorphism = line("automorphism").parse().unwrap();
    assert_eq!(g.acts_with_character(&support).unwrap(), BigInt::from(0));
}

#[test]
fn missing_witness_prints_none() {
    assert_eq!(stdout(&["witness", "--d", "3", "--N", "6", "--order", "50"]).trim(), "NONE");
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        vec!["orders", "--d", "3", "--N", "6", "--json"],
        vec!["cubic4", "--json"],
        vec!["witness", "--d", "4", "--N", "4", "--order", "13", "--json"],
    ] {
        let a = run(&args);
        let b = run(&args);
        assert!(a.status.success());
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        vec!["orders", "--d", "2", "--N", "3"],
        vec!["orders", "--d", "3"],
        vec!["frobnicate"],
        vec!["group", "--d", "3", "--type", "Q7"],
        vec!["smooth", "--d", "3", "--targets", "4,1,1"],
        vec!["witness", "--d", "3", "--N", "6", "--order", "0"],
    ] {
        let out = run(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn help_exits_0() {
    let out = run(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stdout).contains("orders"));
}

#[test]
fn budget_exits_3() {
    let out =
        bin().args(["orders", "--d", "7", "--N", "40", "--expand"]).env("HYPERSYM_BUDGET", "10").output().unwrap();
    assert_eq!(out.status.code(), Some(3), "{}", String::from_utf8_lossy(&out.stderr));
    let out = run(&["--budget", "10", "orders", "--d", "3", "--N", "12"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verification_failures_map_to_exit_4() {
    let e: CliError = ClassifyError::VerificationFailure("forced".into()).into();
    assert_eq!(e.exit_code(), 4);
}
