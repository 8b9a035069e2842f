//! JSON outputs validate against the shipped schemas and are stable across
//! runs at a fixed seed.

use clifford_morita::cli::run_str;
use jsonschema::JSONSchema;
use serde_json::Value;

fn compiled(schema_text: &str) -> JSONSchema {
    let schema: Value = serde_json::from_str(schema_text).unwrap();
    JSONSchema::compile(&schema).unwrap()
}

fn assert_valid(schema: &JSONSchema, doc: &Value) {
    if let Err(errors) = schema.validate(doc) {
        let msgs: Vec<String> = errors.map(|e| e.to_string()).collect();
        panic!("schema violations: {msgs:?}\ndocument: {doc}");
    }
}

#[test]
fn table_json_validates() {
    let schema = compiled(include_str!("../schemas/table.schema.json"));
    for kind in ["real-basic", "real-k", "complex-basic", "complex-k"] {
        let (out, code) = run_str(&["table", kind, "--format", "json"]).unwrap();
        assert_eq!(code, 0);
        let doc: Value = serde_json::from_str(&out).unwrap();
        assert_valid(&schema, &doc);
    }
}

#[test]
fn verify_json_validates() {
    let schema = compiled(include_str!("../schemas/verify.schema.json"));
    let (out, code) = run_str(&[
        "verify", "--check", "dc", "--format", "json", "--trials", "50",
    ])
    .unwrap();
    assert_eq!(code, 0);
    let doc: Value = serde_json::from_str(&out).unwrap();
    assert_valid(&schema, &doc);
}

#[test]
fn calc_json_validates() {
    let schema = compiled(include_str!("../schemas/calc.schema.json"));
    for args in [
        vec!["calc", "-p", "2", "--format", "json", "(e1*e2+1)*(e1*e2-1)"],
        vec![
            "calc", "--field", "complex", "-p", "1", "--format", "json", "i*e1 + 1/2",
        ],
    ] {
        let (out, code) = run_str(&args).unwrap();
        assert_eq!(code, 0);
        let doc: Value = serde_json::from_str(&out).unwrap();
        assert_valid(&schema, &doc);
    }
}

#[test]
fn classify_json_validates() {
    let schema = compiled(include_str!("../schemas/classify.schema.json"));
    for args in [
        vec!["classify", "-p", "3", "-q", "5", "-r", "2", "--format", "json"],
        vec![
            "classify", "-p", "2", "-q", "1", "--oracle", "--trials", "100", "--format", "json",
        ],
        vec!["classify", "--field", "complex", "-p", "3", "--format", "json"],
    ] {
        let (out, code) = run_str(&args).unwrap();
        assert_eq!(code, 0, "{args:?}");
        let doc: Value = serde_json::from_str(&out).unwrap();
        assert_valid(&schema, &doc);
    }
}

#[test]
fn golden_outputs_stable_at_fixed_seed() {
    for args in [
        vec!["table", "real-basic", "--format", "json"],
        vec!["classify", "-p", "4", "--oracle", "--seed", "1", "--format", "json"],
        vec!["calc", "-p", "2", "--format", "json", "e1*e2*e1*e2"],
    ] {
        let (a, _) = run_str(&args).unwrap();
        let (b, _) = run_str(&args).unwrap();
        assert_eq!(a, b, "{args:?}");
    }
    // Verify reports are stable up to timing.
    let strip = |s: &str| -> Value {
        let mut v: Value = serde_json::from_str(s).unwrap();
        for r in v.as_array_mut().unwrap() {
            r["millis"] = Value::from(0);
        }
        v
    };
    let args = ["verify", "--check", "hh", "--seed", "1", "--format", "json"];
    let (a, _) = run_str(&args).unwrap();
    let (b, _) = run_str(&args).unwrap();
    assert_eq!(strip(&a), strip(&b));
}
