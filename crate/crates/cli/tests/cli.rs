use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trimetric")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn report_json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    serde_json::from_str(&stdout(&out)).unwrap()
}

fn exact<'a>(v: &'a Value, path: &[&str]) -> &'a str {
    path.iter().fold(v, |v, k| &v[*k])["exact"].as_str().unwrap()
}

fn sample<'a>(v: &'a Value, lambda: &str) -> &'a Value {
    v["eld"]["samples"].as_array().unwrap().iter().find(|s| s["lambda"]["exact"] == lambda).unwrap()
}

#[test]
fn report_three_four_five() {
    let v = report_json(&["report", "4", "3", "5"]);
    assert_eq!(exact(&v, &["eld", "d_i"]), "1/25");
    assert_eq!(sample(&v, "1")["eld_i"]["exact"], "5/4");
    assert_eq!(exact(&v, &["eld", "kooi_star"]), "29/16");
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    for cert in v["certificates"].as_array().unwrap() {
        for w in cert["witnesses"].as_array().unwrap() {
            assert_eq!(w["residual"]["exact"], "0");
        }
    }
}

#[test]
fn report_equilateral() {
    let v = report_json(&["report", "1", "1", "1"]);
    for cert in v["certificates"].as_array().unwrap() {
        assert_eq!(cert["slack"]["exact"], "0", "{}", cert["name"]);
    }
    let centers = v["centers"].as_object().unwrap();
    let first = &centers["incenter"]["normalized"];
    assert!(centers.values().all(|c| &c["normalized"] == first));
}

#[test]
fn report_text_format() {
    let out = run(&["report", "4", "3", "5", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("d_I = 1/25"));
    assert!(text.contains("right angle at C"));
    assert!(text.ends_with("all residuals zero\n"));
}

#[test]
fn report_options() {
    let v = report_json(&["report", "7/2", "5", "13/3", "--weights", "2,-1,3/2", "--other", "2,3,4", "--klamkin-point", "I", "--lambda", "-1/2"]);
    assert_eq!(v["weights"][1]["exact"], "-1");
    assert!(sample(&v, "-1/2")["encodes"].is_null());
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
}

#[test]
fn invalid_input_exits_one() {
    let out = run(&["report", "1", "1", "3"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(stderr(&out).contains("triangle inequality violated: 1 + 1 ≤ 3"));
    for args in [
        vec!["report", "4", "3", "x"],
        vec!["report", "0", "3", "3"],
        vec!["report", "4", "3", "5", "--weights", "1,-1,0"],
        vec!["eld", "4", "3", "5", "--lambda", "1/0"],
        vec!["report", "4", "3"],
        vec!["verify", "--samples", "0"],
        vec!["frobnicate"],
    ] {
        assert_eq!(run(&args).status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn eld_table() {
    let out = run(&["eld", "4", "3", "5", "--lambda", "0,2/3,1,2"]);
    assert_eq!(out.status.code(), Some(0));
    let values: Vec<String> = stdout(&out).lines().skip(1).map(|l| l.split_whitespace().nth(1).unwrap().to_string()).collect();
    assert_eq!(values, ["2", "1/9", "5/4", "13"]);
    assert!(stdout(&out).contains("finsler_hadwiger"));

    let out = run(&["eld", "1", "1", "1", "--lambda", "5"]);
    assert_eq!(stdout(&out).lines().nth(1).unwrap().split_whitespace().nth(1), Some("0"));

    let decimal = stdout(&run(&["eld", "6", "5", "5", "--lambda", "0.5", "--format", "json"]));
    let fraction = stdout(&run(&["eld", "6", "5", "5", "--lambda", "1/2", "--format", "json"]));
    assert_eq!(decimal, fraction);
}

#[test]
fn verify_is_deterministic() {
    let a = run(&["verify", "--samples", "4", "--seed", "11"]);
    let b = run(&["verify", "--samples", "4", "--seed", "11"]);
    assert_eq!(a.status.code(), Some(0), "{}", stdout(&a));
    assert_eq!(a.stdout, b.stdout);
    assert!(stdout(&a).contains("all 4 × "));
}

#[test]
fn verify_logs_right_triangle_skip() {
    // seed 195 draws a right triangle first
    let out = run(&["verify", "--samples", "1", "--seed", "195"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("skipped centers.tangency on 1 samples (first #0): tangent triangle degenerate: right angle at A"));
    assert!(text.contains("skipped catalog.kooi.tangential_pair"));
}

#[test]
fn tolerance_flags() {
    let out = run(&["--rel-tol", "1e-9", "report", "4", "3", "5", "--abs-tol", "1e-12"]);
    assert_eq!(out.status.code(), Some(0));
}

/// Subset of JSON Schema used by the shipped report schema.
fn validate(schema: &Value, root: &Value, v: &Value, path: &str) {
    if let Some(r) = schema.get("$ref").and_then(Value::as_str) {
        let name = r.strip_prefix("#/$defs/").unwrap();
        return validate(&root["$defs"][name], root, v, path);
    }
    if let Some(options) = schema.get("oneOf").and_then(Value::as_array) {
        let matches = options.iter().filter(|o| std::panic::catch_unwind(|| validate(o, root, v, path)).is_ok()).count();
        assert_eq!(matches, 1, "{path}: oneOf");
        return;
    }
    if let Some(options) = schema.get("enum").and_then(Value::as_array) {
        assert!(options.contains(v), "{path}: {v} not in enum");
    }
    match schema.get("type").and_then(Value::as_str) {
        Some("object") => {
            let obj = v.as_object().unwrap_or_else(|| panic!("{path}: not an object"));
            for key in schema.get("required").and_then(Value::as_array).into_iter().flatten() {
                assert!(obj.contains_key(key.as_str().unwrap()), "{path}: missing {key}");
            }
            let props = schema.get("properties").and_then(Value::as_object);
            for (key, child) in obj {
                let here = format!("{path}.{key}");
                if let Some(s) = props.and_then(|p| p.get(key)) {
                    validate(s, root, child, &here);
                } else {
                    match schema.get("additionalProperties") {
                        Some(Value::Bool(false)) => panic!("{here}: unexpected property"),
                        Some(s @ Value::Object(_)) => validate(s, root, child, &here),
                        _ => {}
                    }
                }
                if let Some(names) = schema.get("propertyNames") {
                    validate(names, root, &Value::String(key.clone()), &here);
                }
            }
        }
        Some("array") => {
            let items = v.as_array().unwrap_or_else(|| panic!("{path}: not an array"));
            if let Some(n) = schema.get("minItems").and_then(Value::as_u64) {
                assert!(items.len() as u64 >= n, "{path}: too short");
            }
            if let Some(n) = schema.get("maxItems").and_then(Value::as_u64) {
                assert!(items.len() as u64 <= n, "{path}: too long");
            }
            if let Some(s) = schema.get("items") {
                for (k, item) in items.iter().enumerate() {
                    validate(s, root, item, &format!("{path}[{k}]"));
                }
            }
        }
        Some("string") => {
            let text = v.as_str().unwrap_or_else(|| panic!("{path}: not a string"));
            if schema.get("pattern").is_some() {
                // canonical p/q: parses, and prints back identically
                let q = trimetric::parse_rational(text).unwrap();
                assert_eq!(q.to_string(), text, "{path}: not in lowest terms");
            }
        }
        Some("number") => assert!(v.is_number(), "{path}: not a number"),
        Some("integer") => assert!(v.is_u64() || v.is_i64(), "{path}: not an integer"),
        Some("boolean") => assert!(v.is_boolean(), "{path}: not a boolean"),
        Some("null") => assert!(v.is_null(), "{path}: not null"),
        _ => {}
    }
}

#[test]
fn reports_match_schema() {
    let schema: Value = serde_json::from_str(include_str!("../../../docs/report.schema.json")).unwrap();
    for sides in [["4", "3", "5"], ["1", "1", "1"], ["2", "3", "4"], ["6", "5", "5"]] {
        let v = report_json(&["report", sides[0], sides[1], sides[2]]);
        validate(&schema, &schema, &v, "$");
    }
}
