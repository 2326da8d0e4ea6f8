mod common;

use std::fs;
use std::path::{Path, PathBuf};

use common::{code, corpus_path, parse_dot, reqtax, reqtax_on, stderr, stdout};
use reqtax_core::format::render;
use reqtax_core::testkit::{random_document, rng, GenOptions};
use serde_json::Value;

const SCHEMA: &str = include_str!("../../../schema/report.schema.json");

/// Enough of JSON Schema to check the report schema: type (with null
/// unions), required, properties, additionalProperties, enum, items,
/// minItems, minimum and local `$ref`.
fn validate(root: &Value, schema: &Value, value: &Value, at: &str, errors: &mut Vec<String>) {
    if let Some(r) = schema.get("$ref").and_then(Value::as_str) {
        let target = r
            .strip_prefix("#/")
            .expect("local ref")
            .split('/')
            .fold(root, |node, key| &node[key]);
        assert!(!target.is_null(), "unresolved {r}");
        return validate(root, target, value, at, errors);
    }
    if let Some(t) = schema.get("type") {
        let types: Vec<&str> = match t {
            Value::String(s) => vec![s.as_str()],
            Value::Array(a) => a.iter().filter_map(Value::as_str).collect(),
            _ => panic!("bad type keyword"),
        };
        let ok = types.iter().any(|t| match *t {
            "object" => value.is_object(),
            "array" => value.is_array(),
            "string" => value.is_string(),
            "integer" => value.is_u64() || value.is_i64(),
            "number" => value.is_number(),
            "boolean" => value.is_boolean(),
            "null" => value.is_null(),
            other => panic!("unsupported type {other}"),
        });
        if !ok {
            errors.push(format!("{at}: expected {types:?}, found {value}"));
            return;
        }
    }
    if let Some(allowed) = schema.get("enum").and_then(Value::as_array) {
        if !allowed.contains(value) {
            errors.push(format!("{at}: {value} not in enum"));
        }
    }
    if let (Some(min), Some(n)) = (schema.get("minimum").and_then(Value::as_f64), value.as_f64()) {
        if n < min {
            errors.push(format!("{at}: {n} < {min}"));
        }
    }
    if let Some(obj) = value.as_object() {
        let props = schema.get("properties").and_then(Value::as_object);
        for key in schema.get("required").and_then(Value::as_array).into_iter().flatten() {
            if !obj.contains_key(key.as_str().unwrap()) {
                errors.push(format!("{at}: missing {key}"));
            }
        }
        for (k, v) in obj {
            match props.and_then(|p| p.get(k)) {
                Some(sub) => validate(root, sub, v, &format!("{at}/{k}"), errors),
                None if schema.get("additionalProperties") == Some(&Value::Bool(false)) => {
                    errors.push(format!("{at}: unexpected property {k}"));
                }
                None => {}
            }
        }
    }
    if let Some(arr) = value.as_array() {
        if let Some(min) = schema.get("minItems").and_then(Value::as_u64) {
            if (arr.len() as u64) < min {
                errors.push(format!("{at}: fewer than {min} items"));
            }
        }
        if let Some(items) = schema.get("items") {
            for (i, v) in arr.iter().enumerate() {
                validate(root, items, v, &format!("{at}/{i}"), errors);
            }
        }
    }
}

fn schema_errors(report: &Value) -> Vec<String> {
    let schema: Value = serde_json::from_str(SCHEMA).unwrap();
    let mut errors = Vec::new();
    validate(&schema, &schema, report, "", &mut errors);
    errors
}

fn write(dir: &Path, name: &str, text: &str) -> PathBuf {
    let p = dir.join(name);
    fs::write(&p, text).unwrap();
    p
}

fn json_report(files: &[&Path], extra: &[&str]) -> (Value, i32) {
    let mut args = vec!["check", "--json"];
    args.extend_from_slice(extra);
    let o = reqtax_on(&args, files);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap_or_else(|e| panic!("{e}: {}", stdout(&o)));
    (v, code(&o))
}

#[test]
fn validator_rejects_bad_reports() {
    let (mut v, _) = json_report(&[corpus_path()], &[]);
    assert!(schema_errors(&v).is_empty());
    v["surprise"] = Value::Bool(true);
    v["summary"]["elements"] = Value::from(-1);
    v["exit_class"] = Value::from("fine");
    assert_eq!(schema_errors(&v).len(), 3);
}

#[test]
fn reports_match_schema() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.srs", "[a] widget :: x\n[a] goal :: y\n");
    let empty = write(dir.path(), "empty.srs", "");
    let missing = dir.path().join("missing.srs");
    for files in [
        vec![corpus_path()],
        vec![empty.as_path()],
        vec![corpus_path(), bad.as_path(), missing.as_path()],
    ] {
        let (v, _) = json_report(&files, &[]);
        let errors = schema_errors(&v);
        assert!(errors.is_empty(), "{files:?}: {errors:#?}");
    }
    let mut r = rng(0x5C4E);
    for i in 0..25 {
        let doc = random_document(&mut r, &GenOptions::default());
        let p = write(dir.path(), &format!("r{i}.srs"), &render(&doc));
        let (v, _) = json_report(&[&p], &[]);
        assert!(schema_errors(&v).is_empty(), "r{i}");
    }
}

#[test]
fn mixed_report_aggregates() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.srs", "[a] widget :: x\n");
    let missing = dir.path().join("missing.srs");
    let o = reqtax_on(&["check", "--json"], &[&missing, corpus_path(), &bad]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("cannot read"));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["exit_class"], "parse_failed");
    assert_eq!(v["files"].as_array().unwrap().len(), 3);
    let kinds: Vec<&str> = v["failures"]
        .as_array()
        .unwrap()
        .iter()
        .map(|f| f["kind"].as_str().unwrap())
        .collect();
    assert_eq!(kinds, ["unknown-category", "io"]);
    assert_eq!(v["summary"]["elements"], 69);
}

#[test]
fn exit_code_follows_worst_severity() {
    let dir = tempfile::tempdir().unwrap();
    let mut r = rng(0xE817);
    let mut seen = std::collections::BTreeSet::new();
    for i in 0..40 {
        let doc = random_document(
            &mut r,
            &GenOptions {
                max_elements: 15,
                ..GenOptions::default()
            },
        );
        let p = write(dir.path(), &format!("d{i}.srs"), &render(&doc));
        let (v, plain) = json_report(&[&p], &[]);
        let strict = code(&reqtax_on(&["check", "--strict"], &[&p]));
        let sev: Vec<&str> = v["diagnostics"]
            .as_array()
            .unwrap()
            .iter()
            .map(|d| d["severity"].as_str().unwrap())
            .collect();
        let class = v["exit_class"].as_str().unwrap();
        let expected = if sev.contains(&"error") {
            "errors"
        } else if sev.contains(&"warning") {
            "warnings_only"
        } else {
            "clean"
        };
        assert_eq!(class, expected);
        let (want_plain, want_strict) = match class {
            "errors" => (1, 1),
            "warnings_only" => (0, 1),
            _ => (0, 0),
        };
        assert_eq!((plain, strict), (want_plain, want_strict), "d{i}");
        seen.insert(class.to_string());
    }
    assert!(seen.len() >= 2, "{seen:?}");
}

#[test]
fn config_file_changes_outcome() {
    let dir = tempfile::tempdir().unwrap();
    let doc = write(
        dir.path(),
        "dup.srs",
        "[a] goal :: \"x\"\n[b] goal :: \"x\"\n@relations\na REPEATS b\n@end\n",
    );
    assert_eq!(code(&reqtax_on(&["check"], &[&doc])), 1);
    let cfg = write(dir.path(), "lint.cfg", "# relax duplicates\nseverity.R4 = warning\n");
    let cfg = cfg.to_str().unwrap();
    assert_eq!(code(&reqtax_on(&["check", "--config", cfg], &[&doc])), 0);
    assert_eq!(code(&reqtax_on(&["check", "--strict", "--config", cfg], &[&doc])), 1);
    let off = write(dir.path(), "off.cfg", "disable = R4\n");
    assert_eq!(
        code(&reqtax_on(
            &["check", "--strict", "--config", off.to_str().unwrap()],
            &[&doc]
        )),
        0
    );
    let broken = write(dir.path(), "broken.cfg", "severity.R4 = loud\n");
    assert_eq!(
        code(&reqtax_on(&["check", "--config", broken.to_str().unwrap()], &[&doc])),
        2
    );
}

#[test]
fn parse_failures_exit_two_with_location() {
    let dir = tempfile::tempdir().unwrap();
    let p = write(dir.path(), "u.srs", "[a] widget :: x\n");
    for cmd in [&["check"][..], &["graph"], &["stats"]] {
        let o = reqtax_on(cmd, &[&p]);
        assert_eq!(code(&o), 2, "{cmd:?}");
    }
    let o = reqtax_on(&["check"], &[&p]);
    assert!(stdout(&o).contains("u.srs:1:5: unknown-category"), "{}", stdout(&o));
    let o = reqtax(&["check", dir.path().join("nope.srs").to_str().unwrap()]);
    assert_eq!(code(&o), 2);
}

#[test]
fn dot_output_is_well_formed() {
    let dir = tempfile::tempdir().unwrap();
    let mut r = rng(0xD07);
    for i in 0..30 {
        let doc = random_document(&mut r, &GenOptions::default());
        let p = write(dir.path(), &format!("g{i}.srs"), &render(&doc));
        let dot = stdout(&reqtax_on(&["graph"], &[&p]));
        let g = parse_dot(&dot).unwrap_or_else(|e| panic!("g{i}: {e}\n{dot}"));
        assert_eq!(g.nodes.len(), doc.element_count());
        let ids: std::collections::BTreeSet<&str> = g.nodes.iter().map(|(n, _)| n.as_str()).collect();
        for e in &g.edges {
            assert!(ids.contains(e.from.as_str()) && ids.contains(e.to.as_str()));
            assert!(e.attr("label").is_some());
        }
        let declared = g.edges.iter().filter(|e| e.attr("style") != Some("dashed")).count();
        assert_eq!(declared, doc.relations.len());

        let only = parse_dot(&stdout(&reqtax_on(&["graph", "--declared-only"], &[&p]))).unwrap();
        assert_eq!(only.edges.len(), doc.relations.len());
        assert!(only.edges.iter().all(|e| e.attr("style").is_none()));

        let json: Value = serde_json::from_str(&stdout(&reqtax_on(&["graph", "--format", "json"], &[&p]))).unwrap();
        assert_eq!(json["edges"].as_array().unwrap().len(), g.edges.len());
    }
}

#[test]
fn graph_examples() {
    let dir = tempfile::tempdir().unwrap();
    let one = write(dir.path(), "one.srs", "[only] goal :: \"x\"\n");
    let g = parse_dot(&stdout(&reqtax_on(&["graph"], &[&one]))).unwrap();
    assert_eq!(g.nodes.len(), 1);
    assert!(g.edges.is_empty());

    let nested = write(dir.path(), "n.srs", "[p] meta :: \"P\"\n  [c] goal :: \"C\"\n");
    let g = parse_dot(&stdout(&reqtax_on(&["graph"], &[&nested]))).unwrap();
    assert_eq!(g.edges.len(), 1);
    let e = &g.edges[0];
    assert_eq!((e.from.as_str(), e.to.as_str()), ("c", "p"));
    assert_eq!(e.attr("label"), Some("BELONGS"));
    assert_eq!(e.attr("style"), Some("dashed"));
}

#[test]
fn stats_examples() {
    let dir = tempfile::tempdir().unwrap();
    let empty = write(dir.path(), "e.srs", "");
    let v: Value = serde_json::from_str(&stdout(&reqtax_on(&["stats", "--json"], &[&empty]))).unwrap();
    assert_eq!(v["elements"], 0);
    assert!(v["categories"].as_object().unwrap().values().all(|n| n == 0));
    assert!(v["relations"]
        .as_object()
        .unwrap()
        .values()
        .all(|n| n["declared"] == 0 && n["derived"] == 0));

    let goals = write(
        dir.path(),
        "g.srs",
        "[a] goal :: \"x\"\n[b] goal :: \"y\"\n[c] goal :: \"z\"\n",
    );
    let v: Value = serde_json::from_str(&stdout(&reqtax_on(&["stats", "--json"], &[&goals]))).unwrap();
    assert_eq!(v["categories"]["goal"], 3);
    assert_eq!(v["elements"], 3);
    let table = stdout(&reqtax_on(&["stats"], &[&goals]));
    assert!(
        table
            .lines()
            .any(|l| l.starts_with("Goal") && l.trim_end().ends_with('3')),
        "{table}"
    );

    let v: Value = serde_json::from_str(&stdout(&reqtax_on(&["stats", "--json"], &[&goals, corpus_path()]))).unwrap();
    assert_eq!(v["documents"], 2);
    assert_eq!(v["elements"], 72);
    assert_eq!(v["categories"]["goal"], 13);
}

#[test]
fn crosswalk_lookups() {
    let o = reqtax(&["crosswalk", "wb", "Feature"]);
    assert_eq!(code(&o), 0);
    assert_eq!(
        stdout(&o).trim_end(),
        "Behavior \u{2014} From viewpoint of actor (e.g. user)"
    );
    let o = reqtax(&["crosswalk", "avl", "Expectations"]);
    assert_eq!(stdout(&o).trim_end(), "Goal");
    let o = reqtax(&["crosswalk", "wb", "  functional   REQUIREMENT "]);
    assert_eq!(stdout(&o).trim_end(), "Behavior");
    let o = reqtax(&["crosswalk", "avl", "Nonexistent"]);
    assert_eq!(code(&o), 1);
    assert!(stderr(&o).contains("Goals"));
    assert_eq!(code(&reqtax(&["crosswalk", "xyz", "Goals"])), 2);
}

#[test]
fn suggest_outputs() {
    let o = reqtax(&["suggest", "Down time after a failure shall not exceed x hours"]);
    assert_eq!(stdout(&o), "1. Constraint (bound)\n");
    let o = reqtax(&["suggest", "--json", "Sales Agent"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["category"], "component");
    assert_eq!(v[0]["subcategory"], "actor");
    assert_eq!(
        stdout(&reqtax(&["suggest", "Extension points: none"])),
        "no suggestion\n"
    );
}

#[test]
fn text_check_lists_each_diagnostic() {
    let o = reqtax_on(&["check"], &[corpus_path()]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let last = out.lines().last().unwrap();
    assert!(last.starts_with("1 file(s), 69 element(s): 0 error(s)"), "{last}");
    let (v, _) = json_report(&[corpus_path()], &[]);
    assert_eq!(out.lines().count(), v["diagnostics"].as_array().unwrap().len() + 1);
}
