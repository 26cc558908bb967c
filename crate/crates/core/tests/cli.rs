mod common;

use std::fs;
use std::process::{Command, Output, Stdio};

use api_ruler::engine::{AnalysisConfig, Analyzer};
use api_ruler::report::render_json;
use common::*;

fn api_ruler(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_api-ruler"))
        .args(args)
        .env_remove("API_RULER_MODEL")
        .stdin(Stdio::null())
        .output()
        .unwrap()
}

fn text(bytes: &[u8]) -> String {
    String::from_utf8_lossy(bytes).into_owned()
}

#[test]
fn console_report_is_printed_for_violations() {
    let file = rule_fixtures().join("NoUnderscores.yaml");
    let out = api_ruler(&[file.to_str().unwrap(), "--rules", "NoUnderscores"]);
    assert_eq!(out.status.code(), Some(1));
    let stdout = text(&out.stdout);
    assert!(
        stdout.contains("[NoUnderscores] segment 'user_accounts' contains an underscore"),
        "{stdout}"
    );
    assert!(stdout.ends_with("5 violations across 1 rule\n"), "{stdout}");
}

#[test]
fn interactive_needs_a_terminal() {
    let clean = fixtures().join("clean.yaml");
    let out = api_ruler(&[clean.to_str().unwrap(), "--interactive"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(text(&out.stderr).contains("terminal"));
}

#[test]
fn unknown_rule_reports_one_line() {
    let clean = fixtures().join("clean.yaml");
    let out = api_ruler(&[clean.to_str().unwrap(), "--rules", "Lowercase,Nope"]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(text(&out.stderr), "error: unknown rule id \"Nope\"\n");
}

#[test]
fn unreachable_url_is_an_input_error() {
    let listener = std::net::TcpListener::bind("127.0.0.1:0").unwrap();
    let url = format!("http://{}/api.yaml", listener.local_addr().unwrap());
    drop(listener);
    let out = api_ruler(&[&url]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(text(&out.stderr).lines().count(), 1);
}

#[test]
fn remote_document_with_json_output() {
    let body = fs::read(rule_fixtures().join("Lowercase.yaml")).unwrap();
    let url = serve_once(200, body);
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("r.json");
    let out = api_ruler(&[&url, "--rules", "Lowercase", "--json", json.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let report: serde_json::Value = serde_json::from_str(&fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(report["source"], url.as_str());
    assert_eq!(report["counts"]["Lowercase"], 5);
}

#[test]
fn remote_size_cap() {
    let url = serve_once(200, fs::read(fixtures().join("clean.yaml")).unwrap());
    let out = api_ruler(&[&url, "--max-bytes", "64"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn markdown_report_has_one_section_per_violated_rule() {
    let dir = tempfile::tempdir().unwrap();
    let md = dir.path().join("report.md");
    let file = rule_fixtures().join("NoTrailingSlash.yaml");
    let out = api_ruler(&[
        file.to_str().unwrap(),
        "--rules",
        "NoTrailingSlash,Lowercase",
        "--out",
        md.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    let md = fs::read_to_string(md).unwrap();
    assert_eq!(md.matches("\n## ").count(), 1, "{md}");
    assert!(md.contains("## NoTrailingSlash"));
}

#[test]
fn classifier_train_eval_and_custom_model() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("corpus.csv");
    fs::write(
        &corpus,
        "label,text\nGET,show the widget\nGET,show all widgets\nDELETE,zap the widget\nDELETE,zap every widget\nGET,show widget list\nDELETE,zap widget now\n",
    )
    .unwrap();
    let model = dir.path().join("model.json");
    let out = api_ruler(&[
        "classifier",
        "train",
        "--corpus",
        corpus.to_str().unwrap(),
        "--out",
        model.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", text(&out.stderr));
    assert!(text(&out.stdout).contains("trained on 6 samples"));

    let out = api_ruler(&[
        "classifier",
        "eval",
        "--corpus",
        corpus.to_str().unwrap(),
        "--folds",
        "3",
        "--seed",
        "1",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(text(&out.stdout).contains("mean accuracy: 1.0000"));

    let doc = dir.path().join("api.yaml");
    fs::write(
        &doc,
        "openapi: 3.0.0\ninfo: {title: t, version: '1'}\npaths:\n  /widgets/{widgetId}:\n    get:\n      summary: zap the widget\n      responses:\n        '200':\n          description: ok\n          content: {application/json: {}}\n",
    )
    .unwrap();
    let out = api_ruler(&[
        doc.to_str().unwrap(),
        "--rules",
        "NoTunnel",
        "--model",
        model.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1), "{}", text(&out.stdout));
    let out = Command::new(env!("CARGO_BIN_EXE_api-ruler"))
        .args([doc.to_str().unwrap(), "--rules", "NoTunnel"])
        .env("API_RULER_MODEL", &model)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(1));

    let out = api_ruler(&[
        "classifier",
        "eval",
        "--corpus",
        corpus.to_str().unwrap(),
        "--folds",
        "10",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn bench_run_and_score() {
    let dir = tempfile::tempdir().unwrap();
    let results = dir.path().join("results.csv");
    let reports = dir.path().join("reports");
    let out = api_ruler(&[
        "bench",
        "run",
        rule_fixtures().to_str().unwrap(),
        "--out",
        results.to_str().unwrap(),
        "--reports-dir",
        reports.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", text(&out.stderr));
    assert!(text(&out.stdout).contains("14 of 14 documents analyzed"));
    let csv = fs::read_to_string(&results).unwrap();
    assert!(csv.starts_with(
        "file,outcome,duration_ms,path_count,size_bucket,violation_count,peak_memory_bytes,error\n"
    ));
    assert_eq!(csv.lines().count(), 15);

    let scores = dir.path().join("scores.csv");
    let gold = rule_fixtures().join("gold.jsonl");
    let out = api_ruler(&[
        "bench",
        "score",
        "--reports",
        reports.to_str().unwrap(),
        "--gold",
        gold.to_str().unwrap(),
        "--out",
        scores.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", text(&out.stderr));
    let scores = fs::read_to_string(scores).unwrap();
    assert!(scores.contains("NoUnderscores,5,0,0,1.0000,1.0000\n"), "{scores}");
}

#[test]
fn json_reports_match_the_schema() {
    let schema: serde_json::Value = serde_json::from_str(
        &fs::read_to_string(concat!(
            env!("CARGO_MANIFEST_DIR"),
            "/../../docs/report.schema.json"
        ))
        .unwrap(),
    )
    .unwrap();
    let validator = jsonschema::JSONSchema::compile(&schema).unwrap();
    let analyzer = Analyzer::new(AnalysisConfig::default()).unwrap();
    for (name, bytes) in fixture_documents() {
        let report = analyzer.analyze_source(&bytes, &name).unwrap();
        let value: serde_json::Value = serde_json::from_str(&render_json(&report).content).unwrap();
        let errors: Vec<String> = match validator.validate(&value) {
            Ok(()) => Vec::new(),
            Err(errors) => errors.map(|e| e.to_string()).collect(),
        };
        assert!(errors.is_empty(), "{name}: {errors:?}");
    }
}
