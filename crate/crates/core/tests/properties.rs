use std::collections::BTreeSet;

use api_ruler::classifier::ClassifierModel;
use api_ruler::engine::{AnalysisConfig, Analyzer};
use api_ruler::lexicon::{segment, Lexicon};
use api_ruler::openapi::parse_document;
use api_ruler::par::Execution;
use api_ruler::report::render_json;
use api_ruler::rules::{check_rule, RuleContext, RuleId};
use proptest::prelude::*;

const WORDS: &[&str] = &[
    "users",
    "user",
    "orders",
    "Order",
    "getItems",
    "shipping_address",
    "paymentmethods",
    "me",
    "report.pdf",
    "cancel",
    "closure",
    "Microsoft.Sql",
    "a.b",
    "v1",
    "people",
    "data",
    "html",
];

fn segment_strategy() -> impl Strategy<Value = String> {
    prop_oneof![
        3 => prop::sample::select(WORDS).prop_map(str::to_string),
        1 => "[a-z_]{1,6}".prop_map(|s| format!("{{{s}}}")),
        1 => "[a-zA-Z]{1,12}",
    ]
}

fn path_strategy() -> impl Strategy<Value = String> {
    (prop::collection::vec(segment_strategy(), 1..5), any::<bool>())
        .prop_map(|(segs, slash)| format!("/{}{}", segs.join("/"), if slash { "/" } else { "" }))
}

#[derive(Debug, Clone)]
struct Op {
    method: &'static str,
    summary: Option<&'static str>,
    secured: bool,
    status: &'static str,
    typed: bool,
    body: bool,
}

fn op_strategy() -> impl Strategy<Value = Op> {
    (
        prop::sample::select(&["get", "post", "put", "delete", "patch", "head"][..]),
        prop::option::of(prop::sample::select(
            &[
                "Delete the user",
                "List all orders",
                "Create an item",
                "Update the order",
                "x",
            ][..],
        )),
        any::<bool>(),
        prop::sample::select(&["200", "201", "204", "404", "default"][..]),
        any::<bool>(),
        any::<bool>(),
    )
        .prop_map(|(method, summary, secured, status, typed, body)| Op {
            method,
            summary,
            secured,
            status,
            typed,
            body,
        })
}

fn yaml_document(paths: &[(String, Vec<Op>)], drop_optional: bool) -> String {
    let mut out = String::from("openapi: 3.0.3\ninfo:\n  title: T\n  version: '1'\npaths:\n");
    for (path, ops) in paths {
        out.push_str(&format!("  '{path}':\n"));
        let mut seen = BTreeSet::new();
        for op in ops.iter().filter(|o| seen.insert(o.method)) {
            out.push_str(&format!("    {}:\n", op.method));
            if !drop_optional {
                if let Some(s) = op.summary {
                    out.push_str(&format!("      summary: {s}\n"));
                }
                if op.secured {
                    out.push_str("      security:\n        - key: []\n");
                }
            }
            if op.body {
                out.push_str("      requestBody:\n        content:\n          application/json: {}\n");
            }
            out.push_str(&format!(
                "      responses:\n        '{}':\n          description: r\n",
                op.status
            ));
            if op.typed {
                out.push_str("          content:\n            application/json: {}\n");
            }
        }
    }
    out.push_str("components:\n  securitySchemes:\n    key: {type: apiKey, in: header, name: K}\n");
    out
}

fn document_strategy() -> impl Strategy<Value = Vec<(String, Vec<Op>)>> {
    prop::collection::btree_map(path_strategy(), prop::collection::vec(op_strategy(), 1..4), 1..8)
        .prop_map(|m| m.into_iter().collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn all_rules_equal_union_of_single_rules(paths in document_strategy()) {
        let doc = parse_document(yaml_document(&paths, false).as_bytes(), "p.yaml").unwrap();
        let report = Analyzer::new(AnalysisConfig::default()).unwrap().analyze(&doc).unwrap();
        let ctx = RuleContext::standard();
        let mut union: Vec<_> = RuleId::ALL.iter().flat_map(|&id| check_rule(id, &doc, &ctx)).collect();
        union.sort();
        prop_assert_eq!(&report.violations, &union);
        prop_assert_eq!(report.counts_by_rule.values().sum::<usize>(), report.violations.len());
        prop_assert!(report.violations.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn execution_mode_does_not_change_results(paths in document_strategy()) {
        let doc = parse_document(yaml_document(&paths, false).as_bytes(), "p.yaml").unwrap();
        let run = |execution| {
            let config = AnalysisConfig { execution, ..AnalysisConfig::default() };
            let mut report = Analyzer::new(config).unwrap().analyze(&doc).unwrap();
            report.started_at = chrono::DateTime::UNIX_EPOCH;
            report.finished_at = chrono::DateTime::UNIX_EPOCH;
            render_json(&report).content
        };
        prop_assert_eq!(run(Execution::Serial), run(Execution::Parallel));
    }

    #[test]
    fn path_lines_increase_in_source_order(paths in document_strategy()) {
        let doc = parse_document(yaml_document(&paths, false).as_bytes(), "p.yaml").unwrap();
        let lines: Vec<u32> = doc.paths.iter().map(|p| p.line).filter(|&l| l > 0).collect();
        prop_assert_eq!(lines.len(), paths.len());
        prop_assert!(lines.windows(2).all(|w| w[0] < w[1]), "{:?}", lines);
    }

    #[test]
    fn json_path_lines_increase_in_source_order(paths in prop::collection::btree_set(path_strategy(), 1..8)) {
        let body: Vec<String> = paths
            .iter()
            .map(|p| format!("    \"{}\": {{\n      \"get\": {{\"responses\": {{\"200\": {{\"description\": \"ok\"}}}}}}\n    }}", p))
            .collect();
        let text = format!("{{\n  \"openapi\": \"3.0.0\",\n  \"info\": {{\"title\": \"t\", \"version\": \"1\"}},\n  \"paths\": {{\n{}\n  }}\n}}\n", body.join(",\n"));
        let doc = parse_document(text.as_bytes(), "p.json").unwrap();
        let lines: Vec<u32> = doc.paths.iter().map(|p| p.line).collect();
        prop_assert!(lines.iter().all(|&l| l > 0));
        prop_assert!(lines.windows(2).all(|w| w[0] < w[1]), "{:?}", lines);
    }

    #[test]
    fn dropping_optional_fields_keeps_documents_parseable(paths in document_strategy()) {
        prop_assert!(parse_document(yaml_document(&paths, false).as_bytes(), "p.yaml").is_ok());
        prop_assert!(parse_document(yaml_document(&paths, true).as_bytes(), "p.yaml").is_ok());
    }

    #[test]
    fn segmentation_covers_the_token(token in "[a-z]{1,24}") {
        let s = segment(&token, Lexicon::shared().frequency()).unwrap();
        prop_assert_eq!(s.words.concat(), token);
        prop_assert!(s.penalized_cost.is_finite());
        if !s.residual {
            prop_assert_eq!(s.cost, s.penalized_cost);
        }
    }

    #[test]
    fn posteriors_form_a_distribution(text in "[a-zA-Z ]{0,80}") {
        let p = ClassifierModel::starter().predict(&text);
        let total: f64 = p.posterior.values().sum();
        prop_assert!((total - 1.0).abs() < 1e-9);
        prop_assert!(p.posterior.values().all(|&x| (0.0..=1.0).contains(&x)));
        let best = p.posterior.values().cloned().fold(0.0, f64::max);
        prop_assert_eq!(p.probability(p.label), best);
    }
}
