//! Console, Markdown and JSON renderings of a [`Report`].
//!
//! All renderers are pure: the same report always yields the same bytes.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use chrono::SecondsFormat;
use serde::{Deserialize, Serialize};

use crate::engine::Report;
use crate::openapi::HttpMethod;
use crate::rules::{descriptor, Category, RuleId, Severity, Violation};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Console,
    Markdown,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderedReport {
    pub format: Format,
    pub content: String,
}

fn plural(n: usize, word: &str) -> String {
    if n == 1 {
        format!("{n} {word}")
    } else {
        format!("{n} {word}s")
    }
}

fn line_label(line: u32) -> String {
    if line == 0 {
        "?".to_string()
    } else {
        line.to_string()
    }
}

pub fn render_console(report: &Report) -> RenderedReport {
    let mut out = String::new();
    for v in &report.violations {
        let _ = writeln!(
            out,
            "{}:{} [{}] {}",
            line_label(v.line),
            v.path_template,
            v.rule_id,
            v.message
        );
    }
    for w in &report.warnings {
        let _ = writeln!(out, "warning: {w}");
    }
    let _ = writeln!(
        out,
        "{} across {}",
        plural(report.violations.len(), "violation"),
        plural(report.violated_rules().len(), "rule")
    );
    RenderedReport {
        format: Format::Console,
        content: out,
    }
}

/// Makes text safe inside a Markdown table cell.
fn cell(text: &str) -> String {
    text.replace('|', "\\|").replace(['\r', '\n'], " ")
}

pub fn render_markdown(report: &Report) -> RenderedReport {
    let mut out = String::new();
    let ts = |t: &chrono::DateTime<chrono::Utc>| t.to_rfc3339_opts(SecondsFormat::Secs, true);
    let _ = writeln!(out, "# API design report: {}\n", report.source_name);
    let _ = writeln!(out, "- Source: `{}`", report.source_name);
    let _ = writeln!(out, "- Started: {}", ts(&report.started_at));
    let _ = writeln!(out, "- Finished: {}", ts(&report.finished_at));
    let _ = writeln!(out, "- Paths analyzed: {}", report.path_count);
    let _ = writeln!(out, "- Rules run: {}", report.rules_run.len());
    let _ = writeln!(out, "- Violations: {}", report.violations.len());

    if report.violations.is_empty() {
        out.push_str("\nNo violations found.\n");
    }

    for id in RuleId::ALL {
        let found: Vec<&Violation> = report.violations.iter().filter(|v| v.rule_id == id).collect();
        if found.is_empty() {
            continue;
        }
        let d = descriptor(id);
        let _ = writeln!(out, "\n## {id}\n");
        let _ = writeln!(out, "- Category: {}", d.category.label());
        let _ = writeln!(out, "- Severity: {}", d.severity.as_str());
        let _ = writeln!(out, "- Rule: {}", d.title);
        let _ = writeln!(out, "- Suggestion: {}", d.suggestion);
        let _ = writeln!(out, "- Violations: {}\n", found.len());
        out.push_str("| Line | Path | Method | Evidence | Message |\n");
        out.push_str("|---:|---|---|---|---|\n");
        for v in found {
            let _ = writeln!(
                out,
                "| {} | `{}` | {} | {} | {} |",
                line_label(v.line),
                cell(&v.path_template),
                v.method.map_or("-", HttpMethod::as_str),
                cell(&v.evidence),
                cell(&v.message),
            );
        }
    }

    if !report.warnings.is_empty() {
        out.push_str("\n## Warnings\n\n");
        for w in &report.warnings {
            let _ = writeln!(out, "- {}", w);
        }
    }
    RenderedReport {
        format: Format::Markdown,
        content: out,
    }
}

/// One violation in the JSON report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonViolation {
    pub rule: RuleId,
    pub path: String,
    pub method: Option<HttpMethod>,
    pub line: u32,
    pub message: String,
    pub evidence: String,
    pub severity: Severity,
    pub category: Category,
}

/// The stable machine-readable report; field order is the output order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonReport {
    pub source: String,
    pub violations: Vec<JsonViolation>,
    pub counts: BTreeMap<RuleId, usize>,
    pub warnings: Vec<String>,
}

impl From<&Report> for JsonReport {
    fn from(report: &Report) -> Self {
        JsonReport {
            source: report.source_name.clone(),
            violations: report
                .violations
                .iter()
                .map(|v| JsonViolation {
                    rule: v.rule_id,
                    path: v.path_template.clone(),
                    method: v.method,
                    line: v.line,
                    message: v.message.clone(),
                    evidence: v.evidence.clone(),
                    severity: v.severity,
                    category: descriptor(v.rule_id).category,
                })
                .collect(),
            counts: report.counts_by_rule.clone(),
            warnings: report.warnings.clone(),
        }
    }
}

pub fn render_json(report: &Report) -> RenderedReport {
    let mut content = serde_json::to_string_pretty(&JsonReport::from(report)).expect("report serializes");
    content.push('\n');
    RenderedReport {
        format: Format::Json,
        content,
    }
}

pub fn render(report: &Report, format: Format) -> RenderedReport {
    match format {
        Format::Console => render_console(report),
        Format::Markdown => render_markdown(report),
        Format::Json => render_json(report),
    }
}
