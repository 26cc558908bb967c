use crate::classifier::VerbLabel;
use crate::openapi::{ApiDocument, HttpMethod, OperationEntry, PathEntry};

use super::{RuleChecker, RuleContext, RuleId, Severity, Violation};

fn operations(doc: &ApiDocument) -> impl Iterator<Item = (&PathEntry, &OperationEntry)> {
    doc.paths
        .iter()
        .flat_map(|p| p.operations.values().map(move |op| (p, op)))
}

fn op_violation(
    rule: RuleId,
    path: &PathEntry,
    op: &OperationEntry,
    message: String,
    evidence: impl Into<String>,
) -> Violation {
    let line = if op.line == 0 { path.line } else { op.line };
    Violation::new(rule, &path.template, Some(op.method), line, message, evidence)
}

/// Statuses whose responses carry no body.
fn is_bodiless_status(key: &str) -> bool {
    key == "204" || key == "304" || key.starts_with('1')
}

pub struct ContentType;

impl RuleChecker for ContentType {
    fn id(&self) -> RuleId {
        RuleId::ContentType
    }

    fn check(&self, doc: &ApiDocument, _ctx: &RuleContext<'_>) -> Vec<Violation> {
        let mut out = Vec::new();
        for (path, op) in operations(doc) {
            if op.has_request_body && op.request_content_types.is_empty() && !op.request_body_unresolved {
                out.push(op_violation(
                    self.id(),
                    path,
                    op,
                    "request body declares no media type".into(),
                    "requestBody",
                ));
            }
            if op.method == HttpMethod::Head {
                continue;
            }
            for (status, response) in &op.responses {
                if is_bodiless_status(status) || response.unresolved || !response.content_types.is_empty() {
                    continue;
                }
                out.push(op_violation(
                    self.id(),
                    path,
                    op,
                    format!("response {status} declares no media type"),
                    status.as_str(),
                ));
            }
        }
        out
    }
}

pub struct GetRetrieve;

impl RuleChecker for GetRetrieve {
    fn id(&self) -> RuleId {
        RuleId::GetRetrieve
    }

    fn check(&self, doc: &ApiDocument, _ctx: &RuleContext<'_>) -> Vec<Violation> {
        let mut out = Vec::new();
        for (path, op) in operations(doc).filter(|(_, op)| op.method == HttpMethod::Get) {
            if op.has_request_body {
                out.push(op_violation(
                    self.id(),
                    path,
                    op,
                    "GET operation declares a request body".into(),
                    "requestBody",
                ));
            }
            if !op.responses.contains_key("200") && !op.responses.contains_key("default") {
                let declared: Vec<&str> = op.responses.keys().map(String::as_str).collect();
                out.push(op_violation(
                    self.id(),
                    path,
                    op,
                    "GET operation defines neither a 200 nor a default response".into(),
                    declared.join(","),
                ));
            }
        }
        out
    }
}

/// Standard reason phrases that contradict a 401 response.
const OTHER_REASON_PHRASES: &[&str] = &[
    "forbidden",
    "not found",
    "bad request",
    "payment required",
    "method not allowed",
    "not acceptable",
    "proxy authentication required",
    "request timeout",
    "conflict",
    "gone",
    "precondition failed",
    "unprocessable entity",
    "too many requests",
    "internal server error",
    "service unavailable",
];

pub struct Rc401;

impl RuleChecker for Rc401 {
    fn id(&self) -> RuleId {
        RuleId::Rc401
    }

    fn check(&self, doc: &ApiDocument, _ctx: &RuleContext<'_>) -> Vec<Violation> {
        let mut out = Vec::new();
        for (path, op) in operations(doc).filter(|(_, op)| !op.security_schemes.is_empty()) {
            let Some(response) = op.responses.get("401") else {
                out.push(op_violation(
                    self.id(),
                    path,
                    op,
                    format!(
                        "secured operation ({}) defines no 401 response",
                        op.security_schemes.join(", ")
                    ),
                    op.security_schemes.join(","),
                ));
                continue;
            };
            let description = response.description.as_deref().unwrap_or("").to_lowercase();
            if description.contains("unauthorized") || description.contains("unauthorised") {
                continue;
            }
            if let Some(phrase) = OTHER_REASON_PHRASES.iter().find(|p| description.contains(*p)) {
                let mut v = op_violation(
                    self.id(),
                    path,
                    op,
                    format!("401 response is described as '{phrase}'"),
                    response.description.clone().unwrap_or_default(),
                );
                v.severity = Severity::Warning;
                out.push(v);
            }
        }
        out
    }
}

pub struct NoTunnel;

fn label_for(method: HttpMethod) -> Option<VerbLabel> {
    match method {
        HttpMethod::Get => Some(VerbLabel::Get),
        HttpMethod::Post => Some(VerbLabel::Post),
        _ => None,
    }
}

impl RuleChecker for NoTunnel {
    fn id(&self) -> RuleId {
        RuleId::NoTunnel
    }

    fn check(&self, doc: &ApiDocument, ctx: &RuleContext<'_>) -> Vec<Violation> {
        let mut out = Vec::new();
        for (path, op) in operations(doc) {
            let Some(declared) = label_for(op.method) else {
                continue;
            };
            let text = op.text();
            if text.is_empty() {
                continue;
            }
            let prediction = ctx.classifier.predict(&text);
            let p = prediction.probability(prediction.label);
            if prediction.label == VerbLabel::Invalid
                || prediction.label == declared
                || p < ctx.tunnel_threshold
            {
                continue;
            }
            out.push(op_violation(
                self.id(),
                path,
                op,
                format!(
                    "{} operation is described like a {} operation (confidence {:.2})",
                    declared, prediction.label, p
                ),
                text,
            ));
        }
        out
    }
}
