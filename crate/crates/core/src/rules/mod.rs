//! The fourteen design-rule checkers.
//!
//! Every checker implements [`RuleChecker`]: it reads an immutable
//! [`ApiDocument`] plus shared services and returns violations. Checkers
//! never fail and hold no state, so they can run in any order or
//! concurrently.

mod descriptors;
mod operations;
mod segments;
mod uri;

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::classifier::ClassifierModel;
use crate::lexicon::Lexicon;
use crate::openapi::{ApiDocument, HttpMethod};

pub use descriptors::{descriptor, descriptors, RuleDescriptor};
pub use segments::{classify_segments, final_word, SegmentClass, SegmentKind};

/// Default minimum posterior for a NoTunnel report.
pub const DEFAULT_TUNNEL_THRESHOLD: f64 = 0.7;

/// Rule identifiers, declared in reporting order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum RuleId {
    PluralNoun,
    SingularNoun,
    VerbController,
    NoTrailingSlash,
    ForwardSlash,
    NoFileExtensions,
    #[serde(rename = "NoCRUDNames")]
    NoCrudNames,
    NoUnderscores,
    Hyphens,
    Lowercase,
    ContentType,
    NoTunnel,
    #[serde(rename = "GETRetrieve")]
    GetRetrieve,
    #[serde(rename = "RC401")]
    Rc401,
}

impl RuleId {
    pub const ALL: [RuleId; 14] = [
        RuleId::PluralNoun,
        RuleId::SingularNoun,
        RuleId::VerbController,
        RuleId::NoTrailingSlash,
        RuleId::ForwardSlash,
        RuleId::NoFileExtensions,
        RuleId::NoCrudNames,
        RuleId::NoUnderscores,
        RuleId::Hyphens,
        RuleId::Lowercase,
        RuleId::ContentType,
        RuleId::NoTunnel,
        RuleId::GetRetrieve,
        RuleId::Rc401,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            RuleId::PluralNoun => "PluralNoun",
            RuleId::SingularNoun => "SingularNoun",
            RuleId::VerbController => "VerbController",
            RuleId::NoTrailingSlash => "NoTrailingSlash",
            RuleId::ForwardSlash => "ForwardSlash",
            RuleId::NoFileExtensions => "NoFileExtensions",
            RuleId::NoCrudNames => "NoCRUDNames",
            RuleId::NoUnderscores => "NoUnderscores",
            RuleId::Hyphens => "Hyphens",
            RuleId::Lowercase => "Lowercase",
            RuleId::ContentType => "ContentType",
            RuleId::NoTunnel => "NoTunnel",
            RuleId::GetRetrieve => "GETRetrieve",
            RuleId::Rc401 => "RC401",
        }
    }

    pub fn checker(self) -> &'static dyn RuleChecker {
        match self {
            RuleId::PluralNoun => &uri::PluralNoun,
            RuleId::SingularNoun => &uri::SingularNoun,
            RuleId::VerbController => &uri::VerbController,
            RuleId::NoTrailingSlash => &uri::NoTrailingSlash,
            RuleId::ForwardSlash => &uri::ForwardSlash,
            RuleId::NoFileExtensions => &uri::NoFileExtensions,
            RuleId::NoCrudNames => &uri::NoCrudNames,
            RuleId::NoUnderscores => &uri::NoUnderscores,
            RuleId::Hyphens => &uri::Hyphens,
            RuleId::Lowercase => &uri::Lowercase,
            RuleId::ContentType => &operations::ContentType,
            RuleId::NoTunnel => &operations::NoTunnel,
            RuleId::GetRetrieve => &operations::GetRetrieve,
            RuleId::Rc401 => &operations::Rc401,
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownRuleId(pub String);

impl fmt::Display for UnknownRuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown rule id {:?}", self.0)
    }
}

impl std::error::Error for UnknownRuleId {}

impl FromStr for RuleId {
    type Err = UnknownRuleId;

    /// Case-insensitive match on the rule name.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        RuleId::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| UnknownRuleId(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Category {
    UriDesign,
    MetadataDesign,
    RequestMethods,
    HttpStatusCodes,
}

impl Category {
    pub fn label(self) -> &'static str {
        match self {
            Category::UriDesign => "URI Design",
            Category::MetadataDesign => "Metadata Design",
            Category::RequestMethods => "Request Methods",
            Category::HttpStatusCodes => "HTTP Status Codes",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Severity {
    Error,
    Warning,
}

impl Severity {
    pub fn as_str(self) -> &'static str {
        match self {
            Severity::Error => "error",
            Severity::Warning => "warning",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub rule_id: RuleId,
    pub path_template: String,
    pub method: Option<HttpMethod>,
    /// 1-based source line, 0 when unknown.
    pub line: u32,
    pub message: String,
    /// The offending token or field.
    pub evidence: String,
    /// Usually the rule's severity; RC401 reports mislabeled 401 responses
    /// as warnings.
    pub severity: Severity,
}

impl Violation {
    pub(crate) fn new(
        rule_id: RuleId,
        path_template: &str,
        method: Option<HttpMethod>,
        line: u32,
        message: String,
        evidence: impl Into<String>,
    ) -> Self {
        Violation {
            rule_id,
            path_template: path_template.to_string(),
            method,
            line,
            message,
            evidence: evidence.into(),
            severity: descriptor(rule_id).severity,
        }
    }

    fn sort_key(&self) -> (u32, RuleId, &str, Option<HttpMethod>, &str, &str) {
        (
            self.line,
            self.rule_id,
            &self.path_template,
            self.method,
            &self.message,
            &self.evidence,
        )
    }
}

/// Report order: line, then rule, then path; the remaining fields only
/// break ties so the order is total.
impl Ord for Violation {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key()
            .cmp(&other.sort_key())
            .then_with(|| self.severity.cmp(&other.severity))
    }
}

impl PartialOrd for Violation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Shared read-only services handed to every checker.
#[derive(Clone, Copy)]
pub struct RuleContext<'a> {
    pub lexicon: &'a Lexicon,
    pub classifier: &'a ClassifierModel,
    pub tunnel_threshold: f64,
}

impl RuleContext<'static> {
    /// Bundled lexicon, starter model and default threshold.
    pub fn standard() -> Self {
        RuleContext {
            lexicon: Lexicon::shared(),
            classifier: ClassifierModel::starter(),
            tunnel_threshold: DEFAULT_TUNNEL_THRESHOLD,
        }
    }
}

pub trait RuleChecker: Sync {
    fn id(&self) -> RuleId;
    fn check(&self, document: &ApiDocument, ctx: &RuleContext<'_>) -> Vec<Violation>;
}

/// Runs a single rule and returns its violations in report order.
pub fn check_rule(id: RuleId, document: &ApiDocument, ctx: &RuleContext<'_>) -> Vec<Violation> {
    let mut v = id.checker().check(document, ctx);
    v.sort();
    v
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip_and_are_ordered() {
        for id in RuleId::ALL {
            assert_eq!(id.as_str().parse::<RuleId>().unwrap(), id);
            assert_eq!(id.checker().id(), id);
            let json = serde_json::to_string(&id).unwrap();
            assert_eq!(json, format!("\"{}\"", id.as_str()));
        }
        assert_eq!("nocrudnames".parse::<RuleId>().unwrap(), RuleId::NoCrudNames);
        assert!("NoSuchRule".parse::<RuleId>().is_err());
        let mut sorted = RuleId::ALL;
        sorted.sort();
        assert_eq!(sorted, RuleId::ALL);
    }

    #[test]
    fn violations_sort_by_line_rule_path() {
        let v = |line, rule, path: &str| Violation::new(rule, path, None, line, "m".into(), "e");
        let mut list = [
            v(5, RuleId::Lowercase, "/b"),
            v(5, RuleId::PluralNoun, "/z"),
            v(2, RuleId::Rc401, "/a"),
            v(5, RuleId::Lowercase, "/a"),
        ];
        list.sort();
        let keys: Vec<_> = list
            .iter()
            .map(|x| (x.line, x.rule_id, x.path_template.as_str()))
            .collect();
        assert_eq!(
            keys,
            [
                (2, RuleId::Rc401, "/a"),
                (5, RuleId::PluralNoun, "/z"),
                (5, RuleId::Lowercase, "/a"),
                (5, RuleId::Lowercase, "/b"),
            ]
        );
    }
}
