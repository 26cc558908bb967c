//! Normalized, immutable model of an OpenAPI description.
//!
//! Documents in OpenAPI 2.0 are converted to the 3.x layout before
//! modeling, so every rule sees the same shape regardless of input version.

mod convert;
mod lines;
mod parse;
mod refs;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use convert::convert_v2;
pub use lines::map_lines;
pub use parse::{parse_document, parse_document_with, ParseOptions, DEFAULT_MAX_DOCUMENT_BYTES};
pub use refs::MAX_REF_DEPTH;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("unparsable document: {0}")]
    UnparsableDocument(String),
    #[error("not an OpenAPI document (no \"openapi\" or \"swagger\" version key)")]
    NotAnOpenApiDocument,
    #[error("document is {size} bytes, exceeding the {limit}-byte limit")]
    DocumentTooLarge { size: usize, limit: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SpecVersion {
    V2,
    V30,
    V31,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum HttpMethod {
    Get,
    Post,
    Put,
    Patch,
    Delete,
    Head,
    Options,
}

impl HttpMethod {
    pub const ALL: [HttpMethod; 7] = [
        HttpMethod::Get,
        HttpMethod::Post,
        HttpMethod::Put,
        HttpMethod::Patch,
        HttpMethod::Delete,
        HttpMethod::Head,
        HttpMethod::Options,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            HttpMethod::Get => "GET",
            HttpMethod::Post => "POST",
            HttpMethod::Put => "PUT",
            HttpMethod::Patch => "PATCH",
            HttpMethod::Delete => "DELETE",
            HttpMethod::Head => "HEAD",
            HttpMethod::Options => "OPTIONS",
        }
    }

    /// Lowercase key used in OpenAPI path items.
    pub fn key(self) -> &'static str {
        match self {
            HttpMethod::Get => "get",
            HttpMethod::Post => "post",
            HttpMethod::Put => "put",
            HttpMethod::Patch => "patch",
            HttpMethod::Delete => "delete",
            HttpMethod::Head => "head",
            HttpMethod::Options => "options",
        }
    }
}

impl fmt::Display for HttpMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for HttpMethod {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        HttpMethod::ALL
            .into_iter()
            .find(|m| m.key().eq_ignore_ascii_case(s))
            .ok_or_else(|| format!("unknown HTTP method {s:?}"))
    }
}

/// One `/`-delimited piece of a path template.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UriSegment {
    pub text: String,
    pub is_template: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResponseEntry {
    pub status_key: String,
    pub description: Option<String>,
    /// Media types of the response body; empty when no body is declared.
    pub content_types: Vec<String>,
    pub resolved_via_reference: bool,
    /// The response (or a link in its reference chain) could not be resolved.
    pub unresolved: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OperationEntry {
    pub method: HttpMethod,
    pub summary: Option<String>,
    pub description: Option<String>,
    pub has_request_body: bool,
    pub request_content_types: Vec<String>,
    /// The request body reference chain could not be resolved.
    pub request_body_unresolved: bool,
    pub responses: BTreeMap<String, ResponseEntry>,
    /// Effective security requirement names (operation-level, else global).
    pub security_schemes: Vec<String>,
    /// 1-based source line; 0 when unknown.
    pub line: u32,
}

impl OperationEntry {
    /// Summary and description joined, summary first.
    pub fn text(&self) -> String {
        [self.summary.as_deref(), self.description.as_deref()]
            .into_iter()
            .flatten()
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .collect::<Vec<_>>()
            .join(" ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PathEntry {
    pub template: String,
    pub segments: Vec<UriSegment>,
    pub operations: BTreeMap<HttpMethod, OperationEntry>,
    /// 1-based source line of the path key; 0 when unknown.
    pub line: u32,
}

impl PathEntry {
    pub fn new(template: impl Into<String>) -> Self {
        let template = template.into();
        let segments = split_segments(&template);
        PathEntry {
            template,
            segments,
            operations: BTreeMap::new(),
            line: 0,
        }
    }

    pub fn methods(&self) -> impl Iterator<Item = HttpMethod> + '_ {
        self.operations.keys().copied()
    }
}

/// Splits a template on `/`, dropping empty pieces.
pub fn split_segments(template: &str) -> Vec<UriSegment> {
    template
        .split('/')
        .filter(|s| !s.is_empty())
        .map(|s| UriSegment {
            text: s.to_string(),
            is_template: crate::lexicon::is_template(s),
        })
        .collect()
}

/// Names of reusable component definitions, grouped by kind.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Components {
    pub schemas: BTreeSet<String>,
    pub responses: BTreeSet<String>,
    pub parameters: BTreeSet<String>,
    pub request_bodies: BTreeSet<String>,
    pub security_schemes: BTreeSet<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApiDocument {
    pub source_name: String,
    pub spec_version: SpecVersion,
    pub paths: Vec<PathEntry>,
    pub components: Components,
    pub global_security: Vec<String>,
    /// `$ref` targets that could not be resolved (missing, remote, or too deep).
    pub unresolved_refs: Vec<String>,
    /// Conversion and tolerance warnings collected while parsing.
    pub warnings: Vec<String>,
}

impl ApiDocument {
    pub fn path(&self, template: &str) -> Option<&PathEntry> {
        self.paths.iter().find(|p| p.template == template)
    }

    pub fn operation_count(&self) -> usize {
        self.paths.iter().map(|p| p.operations.len()).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn segments_drop_empty_pieces() {
        let p = PathEntry::new("/users/{id}/");
        let texts: Vec<_> = p.segments.iter().map(|s| s.text.as_str()).collect();
        assert_eq!(texts, ["users", "{id}"]);
        assert!(p.segments[1].is_template);
        assert!(PathEntry::new("/").segments.is_empty());
    }

    #[test]
    fn method_parsing() {
        assert_eq!("get".parse::<HttpMethod>(), Ok(HttpMethod::Get));
        assert_eq!("PATCH".parse::<HttpMethod>(), Ok(HttpMethod::Patch));
        assert!("trace".parse::<HttpMethod>().is_err());
    }

    #[test]
    fn operation_text_puts_summary_first() {
        let op = OperationEntry {
            method: HttpMethod::Get,
            summary: Some("List pets".into()),
            description: Some(" Returns all pets ".into()),
            has_request_body: false,
            request_content_types: vec![],
            request_body_unresolved: false,
            responses: BTreeMap::new(),
            security_schemes: vec![],
            line: 0,
        };
        assert_eq!(op.text(), "List pets Returns all pets");
    }
}
