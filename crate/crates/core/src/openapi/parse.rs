use std::collections::BTreeMap;

use serde_json::{Map, Value};

use super::refs::{ref_target, resolve};
use super::{
    convert_v2, map_lines, ApiDocument, Components, HttpMethod, OperationEntry, ParseError, PathEntry,
    ResponseEntry, SpecVersion,
};

/// Default cap on source size: 20 MB.
pub const DEFAULT_MAX_DOCUMENT_BYTES: usize = 20 * 1024 * 1024;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParseOptions {
    pub max_bytes: usize,
}

impl Default for ParseOptions {
    fn default() -> Self {
        ParseOptions {
            max_bytes: DEFAULT_MAX_DOCUMENT_BYTES,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum SourceFormat {
    Json,
    Yaml,
}

pub(crate) fn sniff_format(text: &str) -> SourceFormat {
    match text.trim_start_matches('\u{feff}').trim_start().chars().next() {
        Some('{') | Some('[') => SourceFormat::Json,
        _ => SourceFormat::Yaml,
    }
}

/// Parses with default options. Line numbers are mapped.
pub fn parse_document(bytes: &[u8], source_name: &str) -> Result<ApiDocument, ParseError> {
    parse_document_with(bytes, source_name, &ParseOptions::default())
}

pub fn parse_document_with(
    bytes: &[u8],
    source_name: &str,
    options: &ParseOptions,
) -> Result<ApiDocument, ParseError> {
    if bytes.len() > options.max_bytes {
        return Err(ParseError::DocumentTooLarge {
            size: bytes.len(),
            limit: options.max_bytes,
        });
    }
    let text = std::str::from_utf8(bytes)
        .map_err(|e| ParseError::UnparsableDocument(format!("invalid UTF-8: {e}")))?;
    if text.trim().is_empty() {
        return Err(ParseError::UnparsableDocument("empty document".into()));
    }
    let tree = parse_tree(text)?;
    let doc = model_from_tree(tree, source_name)?;
    Ok(map_lines(bytes, doc))
}

fn parse_tree(text: &str) -> Result<Value, ParseError> {
    let text = text.trim_start_matches('\u{feff}');
    match sniff_format(text) {
        SourceFormat::Json => {
            serde_json::from_str(text).map_err(|e| ParseError::UnparsableDocument(e.to_string()))
        }
        SourceFormat::Yaml => {
            let yaml: serde_yaml::Value =
                serde_yaml::from_str(text).map_err(|e| ParseError::UnparsableDocument(e.to_string()))?;
            Ok(yaml_to_json(yaml))
        }
    }
}

fn yaml_key(key: serde_yaml::Value) -> String {
    match key {
        serde_yaml::Value::String(s) => s,
        serde_yaml::Value::Number(n) => n.to_string(),
        serde_yaml::Value::Bool(b) => b.to_string(),
        serde_yaml::Value::Null => "null".into(),
        other => serde_yaml::to_string(&other)
            .unwrap_or_default()
            .trim()
            .to_string(),
    }
}

fn yaml_to_json(value: serde_yaml::Value) -> Value {
    use serde_yaml::Value as Y;
    match value {
        Y::Null => Value::Null,
        Y::Bool(b) => Value::Bool(b),
        Y::Number(n) => {
            if let Some(i) = n.as_i64() {
                Value::from(i)
            } else if let Some(u) = n.as_u64() {
                Value::from(u)
            } else {
                n.as_f64()
                    .and_then(serde_json::Number::from_f64)
                    .map(Value::Number)
                    .unwrap_or(Value::Null)
            }
        }
        Y::String(s) => Value::String(s),
        Y::Sequence(seq) => Value::Array(seq.into_iter().map(yaml_to_json).collect()),
        Y::Mapping(map) => Value::Object(
            map.into_iter()
                .map(|(k, v)| (yaml_key(k), yaml_to_json(v)))
                .collect(),
        ),
        Y::Tagged(tagged) => yaml_to_json(tagged.value),
    }
}

fn detect_version(root: &Map<String, Value>) -> Option<SpecVersion> {
    let as_text = |v: &Value| match v {
        Value::String(s) => Some(s.trim().to_string()),
        Value::Number(n) => Some(n.to_string()),
        _ => None,
    };
    if let Some(v) = root.get("openapi").and_then(as_text) {
        if v.starts_with("3.1") {
            return Some(SpecVersion::V31);
        }
        if v.starts_with('3') {
            return Some(SpecVersion::V30);
        }
    }
    if let Some(v) = root.get("swagger").and_then(as_text) {
        if v.starts_with('2') {
            return Some(SpecVersion::V2);
        }
    }
    None
}

fn security_names(value: Option<&Value>) -> Vec<String> {
    let mut names = Vec::new();
    if let Some(Value::Array(reqs)) = value {
        for req in reqs {
            if let Value::Object(map) = req {
                for name in map.keys() {
                    if !names.contains(name) {
                        names.push(name.clone());
                    }
                }
            }
        }
    }
    names
}

fn string_field(value: &Value, key: &str) -> Option<String> {
    value.get(key).and_then(Value::as_str).map(str::to_string)
}

fn content_keys(value: &Value) -> Vec<String> {
    value
        .get("content")
        .and_then(Value::as_object)
        .map(|m| m.keys().cloned().collect())
        .unwrap_or_default()
}

fn valid_status_key(key: &str) -> bool {
    key == "default"
        || (key.len() == 3
            && key.bytes().all(|b| b.is_ascii_digit())
            && (100..=599).contains(&key.parse::<u16>().unwrap_or(0)))
}

struct Builder<'a> {
    root: &'a Value,
    unresolved: Vec<String>,
    warnings: Vec<String>,
}

impl<'a> Builder<'a> {
    fn note_unresolved(&mut self, target: String) {
        if !self.unresolved.contains(&target) {
            self.unresolved.push(target);
        }
    }

    fn components(&self) -> Components {
        let names = |kind: &str| {
            self.root
                .pointer(&format!("/components/{kind}"))
                .and_then(Value::as_object)
                .map(|m| m.keys().cloned().collect())
                .unwrap_or_default()
        };
        Components {
            schemas: names("schemas"),
            responses: names("responses"),
            parameters: names("parameters"),
            request_bodies: names("requestBodies"),
            security_schemes: names("securitySchemes"),
        }
    }

    fn response(&mut self, status_key: &str, raw: &'a Value) -> ResponseEntry {
        let resolved = resolve(self.root, raw);
        if let Some(target) = resolved.unresolved.clone() {
            self.note_unresolved(target);
        }
        let value = resolved.value;
        ResponseEntry {
            status_key: status_key.to_string(),
            description: value.and_then(|v| string_field(v, "description")),
            content_types: value.map(content_keys).unwrap_or_default(),
            resolved_via_reference: resolved.via_ref && value.is_some(),
            unresolved: value.is_none(),
        }
    }

    fn operation(
        &mut self,
        template: &str,
        method: HttpMethod,
        raw: &'a Value,
        global_security: &[String],
    ) -> OperationEntry {
        let (has_request_body, request_content_types, request_body_unresolved) = match raw.get("requestBody")
        {
            None | Some(Value::Null) => (false, Vec::new(), false),
            Some(body) => {
                let resolved = resolve(self.root, body);
                if let Some(target) = resolved.unresolved.clone() {
                    self.note_unresolved(target);
                }
                let types = resolved.value.map(content_keys).unwrap_or_default();
                (true, types, resolved.value.is_none())
            }
        };

        let mut responses = BTreeMap::new();
        let raw_responses = raw.get("responses").map(|r| resolve(self.root, r).value);
        if let Some(Some(Value::Object(map))) = raw_responses {
            for (key, value) in map {
                if key.starts_with("x-") {
                    continue;
                }
                if !valid_status_key(key) {
                    self.warnings.push(format!(
                        "{} {template}: ignored response key {key:?}",
                        method.as_str()
                    ));
                    continue;
                }
                let entry = self.response(key, value);
                responses.insert(key.clone(), entry);
            }
        }

        let security_schemes = match raw.get("security") {
            Some(v @ Value::Array(_)) => security_names(Some(v)),
            _ => global_security.to_vec(),
        };

        OperationEntry {
            method,
            summary: string_field(raw, "summary"),
            description: string_field(raw, "description"),
            has_request_body,
            request_content_types,
            request_body_unresolved,
            responses,
            security_schemes,
            line: 0,
        }
    }
}

pub(crate) fn model_from_tree(tree: Value, source_name: &str) -> Result<ApiDocument, ParseError> {
    let version = match &tree {
        Value::Object(map) => detect_version(map).ok_or(ParseError::NotAnOpenApiDocument)?,
        _ => return Err(ParseError::NotAnOpenApiDocument),
    };
    let (tree, mut warnings) = if version == SpecVersion::V2 {
        convert_v2(&tree)
    } else {
        (tree, Vec::new())
    };

    let mut builder = Builder {
        root: &tree,
        unresolved: Vec::new(),
        warnings: Vec::new(),
    };
    let components = builder.components();
    let global_security = security_names(tree.get("security"));

    let mut paths = Vec::new();
    if let Some(Value::Object(map)) = tree.get("paths") {
        for (template, item) in map {
            if template.starts_with("x-") {
                continue;
            }
            if !template.starts_with('/') {
                builder
                    .warnings
                    .push(format!("ignored path key {template:?}: does not start with '/'"));
                continue;
            }
            let item = if ref_target(item).is_some() {
                let resolved = resolve(&tree, item);
                if let Some(target) = resolved.unresolved {
                    builder.note_unresolved(target);
                }
                resolved.value.unwrap_or(&Value::Null)
            } else {
                item
            };
            let mut entry = PathEntry::new(template.clone());
            for method in HttpMethod::ALL {
                if let Some(op @ Value::Object(_)) = item.get(method.key()) {
                    let op = builder.operation(template, method, op, &global_security);
                    entry.operations.insert(method, op);
                }
            }
            paths.push(entry);
        }
    }

    warnings.append(&mut builder.warnings);
    Ok(ApiDocument {
        source_name: source_name.to_string(),
        spec_version: version,
        paths,
        components,
        global_security,
        unresolved_refs: builder.unresolved,
        warnings,
    })
}
