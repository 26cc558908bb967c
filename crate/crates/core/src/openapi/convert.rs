//! Minimal OpenAPI 2.0 → 3.0 tree conversion.
//!
//! Only the parts the rules consume are translated: paths, parameters,
//! bodies, `consumes`/`produces`, responses, definitions, and security.
//! Vendor extensions are carried through untouched.

use serde_json::{json, Map, Value};

const METHODS: [&str; 7] = ["get", "put", "post", "delete", "options", "head", "patch"];

fn rewrite_ref(target: &str) -> String {
    for (from, to) in [
        ("#/definitions/", "#/components/schemas/"),
        ("#/responses/", "#/components/responses/"),
        ("#/parameters/", "#/components/parameters/"),
    ] {
        if let Some(rest) = target.strip_prefix(from) {
            return format!("{to}{rest}");
        }
    }
    target.to_string()
}

/// Rewrites every 2.0-style `$ref` in `value` to its 3.0 location.
fn rewrite_refs(value: &mut Value) {
    match value {
        Value::Object(map) => {
            for (key, v) in map.iter_mut() {
                if key == "$ref" {
                    if let Value::String(s) = v {
                        *s = rewrite_ref(s);
                    }
                } else {
                    rewrite_refs(v);
                }
            }
        }
        Value::Array(items) => items.iter_mut().for_each(rewrite_refs),
        _ => {}
    }
}

fn string_list(value: Option<&Value>) -> Option<Vec<String>> {
    value.and_then(Value::as_array).map(|items| {
        items
            .iter()
            .filter_map(Value::as_str)
            .map(str::to_string)
            .collect()
    })
}

fn media_map(types: &[String], schema: Option<&Value>) -> Value {
    let mut content = Map::new();
    for t in types {
        let mut media = Map::new();
        if let Some(s) = schema {
            media.insert("schema".into(), s.clone());
        }
        content.insert(t.clone(), Value::Object(media));
    }
    Value::Object(content)
}

fn copy_extensions(from: &Map<String, Value>, to: &mut Map<String, Value>) {
    for (k, v) in from {
        if k.starts_with("x-") {
            to.insert(k.clone(), v.clone());
        }
    }
}

fn convert_response(raw: &Value, produces: &[String]) -> Value {
    if raw.get("$ref").is_some() {
        return raw.clone();
    }
    let Some(obj) = raw.as_object() else {
        return raw.clone();
    };
    let mut out = Map::new();
    out.insert(
        "description".into(),
        obj.get("description").cloned().unwrap_or_else(|| json!("")),
    );
    if let Some(schema) = obj.get("schema") {
        out.insert("content".into(), media_map(produces, Some(schema)));
    }
    if let Some(headers) = obj.get("headers") {
        out.insert("headers".into(), headers.clone());
    }
    copy_extensions(obj, &mut out);
    Value::Object(out)
}

fn convert_parameter(param: &Map<String, Value>) -> Value {
    let mut out = Map::new();
    for key in [
        "name",
        "in",
        "description",
        "required",
        "deprecated",
        "allowEmptyValue",
    ] {
        if let Some(v) = param.get(key) {
            out.insert(key.into(), v.clone());
        }
    }
    let mut schema = Map::new();
    for key in [
        "type",
        "format",
        "items",
        "enum",
        "default",
        "minimum",
        "maximum",
        "pattern",
        "minLength",
        "maxLength",
    ] {
        if let Some(v) = param.get(key) {
            schema.insert(key.into(), v.clone());
        }
    }
    if !schema.is_empty() {
        out.insert("schema".into(), Value::Object(schema));
    }
    copy_extensions(param, &mut out);
    Value::Object(out)
}

struct Converter<'a> {
    root: &'a Value,
    global_consumes: Vec<String>,
    global_produces: Vec<String>,
    warnings: Vec<String>,
}

impl<'a> Converter<'a> {
    /// Resolves a 2.0 parameter reference within the source tree.
    fn parameter(&mut self, raw: &'a Value, context: &str) -> Option<&'a Map<String, Value>> {
        let mut current = raw;
        for _ in 0..super::MAX_REF_DEPTH {
            match current.get("$ref").and_then(Value::as_str) {
                Some(target) => match target.strip_prefix('#').and_then(|p| self.root.pointer(p)) {
                    Some(v) => current = v,
                    None => {
                        self.warnings
                            .push(format!("{context}: dropped unresolvable parameter {target}"));
                        return None;
                    }
                },
                None => return current.as_object(),
            }
        }
        self.warnings.push(format!(
            "{context}: dropped parameter with over-deep reference chain"
        ));
        None
    }

    fn operation(&mut self, raw: &'a Map<String, Value>, context: &str, path_params: &[&'a Value]) -> Value {
        let mut out = Map::new();
        for key in [
            "tags",
            "summary",
            "description",
            "operationId",
            "deprecated",
            "security",
        ] {
            if let Some(v) = raw.get(key) {
                out.insert(key.into(), v.clone());
            }
        }
        copy_extensions(raw, &mut out);

        let consumes = string_list(raw.get("consumes")).unwrap_or_else(|| self.global_consumes.clone());
        let produces = string_list(raw.get("produces")).unwrap_or_else(|| self.global_produces.clone());

        let mut params = Vec::new();
        let mut body: Option<Value> = None;
        let mut form_fields = Map::new();
        let op_params: Vec<&Value> = raw
            .get("parameters")
            .and_then(Value::as_array)
            .map(|a| a.iter().collect())
            .unwrap_or_default();
        for raw_param in path_params.iter().copied().chain(op_params) {
            let Some(param) = self.parameter(raw_param, context) else {
                continue;
            };
            match param.get("in").and_then(Value::as_str) {
                Some("body") => {
                    let schema = param.get("schema").cloned().unwrap_or_else(|| json!({}));
                    let mut rb = Map::new();
                    rb.insert("content".into(), media_map(&consumes, Some(&schema)));
                    if let Some(d) = param.get("description") {
                        rb.insert("description".into(), d.clone());
                    }
                    if let Some(r) = param.get("required") {
                        rb.insert("required".into(), r.clone());
                    }
                    body = Some(Value::Object(rb));
                }
                Some("formData") => {
                    let name = param
                        .get("name")
                        .and_then(Value::as_str)
                        .unwrap_or("field")
                        .to_string();
                    form_fields.insert(
                        name,
                        convert_parameter(param)
                            .get("schema")
                            .cloned()
                            .unwrap_or(json!({})),
                    );
                }
                Some("query" | "header" | "path" | "cookie") => params.push(convert_parameter(param)),
                other => self.warnings.push(format!(
                    "{context}: dropped parameter with unsupported location {}",
                    other.unwrap_or("<missing>")
                )),
            }
        }
        if body.is_none() && !form_fields.is_empty() {
            let types: Vec<String> = consumes.iter().filter(|t| t.contains("form")).cloned().collect();
            let types = if types.is_empty() {
                vec!["application/x-www-form-urlencoded".to_string()]
            } else {
                types
            };
            let schema = json!({"type": "object", "properties": Value::Object(form_fields)});
            body = Some(json!({"content": media_map(&types, Some(&schema))}));
        }
        if !params.is_empty() {
            out.insert("parameters".into(), Value::Array(params));
        }
        if let Some(b) = body {
            out.insert("requestBody".into(), b);
        }

        let mut responses = Map::new();
        if let Some(Value::Object(raw_responses)) = raw.get("responses") {
            for (code, resp) in raw_responses {
                if code.starts_with("x-") {
                    responses.insert(code.clone(), resp.clone());
                } else {
                    responses.insert(code.clone(), convert_response(resp, &produces));
                }
            }
        }
        out.insert("responses".into(), Value::Object(responses));
        Value::Object(out)
    }
}

/// Converts a Swagger 2.0 tree into an OpenAPI 3.0 tree.
///
/// Returns the converted tree and warnings for constructs that were dropped.
pub fn convert_v2(document: &Value) -> (Value, Vec<String>) {
    let empty = Map::new();
    let root = document.as_object().unwrap_or(&empty);
    let mut conv = Converter {
        root: document,
        global_consumes: string_list(root.get("consumes")).unwrap_or_default(),
        global_produces: string_list(root.get("produces")).unwrap_or_default(),
        warnings: Vec::new(),
    };

    let mut out = Map::new();
    out.insert("openapi".into(), json!("3.0.3"));
    if let Some(info) = root.get("info") {
        out.insert("info".into(), info.clone());
    }
    if let Some(host) = root.get("host").and_then(Value::as_str) {
        let base = root.get("basePath").and_then(Value::as_str).unwrap_or("");
        let schemes = string_list(root.get("schemes")).unwrap_or_else(|| vec!["https".into()]);
        let servers: Vec<Value> = schemes
            .iter()
            .map(|s| json!({"url": format!("{s}://{host}{base}")}))
            .collect();
        out.insert("servers".into(), Value::Array(servers));
    } else if let Some(base) = root.get("basePath") {
        out.insert("servers".into(), json!([{"url": base}]));
    }
    for key in ["security", "tags", "externalDocs"] {
        if let Some(v) = root.get(key) {
            out.insert(key.into(), v.clone());
        }
    }
    copy_extensions(root, &mut out);

    let mut paths = Map::new();
    if let Some(Value::Object(raw_paths)) = root.get("paths") {
        for (template, item) in raw_paths {
            let Some(item) = item.as_object() else {
                if !template.starts_with("x-") {
                    conv.warnings
                        .push(format!("{template}: dropped non-object path item"));
                }
                continue;
            };
            let path_params: Vec<&Value> = item
                .get("parameters")
                .and_then(Value::as_array)
                .map(|a| a.iter().collect())
                .unwrap_or_default();
            let mut new_item = Map::new();
            copy_extensions(item, &mut new_item);
            if let Some(r) = item.get("$ref") {
                new_item.insert("$ref".into(), r.clone());
            }
            for method in METHODS {
                if let Some(Value::Object(op)) = item.get(method) {
                    let context = format!("{} {template}", method.to_uppercase());
                    let converted = conv.operation(op, &context, &path_params);
                    new_item.insert(method.into(), converted);
                }
            }
            paths.insert(template.clone(), Value::Object(new_item));
        }
    }
    out.insert("paths".into(), Value::Object(paths));

    let mut components = Map::new();
    if let Some(defs) = root.get("definitions") {
        components.insert("schemas".into(), defs.clone());
    }
    if let Some(Value::Object(resps)) = root.get("responses") {
        let produces = conv.global_produces.clone();
        let converted: Map<String, Value> = resps
            .iter()
            .map(|(k, v)| (k.clone(), convert_response(v, &produces)))
            .collect();
        components.insert("responses".into(), Value::Object(converted));
    }
    if let Some(Value::Object(params)) = root.get("parameters") {
        let converted: Map<String, Value> = params
            .iter()
            .filter(|(_, v)| v.get("in").and_then(Value::as_str) != Some("body"))
            .map(|(k, v)| {
                (
                    k.clone(),
                    v.as_object().map(convert_parameter).unwrap_or(Value::Null),
                )
            })
            .collect();
        components.insert("parameters".into(), Value::Object(converted));
    }
    if let Some(sec) = root.get("securityDefinitions") {
        components.insert("securitySchemes".into(), sec.clone());
    }
    if !components.is_empty() {
        out.insert("components".into(), Value::Object(components));
    }

    let mut tree = Value::Object(out);
    rewrite_refs(&mut tree);
    (tree, conv.warnings)
}
