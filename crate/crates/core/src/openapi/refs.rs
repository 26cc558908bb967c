use serde_json::Value;

/// Longest `$ref` chain followed before the target is declared unresolved.
pub const MAX_REF_DEPTH: usize = 8;

#[derive(Debug)]
pub(crate) struct Resolved<'a> {
    /// The first non-reference value in the chain, when reachable.
    pub value: Option<&'a Value>,
    pub via_ref: bool,
    /// The reference that could not be followed.
    pub unresolved: Option<String>,
}

pub(crate) fn ref_target(value: &Value) -> Option<&str> {
    value.get("$ref").and_then(Value::as_str)
}

/// Follows local `#/...` references from `value` through `root`.
pub(crate) fn resolve<'a>(root: &'a Value, value: &'a Value) -> Resolved<'a> {
    let mut current = value;
    let mut hops = 0;
    while let Some(target) = ref_target(current) {
        if hops == MAX_REF_DEPTH {
            return Resolved {
                value: None,
                via_ref: true,
                unresolved: Some(target.to_string()),
            };
        }
        let next = target.strip_prefix('#').and_then(|pointer| root.pointer(pointer));
        match next {
            Some(v) => {
                current = v;
                hops += 1;
            }
            None => {
                return Resolved {
                    value: None,
                    via_ref: true,
                    unresolved: Some(target.to_string()),
                }
            }
        }
    }
    Resolved {
        value: Some(current),
        via_ref: hops > 0,
        unresolved: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    fn chain(len: usize) -> Value {
        let mut responses = serde_json::Map::new();
        for i in 0..len {
            responses.insert(
                format!("R{i}"),
                json!({"$ref": format!("#/components/responses/R{}", i + 1)}),
            );
        }
        responses.insert(format!("R{len}"), json!({"description": "end"}));
        json!({"components": {"responses": responses}})
    }

    #[test]
    fn follows_chain_up_to_depth_cap() {
        let root = chain(MAX_REF_DEPTH);
        let start = json!({"$ref": "#/components/responses/R1"});
        let r = resolve(&root, &start);
        assert!(r.value.is_some());
        assert!(r.via_ref);

        let start = json!({"$ref": "#/components/responses/R0"});
        let r = resolve(&root, &start);
        assert!(r.value.is_none());
        assert!(r.unresolved.is_some());
    }

    #[test]
    fn cyclic_references_terminate() {
        let root = json!({"a": {"$ref": "#/b"}, "b": {"$ref": "#/a"}});
        let r = resolve(&root, &root["a"]);
        assert!(r.value.is_none());
        assert_eq!(r.unresolved.as_deref().map(|s| s.starts_with("#/")), Some(true));
    }

    #[test]
    fn missing_and_remote_targets_are_unresolved() {
        let root = json!({});
        let missing = json!({"$ref": "#/components/responses/Nope"});
        assert_eq!(
            resolve(&root, &missing).unresolved.as_deref(),
            Some("#/components/responses/Nope")
        );
        let remote = json!({"$ref": "other.yaml#/x"});
        assert!(resolve(&root, &remote).value.is_none());
    }

    #[test]
    fn plain_value_is_returned_directly() {
        let root = json!({});
        let v = json!({"description": "ok"});
        let r = resolve(&root, &v);
        assert!(!r.via_ref);
        assert_eq!(r.value, Some(&v));
    }
}
