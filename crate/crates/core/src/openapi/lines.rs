//! Source line lookup for path and operation keys.
//!
//! The parser does not keep positions, so keys are located by scanning the
//! source text. Paths are searched in document order starting after the
//! previous match, so lines come out increasing for well-formed documents.
//! Duplicate keys resolve to the first occurrence; keys that cannot be found
//! get line 0.

use super::parse::{sniff_format, SourceFormat};
use super::ApiDocument;

struct Source<'a> {
    text: &'a str,
    format: SourceFormat,
    /// Byte offset at which each line starts.
    line_starts: Vec<usize>,
}

impl<'a> Source<'a> {
    fn new(text: &'a str) -> Self {
        let line_starts = std::iter::once(0)
            .chain(text.match_indices('\n').map(|(i, _)| i + 1))
            .collect();
        Source {
            text,
            format: sniff_format(text),
            line_starts,
        }
    }

    fn line_of(&self, offset: usize) -> u32 {
        match self.line_starts.binary_search(&offset) {
            Ok(i) => i as u32 + 1,
            Err(i) => i as u32,
        }
    }

    /// Offset of the first occurrence of `key` in key position within
    /// `[from, to)`, returning the span of the match.
    fn find_key(&self, key: &str, from: usize, to: usize) -> Option<(usize, usize)> {
        let hay = &self.text[..to];
        match self.format {
            SourceFormat::Json => {
                let quoted = format!("\"{}\"", json_escape(key));
                let mut pos = from;
                while let Some(i) = hay.get(pos..).and_then(|h| h.find(&quoted)) {
                    let start = pos + i;
                    let end = start + quoted.len();
                    let rest = hay[end..].trim_start();
                    if rest.starts_with(':') {
                        return Some((start, end));
                    }
                    pos = end;
                }
                None
            }
            SourceFormat::Yaml => {
                let forms = [
                    key.to_string(),
                    format!("'{}'", key.replace('\'', "''")),
                    format!("\"{}\"", json_escape(key)),
                ];
                let mut best: Option<(usize, usize)> = None;
                for form in &forms {
                    let mut pos = from;
                    while let Some(i) = hay.get(pos..).and_then(|h| h.find(form.as_str())) {
                        let start = pos + i;
                        let end = start + form.len();
                        if self.yaml_key_at(start, end) {
                            if best.is_none_or(|(b, _)| start < b) {
                                best = Some((start, end));
                            }
                            break;
                        }
                        pos = end;
                    }
                }
                best
            }
        }
    }

    fn yaml_key_at(&self, start: usize, end: usize) -> bool {
        let line_start = self.text[..start].rfind('\n').map_or(0, |i| i + 1);
        let before = &self.text[line_start..start];
        let indent_only =
            before.chars().all(|c| c == ' ' || c == '\t') || before.trim_start().trim_end() == "?";
        if !indent_only {
            return false;
        }
        let rest = &self.text[end..];
        let rest = rest.trim_start_matches([' ', '\t']);
        match rest.strip_prefix(':') {
            Some(after) => after.is_empty() || after.starts_with([' ', '\t', '\n', '\r']),
            None => false,
        }
    }
}

fn json_escape(s: &str) -> String {
    let quoted = serde_json::to_string(s).unwrap_or_default();
    quoted[1..quoted.len() - 1].to_string()
}

/// Sets `line` on every path and operation of `document` from `bytes`.
pub fn map_lines(bytes: &[u8], mut document: ApiDocument) -> ApiDocument {
    let text = String::from_utf8_lossy(bytes);
    let src = Source::new(&text);
    let len = text.len();

    let paths_start = src.find_key("paths", 0, len).map_or(0, |(_, end)| end);

    let mut spans: Vec<Option<(usize, usize)>> = Vec::with_capacity(document.paths.len());
    let mut cursor = paths_start;
    for path in &document.paths {
        let found = src
            .find_key(&path.template, cursor, len)
            .or_else(|| src.find_key(&path.template, paths_start, len));
        if let Some((_, end)) = found {
            cursor = cursor.max(end);
        }
        spans.push(found);
    }

    // An operation key is searched between its path key and the next path key
    // found after it.
    let mut starts: Vec<usize> = spans.iter().flatten().map(|(s, _)| *s).collect();
    starts.sort_unstable();

    for (path, span) in document.paths.iter_mut().zip(&spans) {
        let Some((start, end)) = *span else {
            path.line = 0;
            path.operations.values_mut().for_each(|op| op.line = 0);
            continue;
        };
        path.line = src.line_of(start);
        let limit = starts.iter().copied().find(|&s| s > start).unwrap_or(len);
        for (method, op) in path.operations.iter_mut() {
            op.line = src
                .find_key(method.key(), end, limit)
                .map_or(0, |(s, _)| src.line_of(s));
        }
    }
    document
}
