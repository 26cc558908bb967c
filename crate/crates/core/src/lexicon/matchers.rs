use super::{is_template, split_words, Lexicon};

/// Representation-format names recognized as extensions without a dot.
pub const DOTLESS_FORMATS: &[&str] = &["html", "json", "xml", "csv", "pdf", "txt", "yaml"];

impl Lexicon {
    /// The file extension carried by a raw path segment, if any.
    ///
    /// Matches a known dot-suffix (`report.json`) or a segment that is
    /// exactly a format name (`html`). Namespace-style tokens such as
    /// `Microsoft.Sql`, where both sides are capitalized, never match.
    pub fn match_extension(&self, segment: &str) -> Option<String> {
        if segment.is_empty() || is_template(segment) {
            return None;
        }
        if let Some((prefix, suffix)) = segment.rsplit_once('.') {
            if suffix.is_empty() || suffix.chars().all(|c| c.is_ascii_digit()) {
                return None;
            }
            let head = prefix.rsplit('.').next().unwrap_or(prefix);
            let capitalized = |s: &str| s.chars().next().is_some_and(char::is_uppercase);
            if capitalized(head) && capitalized(suffix) {
                return None;
            }
            let ext = suffix.to_lowercase();
            return self.extensions.contains(&ext).then_some(ext);
        }
        let lower = segment.to_lowercase();
        DOTLESS_FORMATS.contains(&lower.as_str()).then_some(lower)
    }

    /// The CRUD verb a path segment encodes, if any.
    ///
    /// Each word of the segment (after camelCase and separator splitting) is
    /// checked for a CRUD token prefix unless it is an allowlisted compound
    /// noun. Run-together words outside the dictionary are segmented first.
    pub fn match_crud(&self, segment: &str) -> Option<String> {
        if segment.is_empty() || is_template(segment) {
            return None;
        }
        for word in split_words(segment) {
            if let Some(token) = self.crud_prefix(&word) {
                return Some(token);
            }
            if self.frequency.contains(&word) {
                continue;
            }
            if let Ok(seg) = self.segment(&word) {
                if seg.residual || seg.words.len() < 2 {
                    continue;
                }
                if let Some(token) = seg.words.iter().find_map(|w| self.crud_prefix(w)) {
                    return Some(token);
                }
            }
        }
        None
    }

    fn crud_prefix(&self, word: &str) -> Option<String> {
        if self.crud_allowlist.contains(word) {
            return None;
        }
        self.crud
            .iter()
            .find(|token| word.starts_with(token.as_str()))
            .cloned()
    }
}
