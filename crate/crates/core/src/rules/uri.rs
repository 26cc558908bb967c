use crate::lexicon::{split_words, strip_templates, GrammaticalNumber, Lexicon};
use crate::openapi::{ApiDocument, HttpMethod, PathEntry};

use super::segments::{classify_segments, has_verb, is_post_only, number_of_segment, SegmentKind};
use super::{RuleChecker, RuleContext, RuleId, Violation};

fn path_violation(rule: RuleId, path: &PathEntry, message: String, evidence: &str) -> Violation {
    Violation::new(rule, &path.template, None, path.line, message, evidence)
}

fn literal_segments(path: &PathEntry) -> impl Iterator<Item = &str> {
    path.segments
        .iter()
        .filter(|s| !s.is_template)
        .map(|s| s.text.as_str())
}

pub struct PluralNoun;

impl RuleChecker for PluralNoun {
    fn id(&self) -> RuleId {
        RuleId::PluralNoun
    }

    fn check(&self, doc: &ApiDocument, ctx: &RuleContext<'_>) -> Vec<Violation> {
        let mut out = Vec::new();
        for path in &doc.paths {
            let classes = classify_segments(path, ctx.lexicon);
            for c in classes.iter().filter(|c| c.class == SegmentKind::Collection) {
                if number_of_segment(ctx.lexicon, &c.segment) == GrammaticalNumber::Singular {
                    out.push(path_violation(
                        self.id(),
                        path,
                        format!("collection '{}' is named with a singular noun", c.segment),
                        &c.segment,
                    ));
                }
            }
            let broken = classes
                .windows(2)
                .find(|w| w[0].class == SegmentKind::Collection && w[1].class == SegmentKind::Collection);
            if let Some(w) = broken {
                let evidence = format!("{}/{}", w[0].segment, w[1].segment);
                out.push(path_violation(
                    self.id(),
                    path,
                    format!("collections '{evidence}' are not separated by a document or parameter"),
                    &evidence,
                ));
            }
        }
        out
    }
}

pub struct SingularNoun;

impl RuleChecker for SingularNoun {
    fn id(&self) -> RuleId {
        RuleId::SingularNoun
    }

    fn check(&self, doc: &ApiDocument, ctx: &RuleContext<'_>) -> Vec<Violation> {
        let mut out = Vec::new();
        for path in &doc.paths {
            for c in classify_segments(path, ctx.lexicon) {
                if c.class == SegmentKind::Document
                    && number_of_segment(ctx.lexicon, &c.segment) == GrammaticalNumber::Plural
                {
                    out.push(path_violation(
                        self.id(),
                        path,
                        format!("document '{}' is named with a plural noun", c.segment),
                        &c.segment,
                    ));
                }
            }
        }
        out
    }
}

/// Flags the final literal of a POST-only path that sits below a document
/// or parameter, is not a plural (sub-collection) name, and has no verb.
pub struct VerbController;

impl RuleChecker for VerbController {
    fn id(&self) -> RuleId {
        RuleId::VerbController
    }

    fn check(&self, doc: &ApiDocument, ctx: &RuleContext<'_>) -> Vec<Violation> {
        let mut out = Vec::new();
        for path in doc.paths.iter().filter(|p| is_post_only(p)) {
            let classes = classify_segments(path, ctx.lexicon);
            let [.., prev, last] = classes.as_slice() else {
                continue;
            };
            let below_resource = matches!(prev.class, SegmentKind::TemplateParameter | SegmentKind::Document);
            if !below_resource || last.class != SegmentKind::Document {
                continue;
            }
            if has_verb(ctx.lexicon, &last.segment)
                || number_of_segment(ctx.lexicon, &last.segment) == GrammaticalNumber::Plural
            {
                continue;
            }
            let line = path.operations[&HttpMethod::Post].line;
            out.push(Violation::new(
                self.id(),
                &path.template,
                Some(HttpMethod::Post),
                if line == 0 { path.line } else { line },
                format!("controller '{}' is not named with a verb", last.segment),
                &last.segment,
            ));
        }
        out
    }
}

pub struct NoTrailingSlash;

impl RuleChecker for NoTrailingSlash {
    fn id(&self) -> RuleId {
        RuleId::NoTrailingSlash
    }

    fn check(&self, doc: &ApiDocument, _ctx: &RuleContext<'_>) -> Vec<Violation> {
        doc.paths
            .iter()
            .filter(|p| p.template.len() > 1 && p.template.ends_with('/'))
            .map(|p| path_violation(self.id(), p, "path ends with a trailing slash".into(), "/"))
            .collect()
    }
}

const HIERARCHY_SEPARATORS: &[char] = &['.', ',', ';', ':', '|'];

fn is_dictionary_phrase(lexicon: &Lexicon, part: &str) -> bool {
    if part.contains('{') {
        return false;
    }
    let words = split_words(part);
    !words.is_empty() && words.iter().all(|w| lexicon.frequency().contains(w))
}

/// `Microsoft.Sql`, `Azure.Storage.Blob`: every dot-joined token capitalized.
fn is_namespace_style(segment: &str) -> bool {
    segment.contains('.')
        && segment
            .split('.')
            .all(|t| t.chars().next().is_some_and(char::is_uppercase))
}

pub struct ForwardSlash;

impl RuleChecker for ForwardSlash {
    fn id(&self) -> RuleId {
        RuleId::ForwardSlash
    }

    fn check(&self, doc: &ApiDocument, ctx: &RuleContext<'_>) -> Vec<Violation> {
        let mut out = Vec::new();
        for path in &doc.paths {
            for seg in literal_segments(path) {
                if !seg.contains(HIERARCHY_SEPARATORS)
                    || is_namespace_style(seg)
                    || ctx.lexicon.match_extension(seg).is_some()
                {
                    continue;
                }
                let mut parts = Vec::new();
                let mut rest = seg;
                while let Some(i) = rest.find(HIERARCHY_SEPARATORS) {
                    parts.push((&rest[..i], rest[i..].chars().next().unwrap()));
                    rest = &rest[i + 1..];
                }
                parts.push((rest, '/'));
                let joined = parts.windows(2).find(|w| {
                    is_dictionary_phrase(ctx.lexicon, w[0].0) && is_dictionary_phrase(ctx.lexicon, w[1].0)
                });
                if let Some(w) = joined {
                    out.push(path_violation(
                        self.id(),
                        path,
                        format!(
                            "segment '{seg}' uses '{}' where '/' should separate '{}' and '{}'",
                            w[0].1, w[0].0, w[1].0
                        ),
                        seg,
                    ));
                }
            }
        }
        out
    }
}

pub struct NoFileExtensions;

impl RuleChecker for NoFileExtensions {
    fn id(&self) -> RuleId {
        RuleId::NoFileExtensions
    }

    fn check(&self, doc: &ApiDocument, ctx: &RuleContext<'_>) -> Vec<Violation> {
        let mut out = Vec::new();
        for path in &doc.paths {
            for seg in &path.segments {
                if let Some(ext) = ctx.lexicon.match_extension(&seg.text) {
                    out.push(path_violation(
                        self.id(),
                        path,
                        format!("segment '{}' carries the file extension '{ext}'", seg.text),
                        &seg.text,
                    ));
                }
            }
        }
        out
    }
}

pub struct NoCrudNames;

impl RuleChecker for NoCrudNames {
    fn id(&self) -> RuleId {
        RuleId::NoCrudNames
    }

    fn check(&self, doc: &ApiDocument, ctx: &RuleContext<'_>) -> Vec<Violation> {
        let mut out = Vec::new();
        for path in &doc.paths {
            for seg in literal_segments(path) {
                if let Some(token) = ctx.lexicon.match_crud(seg) {
                    out.push(path_violation(
                        self.id(),
                        path,
                        format!("segment '{seg}' names the CRUD operation '{token}'"),
                        &token,
                    ));
                }
            }
        }
        out
    }
}

/// Names inside `{...}` spans of a segment.
fn parameter_names(segment: &str) -> impl Iterator<Item = &str> {
    segment
        .split('{')
        .skip(1)
        .filter_map(|s| s.split_once('}').map(|(name, _)| name))
}

pub struct NoUnderscores;

impl RuleChecker for NoUnderscores {
    fn id(&self) -> RuleId {
        RuleId::NoUnderscores
    }

    fn check(&self, doc: &ApiDocument, _ctx: &RuleContext<'_>) -> Vec<Violation> {
        let mut out = Vec::new();
        for path in &doc.paths {
            let literal = path
                .segments
                .iter()
                .map(|s| strip_templates(&s.text))
                .find(|s| s.contains('_'));
            if let Some(seg) = literal {
                out.push(path_violation(
                    self.id(),
                    path,
                    format!("segment '{seg}' contains an underscore"),
                    &seg,
                ));
            }
            let param = path
                .segments
                .iter()
                .flat_map(|s| parameter_names(&s.text))
                .find(|n| n.contains('_'));
            if let Some(name) = param {
                out.push(path_violation(
                    self.id(),
                    path,
                    format!("path parameter '{{{name}}}' contains an underscore"),
                    name,
                ));
            }
        }
        out
    }
}

pub struct Hyphens;

impl RuleChecker for Hyphens {
    fn id(&self) -> RuleId {
        RuleId::Hyphens
    }

    fn check(&self, doc: &ApiDocument, ctx: &RuleContext<'_>) -> Vec<Violation> {
        let mut out = Vec::new();
        for path in &doc.paths {
            for seg in literal_segments(path) {
                let text = strip_templates(seg);
                if text.contains('-') {
                    continue;
                }
                let words = split_words(&text);
                let [chunk] = words.as_slice() else {
                    continue;
                };
                if ctx.lexicon.frequency().contains(chunk) {
                    continue;
                }
                let Ok(s) = ctx.lexicon.segment(chunk) else {
                    continue;
                };
                if s.words.len() >= 2 && !s.residual {
                    let hyphenated = s.words.join("-");
                    out.push(path_violation(
                        self.id(),
                        path,
                        format!("segment '{seg}' joins several words; consider '{hyphenated}'"),
                        seg,
                    ));
                }
            }
        }
        out
    }
}

pub struct Lowercase;

impl RuleChecker for Lowercase {
    fn id(&self) -> RuleId {
        RuleId::Lowercase
    }

    fn check(&self, doc: &ApiDocument, _ctx: &RuleContext<'_>) -> Vec<Violation> {
        let mut out = Vec::new();
        for path in &doc.paths {
            let upper = path
                .segments
                .iter()
                .map(|s| strip_templates(&s.text))
                .find(|s| s.chars().any(char::is_uppercase));
            if let Some(seg) = upper {
                out.push(path_violation(
                    self.id(),
                    path,
                    format!("segment '{seg}' contains uppercase letters"),
                    &seg,
                ));
            }
        }
        out
    }
}
