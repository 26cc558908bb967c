use serde::{Deserialize, Serialize};

use crate::lexicon::{GrammaticalNumber, Lexicon};
use crate::openapi::{HttpMethod, PathEntry};

/// Structural role of a path segment.
///
/// Stores are not told apart from collections; `Store` exists for callers
/// that want to name the role but is never produced by the classifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SegmentKind {
    Collection,
    Document,
    Store,
    ControllerCandidate,
    TemplateParameter,
    Unclassified,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentClass {
    pub segment: String,
    pub class: SegmentKind,
}

/// POST is the only method that changes state, and nothing reads the URI
/// as a resource.
pub(crate) fn is_post_only(path: &PathEntry) -> bool {
    path.operations.contains_key(&HttpMethod::Post)
        && path
            .methods()
            .all(|m| matches!(m, HttpMethod::Post | HttpMethod::Head | HttpMethod::Options))
}

/// Last word of a segment after splitting and segmentation.
pub fn final_word(lexicon: &Lexicon, segment: &str) -> Option<String> {
    lexicon.segment_words(segment).pop()
}

pub(crate) fn has_verb(lexicon: &Lexicon, segment: &str) -> bool {
    lexicon.segment_words(segment).iter().any(|w| lexicon.is_verb(w))
}

pub(crate) fn number_of_segment(lexicon: &Lexicon, segment: &str) -> GrammaticalNumber {
    final_word(lexicon, segment)
        .map(|w| lexicon.classify_word(&w).number)
        .unwrap_or(GrammaticalNumber::Unknown)
}

/// Assigns a structural role to every segment of `path`.
///
/// In priority order: `{param}` segments are template parameters; a literal
/// followed by a parameter is a collection; the final literal of a POST-only
/// path that contains a verb is a controller candidate; a literal after a
/// collection or parameter is a document; a leading literal followed by
/// another literal is a collection when plural. Everything else is
/// unclassified.
pub fn classify_segments(path: &PathEntry, lexicon: &Lexicon) -> Vec<SegmentClass> {
    let segs = &path.segments;
    let post_only = is_post_only(path);
    let mut out: Vec<SegmentClass> = Vec::with_capacity(segs.len());
    for (i, seg) in segs.iter().enumerate() {
        let next = segs.get(i + 1);
        let prev = out.last().map(|c| c.class);
        let class = if seg.is_template {
            SegmentKind::TemplateParameter
        } else if next.is_some_and(|n| n.is_template) {
            SegmentKind::Collection
        } else if next.is_none() && post_only && has_verb(lexicon, &seg.text) {
            SegmentKind::ControllerCandidate
        } else if matches!(
            prev,
            Some(SegmentKind::Collection | SegmentKind::TemplateParameter)
        ) {
            SegmentKind::Document
        } else if i == 0
            && next.is_some()
            && number_of_segment(lexicon, &seg.text) == GrammaticalNumber::Plural
        {
            SegmentKind::Collection
        } else {
            SegmentKind::Unclassified
        };
        out.push(SegmentClass {
            segment: seg.text.clone(),
            class,
        });
    }
    out
}
