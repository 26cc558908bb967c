//! HTTP verb prediction from operation summaries and descriptions.
//!
//! A multinomial Naive Bayes model over stemmed, stop-word-filtered tokens.
//! A model trained on the bundled starter corpus is available through
//! [`ClassifierModel::starter`].

mod corpus;
mod cv;
mod model;
mod porter;
mod preprocess;

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use corpus::{read_corpus, read_corpus_path};
pub use cv::{assign_folds, cross_validate, CrossValidation};
pub use model::{train, train_tokens, ClassifierModel, Prediction, DEFAULT_ALPHA};
pub use porter::stem;
pub use preprocess::{is_stop_word, preprocess, PREPROCESSING_VERSION};

/// Environment variable naming a model file to use instead of the starter model.
pub const MODEL_ENV: &str = "API_RULER_MODEL";

/// Declaration order is the tie-breaking order for equal posteriors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum VerbLabel {
    #[serde(rename = "GET")]
    Get,
    #[serde(rename = "POST")]
    Post,
    #[serde(rename = "PUT")]
    Put,
    #[serde(rename = "PATCH")]
    Patch,
    #[serde(rename = "DELETE")]
    Delete,
    #[serde(rename = "INVALID")]
    Invalid,
}

impl VerbLabel {
    pub const ALL: [VerbLabel; 6] = [
        VerbLabel::Get,
        VerbLabel::Post,
        VerbLabel::Put,
        VerbLabel::Patch,
        VerbLabel::Delete,
        VerbLabel::Invalid,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            VerbLabel::Get => "GET",
            VerbLabel::Post => "POST",
            VerbLabel::Put => "PUT",
            VerbLabel::Patch => "PATCH",
            VerbLabel::Delete => "DELETE",
            VerbLabel::Invalid => "INVALID",
        }
    }
}

impl fmt::Display for VerbLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for VerbLabel {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "GET" => Ok(VerbLabel::Get),
            "POST" => Ok(VerbLabel::Post),
            "PUT" => Ok(VerbLabel::Put),
            "PATCH" => Ok(VerbLabel::Patch),
            "DELETE" => Ok(VerbLabel::Delete),
            "INVALID" | "INVALID-DESCRIPTION" => Ok(VerbLabel::Invalid),
            _ => Err(format!("unknown label {s:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledSample {
    pub text: String,
    pub label: VerbLabel,
}

#[derive(Debug, Error)]
pub enum ClassifierError {
    #[error("training needs at least two distinct labels, found {0}")]
    InsufficientClasses(usize),
    #[error("cannot run {folds}-fold cross-validation on {samples} samples")]
    TooFewSamples { samples: usize, folds: usize },
    #[error("smoothing alpha must be a positive number, got {0}")]
    InvalidAlpha(f64),
    #[error("corpus: {0}")]
    Corpus(String),
    #[error("model file: {0}")]
    ModelFormat(String),
    #[error("model was built with preprocessing {found:?}, this build uses {expected:?}")]
    PreprocessingMismatch { expected: String, found: String },
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
}
