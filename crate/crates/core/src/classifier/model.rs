use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::Path;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::corpus::read_corpus;
use super::preprocess::{preprocess, PREPROCESSING_VERSION};
use super::{ClassifierError, LabeledSample, VerbLabel};

pub const DEFAULT_ALPHA: f64 = 1.0;
const MODEL_FORMAT_VERSION: u32 = 1;
const STARTER_CORPUS: &str = include_str!("../../data/starter_corpus.csv");

/// A trained multinomial Naive Bayes model.
///
/// `labels` is sorted in label order; `priors` and `likelihoods` are aligned
/// with it. Vocabulary indices follow the alphabetical order of the tokens.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassifierModel {
    labels: Vec<VerbLabel>,
    vocabulary: BTreeMap<String, usize>,
    priors: Vec<f64>,
    likelihoods: Vec<Vec<f64>>,
    alpha: f64,
    preprocessing_version: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Prediction {
    pub label: VerbLabel,
    /// Posterior for every label known to the model.
    pub posterior: BTreeMap<VerbLabel, f64>,
}

impl Prediction {
    pub fn probability(&self, label: VerbLabel) -> f64 {
        self.posterior.get(&label).copied().unwrap_or(0.0)
    }
}

#[derive(Serialize, Deserialize)]
struct ModelFile {
    version: u32,
    preprocessing_version: String,
    alpha: f64,
    labels: Vec<VerbLabel>,
    vocabulary: BTreeMap<String, usize>,
    priors: BTreeMap<VerbLabel, f64>,
    likelihoods: BTreeMap<VerbLabel, Vec<f64>>,
}

/// Trains on raw text; each sample is passed through [`preprocess`].
pub fn train(samples: &[LabeledSample], alpha: f64) -> Result<ClassifierModel, ClassifierError> {
    let docs: Vec<(VerbLabel, Vec<String>)> =
        samples.iter().map(|s| (s.label, preprocess(&s.text))).collect();
    train_tokens(&docs, alpha)
}

/// Trains on already tokenized documents.
pub fn train_tokens(
    docs: &[(VerbLabel, Vec<String>)],
    alpha: f64,
) -> Result<ClassifierModel, ClassifierError> {
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(ClassifierError::InvalidAlpha(alpha));
    }
    let labels: Vec<VerbLabel> = docs
        .iter()
        .map(|(l, _)| *l)
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    if labels.len() < 2 {
        return Err(ClassifierError::InsufficientClasses(labels.len()));
    }
    let vocabulary: BTreeMap<String, usize> = docs
        .iter()
        .flat_map(|(_, t)| t.iter().cloned())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .enumerate()
        .map(|(i, t)| (t, i))
        .collect();
    let v = vocabulary.len();

    let mut doc_counts = vec![0usize; labels.len()];
    let mut token_counts = vec![vec![0u64; v]; labels.len()];
    let mut totals = vec![0u64; labels.len()];
    for (label, tokens) in docs {
        let c = labels.binary_search(label).expect("label collected above");
        doc_counts[c] += 1;
        for t in tokens {
            token_counts[c][vocabulary[t]] += 1;
            totals[c] += 1;
        }
    }

    let n = docs.len() as f64;
    let priors = doc_counts.iter().map(|&d| (d as f64 / n).ln()).collect();
    let likelihoods = token_counts
        .iter()
        .zip(&totals)
        .map(|(counts, &total)| {
            let denom = (total as f64 + alpha * v as f64).ln();
            counts.iter().map(|&c| (c as f64 + alpha).ln() - denom).collect()
        })
        .collect();

    Ok(ClassifierModel {
        labels,
        vocabulary,
        priors,
        likelihoods,
        alpha,
        preprocessing_version: PREPROCESSING_VERSION.to_string(),
    })
}

impl ClassifierModel {
    /// Model trained on the bundled starter corpus with Laplace smoothing.
    pub fn starter() -> &'static ClassifierModel {
        static MODEL: OnceLock<ClassifierModel> = OnceLock::new();
        MODEL.get_or_init(|| {
            let samples = read_corpus(STARTER_CORPUS.as_bytes()).expect("bundled corpus is well formed");
            train(&samples, DEFAULT_ALPHA).expect("bundled corpus has every label")
        })
    }

    pub fn labels(&self) -> &[VerbLabel] {
        &self.labels
    }

    pub fn vocabulary(&self) -> &BTreeMap<String, usize> {
        &self.vocabulary
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn preprocessing_version(&self) -> &str {
        &self.preprocessing_version
    }

    pub fn log_prior(&self, label: VerbLabel) -> Option<f64> {
        let c = self.labels.binary_search(&label).ok()?;
        Some(self.priors[c])
    }

    pub fn log_likelihood(&self, label: VerbLabel, token: &str) -> Option<f64> {
        let c = self.labels.binary_search(&label).ok()?;
        let i = *self.vocabulary.get(token)?;
        Some(self.likelihoods[c][i])
    }

    /// Row of log-likelihoods for `label`, indexed by vocabulary index.
    pub fn log_likelihoods(&self, label: VerbLabel) -> Option<&[f64]> {
        let c = self.labels.binary_search(&label).ok()?;
        Some(&self.likelihoods[c])
    }

    pub fn predict(&self, text: &str) -> Prediction {
        self.predict_tokens(&preprocess(text))
    }

    /// Scores tokens already in preprocessed form. Tokens outside the
    /// vocabulary are ignored.
    pub fn predict_tokens<S: AsRef<str>>(&self, tokens: &[S]) -> Prediction {
        let known: Vec<usize> = tokens
            .iter()
            .filter_map(|t| self.vocabulary.get(t.as_ref()).copied())
            .collect();
        let scores: Vec<f64> = self
            .priors
            .iter()
            .zip(&self.likelihoods)
            .map(|(&prior, row)| prior + known.iter().map(|&i| row[i]).sum::<f64>())
            .collect();
        let max = scores.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let norm = max + scores.iter().map(|s| (s - max).exp()).sum::<f64>().ln();

        let mut best = 0;
        for (c, s) in scores.iter().enumerate() {
            if *s > scores[best] {
                best = c;
            }
        }
        Prediction {
            label: self.labels[best],
            posterior: self
                .labels
                .iter()
                .zip(&scores)
                .map(|(l, s)| (*l, (s - norm).exp()))
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        let file = ModelFile {
            version: MODEL_FORMAT_VERSION,
            preprocessing_version: self.preprocessing_version.clone(),
            alpha: self.alpha,
            labels: self.labels.clone(),
            vocabulary: self.vocabulary.clone(),
            priors: self
                .labels
                .iter()
                .copied()
                .zip(self.priors.iter().copied())
                .collect(),
            likelihoods: self
                .labels
                .iter()
                .copied()
                .zip(self.likelihoods.iter().cloned())
                .collect(),
        };
        serde_json::to_string_pretty(&file).expect("model serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, ClassifierError> {
        let file: ModelFile =
            serde_json::from_str(text).map_err(|e| ClassifierError::ModelFormat(e.to_string()))?;
        if file.version != MODEL_FORMAT_VERSION {
            return Err(ClassifierError::ModelFormat(format!(
                "unsupported model version {}",
                file.version
            )));
        }
        if file.preprocessing_version != PREPROCESSING_VERSION {
            return Err(ClassifierError::PreprocessingMismatch {
                expected: PREPROCESSING_VERSION.to_string(),
                found: file.preprocessing_version,
            });
        }
        let mut labels = file.labels;
        labels.sort();
        labels.dedup();
        if labels.len() < 2 {
            return Err(ClassifierError::InsufficientClasses(labels.len()));
        }
        let v = file.vocabulary.len();
        let mut seen = vec![false; v];
        for &i in file.vocabulary.values() {
            if i >= v || std::mem::replace(&mut seen[i], true) {
                return Err(ClassifierError::ModelFormat(format!(
                    "vocabulary index {i} is out of range or repeated"
                )));
            }
        }
        let mut priors = Vec::with_capacity(labels.len());
        let mut likelihoods = Vec::with_capacity(labels.len());
        for label in &labels {
            let prior = file
                .priors
                .get(label)
                .copied()
                .ok_or_else(|| ClassifierError::ModelFormat(format!("missing prior for {label}")))?;
            let row =
                file.likelihoods.get(label).cloned().ok_or_else(|| {
                    ClassifierError::ModelFormat(format!("missing likelihoods for {label}"))
                })?;
            if row.len() != v {
                return Err(ClassifierError::ModelFormat(format!(
                    "likelihood row for {label} has {} entries, vocabulary has {v}",
                    row.len()
                )));
            }
            priors.push(prior);
            likelihoods.push(row);
        }
        Ok(ClassifierModel {
            labels,
            vocabulary: file.vocabulary,
            priors,
            likelihoods,
            alpha: file.alpha,
            preprocessing_version: file.preprocessing_version,
        })
    }

    pub fn save(&self, path: &Path) -> Result<(), ClassifierError> {
        fs::write(path, self.to_json()).map_err(|source| ClassifierError::Io {
            path: path.to_path_buf(),
            source,
        })
    }

    pub fn load(path: &Path) -> Result<Self, ClassifierError> {
        let text = fs::read_to_string(path).map_err(|source| ClassifierError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_json(&text)
    }
}
