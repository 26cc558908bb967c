//! Runs the enabled rule checkers over a document and assembles a report.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::Deref;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::PathBuf;
use std::time::{Duration, Instant};

use chrono::{DateTime, Utc};
use thiserror::Error;

use crate::classifier::{ClassifierError, ClassifierModel};
use crate::lexicon::{DictionaryProfile, Lexicon, LexiconError};
use crate::openapi::{
    parse_document_with, ApiDocument, ParseError, ParseOptions, DEFAULT_MAX_DOCUMENT_BYTES,
};
use crate::par::{self, Execution};
use crate::rules::{descriptor, RuleContext, RuleDescriptor, RuleId, Violation, DEFAULT_TUNNEL_THRESHOLD};

#[derive(Debug, Clone, PartialEq)]
pub struct AnalysisConfig {
    pub enabled_rules: BTreeSet<RuleId>,
    pub tunnel_threshold: f64,
    pub dictionary_profile: DictionaryProfile,
    /// Extra word list for the large profile; falls back to the environment.
    pub large_dictionary_path: Option<PathBuf>,
    pub max_document_bytes: usize,
    /// Model file to use instead of the bundled starter model.
    pub classifier_model_path: Option<PathBuf>,
    pub execution: Execution,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig {
            enabled_rules: RuleId::ALL.into_iter().collect(),
            tunnel_threshold: DEFAULT_TUNNEL_THRESHOLD,
            dictionary_profile: DictionaryProfile::Standard,
            large_dictionary_path: None,
            max_document_bytes: DEFAULT_MAX_DOCUMENT_BYTES,
            classifier_model_path: None,
            execution: Execution::default(),
        }
    }
}

impl AnalysisConfig {
    pub fn with_rules(rules: impl IntoIterator<Item = RuleId>) -> Self {
        AnalysisConfig {
            enabled_rules: rules.into_iter().collect(),
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<(), EngineError> {
        if self.enabled_rules.is_empty() {
            return Err(EngineError::InvalidConfig("no rules enabled".into()));
        }
        if !(self.tunnel_threshold > 0.0 && self.tunnel_threshold <= 1.0) {
            return Err(EngineError::InvalidConfig(format!(
                "tunnel threshold {} is outside (0, 1]",
                self.tunnel_threshold
            )));
        }
        if self.max_document_bytes == 0 {
            return Err(EngineError::InvalidConfig(
                "maximum document size must be positive".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Error)]
pub enum EngineError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Lexicon(#[from] LexiconError),
    #[error(transparent)]
    Classifier(#[from] ClassifierError),
    #[error("analysis aborted: {0}")]
    AnalysisAborted(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct RuleDiagnostic {
    pub rule: RuleId,
    pub duration: Duration,
    pub violations: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub source_name: String,
    pub started_at: DateTime<Utc>,
    pub finished_at: DateTime<Utc>,
    /// Sorted by line, rule, path.
    pub violations: Vec<Violation>,
    /// One entry per rule run, zero included.
    pub counts_by_rule: BTreeMap<RuleId, usize>,
    /// In reporting order.
    pub rules_run: Vec<RuleId>,
    /// Unresolved references and conversion notes from parsing.
    pub warnings: Vec<String>,
    pub diagnostics: Vec<RuleDiagnostic>,
    pub path_count: usize,
    pub operation_count: usize,
}

impl Report {
    pub fn rule_descriptors(&self) -> impl Iterator<Item = &'static RuleDescriptor> + '_ {
        self.rules_run.iter().map(|id| descriptor(*id))
    }

    /// Rules with at least one violation.
    pub fn violated_rules(&self) -> Vec<RuleId> {
        self.counts_by_rule
            .iter()
            .filter(|(_, n)| **n > 0)
            .map(|(id, _)| *id)
            .collect()
    }
}

enum Owned<T: 'static> {
    Shared(&'static T),
    Loaded(Box<T>),
}

impl<T> Deref for Owned<T> {
    type Target = T;

    fn deref(&self) -> &T {
        match self {
            Owned::Shared(t) => t,
            Owned::Loaded(t) => t,
        }
    }
}

pub type Clock = fn() -> DateTime<Utc>;

/// A validated configuration with its lexicon and classifier loaded.
/// Reusable across documents.
pub struct Analyzer {
    config: AnalysisConfig,
    lexicon: Owned<Lexicon>,
    classifier: Owned<ClassifierModel>,
    clock: Clock,
}

impl Analyzer {
    pub fn new(config: AnalysisConfig) -> Result<Self, EngineError> {
        config.validate()?;
        let lexicon = match config.dictionary_profile {
            DictionaryProfile::Standard => Owned::Shared(Lexicon::shared()),
            profile => Owned::Loaded(Box::new(Lexicon::for_profile(
                profile,
                config.large_dictionary_path.as_deref(),
            )?)),
        };
        let classifier = match &config.classifier_model_path {
            None => Owned::Shared(ClassifierModel::starter()),
            Some(path) => Owned::Loaded(Box::new(ClassifierModel::load(path)?)),
        };
        Ok(Analyzer {
            config,
            lexicon,
            classifier,
            clock: Utc::now,
        })
    }

    /// Replaces the timestamp source, e.g. to make reports reproducible.
    pub fn with_clock(mut self, clock: Clock) -> Self {
        self.clock = clock;
        self
    }

    pub fn config(&self) -> &AnalysisConfig {
        &self.config
    }

    pub fn context(&self) -> RuleContext<'_> {
        RuleContext {
            lexicon: &self.lexicon,
            classifier: &self.classifier,
            tunnel_threshold: self.config.tunnel_threshold,
        }
    }

    pub fn analyze(&self, document: &ApiDocument) -> Result<Report, EngineError> {
        let started_at = (self.clock)();
        let ctx = self.context();
        let rules: Vec<RuleId> = self.config.enabled_rules.iter().copied().collect();

        let results = par::map(&rules, self.config.execution, |&rule| {
            let t = Instant::now();
            let outcome = catch_unwind(AssertUnwindSafe(|| rule.checker().check(document, &ctx)));
            (rule, outcome, t.elapsed())
        });

        let mut violations = Vec::new();
        let mut counts_by_rule = BTreeMap::new();
        let mut diagnostics = Vec::with_capacity(rules.len());
        for (rule, outcome, duration) in results {
            let found = outcome.map_err(|_| EngineError::AnalysisAborted(format!("rule {rule} failed")))?;
            counts_by_rule.insert(rule, found.len());
            diagnostics.push(RuleDiagnostic {
                rule,
                duration,
                violations: found.len(),
            });
            violations.extend(found);
        }
        violations.sort();

        let mut warnings = document.warnings.clone();
        warnings.extend(
            document
                .unresolved_refs
                .iter()
                .map(|r| format!("unresolved reference {r}")),
        );

        Ok(Report {
            source_name: document.source_name.clone(),
            started_at,
            finished_at: (self.clock)(),
            violations,
            counts_by_rule,
            rules_run: rules,
            warnings,
            diagnostics,
            path_count: document.paths.len(),
            operation_count: document.operation_count(),
        })
    }

    /// Parses `bytes` (with the configured size cap) and analyzes the result.
    pub fn analyze_source(&self, bytes: &[u8], source_name: &str) -> Result<Report, EngineError> {
        let options = ParseOptions {
            max_bytes: self.config.max_document_bytes,
        };
        let document = parse_document_with(bytes, source_name, &options)?;
        self.analyze(&document)
    }
}

pub fn analyze(document: &ApiDocument, config: AnalysisConfig) -> Result<Report, EngineError> {
    Analyzer::new(config)?.analyze(document)
}

pub fn analyze_source(
    bytes: &[u8],
    source_name: &str,
    config: AnalysisConfig,
) -> Result<Report, EngineError> {
    Analyzer::new(config)?.analyze_source(bytes, source_name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rules::test_support::paths;

    #[test]
    fn single_rule_isolation() {
        let doc = paths(&[("/users_", &["get"])]);
        let r = analyze(&doc, AnalysisConfig::with_rules([RuleId::NoUnderscores])).unwrap();
        assert_eq!(r.violations.len(), 1);
        assert_eq!(r.counts_by_rule, BTreeMap::from([(RuleId::NoUnderscores, 1)]));

        let others = RuleId::ALL.into_iter().filter(|r| *r != RuleId::NoUnderscores);
        let r = analyze(&doc, AnalysisConfig::with_rules(others)).unwrap();
        assert!(r.violations.iter().all(|v| v.rule_id != RuleId::NoUnderscores));
        assert!(!r.counts_by_rule.contains_key(&RuleId::NoUnderscores));
    }

    #[test]
    fn union_of_singletons() {
        let doc = paths(&[
            ("/User_Profiles/", &["get"]),
            ("/getReport.json", &["post"]),
            ("/user/{id}/avatars", &["get"]),
        ]);
        let all = analyze(&doc, AnalysisConfig::default()).unwrap();
        let mut union = Vec::new();
        for id in RuleId::ALL {
            union.extend(
                analyze(&doc, AnalysisConfig::with_rules([id]))
                    .unwrap()
                    .violations,
            );
        }
        union.sort();
        assert_eq!(all.violations, union);
        assert_eq!(all.counts_by_rule.values().sum::<usize>(), all.violations.len());
    }

    #[test]
    fn serial_and_parallel_agree() {
        let doc = paths(&[("/User_Profiles/", &["get"]), ("/fetchThings.xml", &["post"])]);
        let serial = analyze(
            &doc,
            AnalysisConfig {
                execution: Execution::Serial,
                ..AnalysisConfig::default()
            },
        )
        .unwrap();
        let parallel = analyze(&doc, AnalysisConfig::default()).unwrap();
        assert_eq!(serial.violations, parallel.violations);
        assert_eq!(serial.counts_by_rule, parallel.counts_by_rule);
    }

    #[test]
    fn invalid_configs() {
        assert!(Analyzer::new(AnalysisConfig::with_rules([])).is_err());
        for t in [0.0, 1.5, f64::NAN] {
            let c = AnalysisConfig {
                tunnel_threshold: t,
                ..AnalysisConfig::default()
            };
            assert!(matches!(Analyzer::new(c), Err(EngineError::InvalidConfig(_))));
        }
    }

    #[test]
    fn source_errors_propagate() {
        let bad = analyze_source(b"openapi: [unclosed", "x", AnalysisConfig::default());
        assert!(matches!(
            bad,
            Err(EngineError::Parse(ParseError::UnparsableDocument(_)))
        ));
        let big = analyze_source(
            &[b' '; 64],
            "x",
            AnalysisConfig {
                max_document_bytes: 16,
                ..AnalysisConfig::default()
            },
        );
        assert!(matches!(
            big,
            Err(EngineError::Parse(ParseError::DocumentTooLarge { .. }))
        ));
    }

    #[test]
    fn swagger_two_goes_through_conversion() {
        let src = "swagger: '2.0'\ninfo: {title: t, version: '1'}\nproduces: [application/json]\npaths:\n  /pets:\n    get:\n      responses:\n        '200': {description: ok, schema: {type: array}}\n";
        let r = analyze_source(src.as_bytes(), "v2.yaml", AnalysisConfig::default()).unwrap();
        assert_eq!(r.path_count, 1);
        assert!(r.violations.is_empty(), "{:?}", r.violations);
    }

    #[test]
    fn fixed_clock() {
        fn epoch() -> DateTime<Utc> {
            DateTime::<Utc>::UNIX_EPOCH
        }
        let a = Analyzer::new(AnalysisConfig::default())
            .unwrap()
            .with_clock(epoch);
        let r = a.analyze(&paths(&[("/users", &["get"])])).unwrap();
        assert_eq!(r.started_at, epoch());
        assert_eq!(r.finished_at, epoch());
    }

    #[test]
    fn missing_model_file_is_an_error() {
        let c = AnalysisConfig {
            classifier_model_path: Some("/nonexistent/model.json".into()),
            ..AnalysisConfig::default()
        };
        assert!(matches!(Analyzer::new(c), Err(EngineError::Classifier(_))));
    }
}
