//! Corpus runs, effectiveness scoring against gold labels, and performance
//! summaries.

mod perf;
mod run;
mod score;

use std::path::PathBuf;

use thiserror::Error;

pub use perf::{median, perf_summary, BucketSummary, PerfSummary};
pub use run::{
    collect_documents, peak_memory_bytes, run_corpus, write_records_csv, CorpusRecord, CorpusRun, Outcome,
    RunOptions, SizeBucket,
};
pub use score::{
    load_reports, read_gold, score, write_scores_csv, EffectivenessScore, GoldLabel, ScoreTable,
};

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("no JSON or YAML documents found under {0}")]
    NoDocuments(PathBuf),
    #[error("gold file line {line}: {message}")]
    Gold { line: usize, message: String },
    #[error("report {path}: {message}")]
    Report { path: PathBuf, message: String },
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Engine(#[from] crate::engine::EngineError),
}

pub(crate) fn io_error(path: impl Into<PathBuf>) -> impl FnOnce(std::io::Error) -> BenchError {
    let path = path.into();
    move |source| BenchError::Io { path, source }
}
