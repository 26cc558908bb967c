use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde::{Deserialize, Serialize};

use super::{io_error, BenchError};
use crate::engine::{AnalysisConfig, Analyzer, EngineError};
use crate::openapi::ParseError;
use crate::par;
use crate::report::render_json;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Outcome {
    Success,
    ParseError,
    /// Stopped by a resource cap (size limit) or a failing checker.
    Aborted,
}

/// Document size classes by path count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SizeBucket {
    VerySmall,
    Small,
    Medium,
    Large,
    VeryLarge,
}

impl SizeBucket {
    pub const ALL: [SizeBucket; 5] = [
        SizeBucket::VerySmall,
        SizeBucket::Small,
        SizeBucket::Medium,
        SizeBucket::Large,
        SizeBucket::VeryLarge,
    ];

    /// 0-10, 11-30, 31-70, 71-150, 151+ paths.
    pub fn for_paths(paths: usize) -> Self {
        match paths {
            0..=10 => SizeBucket::VerySmall,
            11..=30 => SizeBucket::Small,
            31..=70 => SizeBucket::Medium,
            71..=150 => SizeBucket::Large,
            _ => SizeBucket::VeryLarge,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            SizeBucket::VerySmall => "Very small (0-10)",
            SizeBucket::Small => "Small (11-30)",
            SizeBucket::Medium => "Medium (31-70)",
            SizeBucket::Large => "Large (71-150)",
            SizeBucket::VeryLarge => "Very large (151+)",
        }
    }
}

/// One analyzed file. CSV columns follow the field order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusRecord {
    /// Path relative to the corpus directory, `/`-separated.
    pub file: String,
    pub outcome: Outcome,
    pub duration_ms: f64,
    pub path_count: usize,
    pub size_bucket: SizeBucket,
    pub violation_count: usize,
    /// Process peak resident memory after the file, when the platform reports it.
    pub peak_memory_bytes: Option<u64>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorpusRun {
    /// Sorted by file name.
    pub records: Vec<CorpusRecord>,
}

impl CorpusRun {
    pub fn successes(&self) -> usize {
        self.records
            .iter()
            .filter(|r| r.outcome == Outcome::Success)
            .count()
    }

    pub fn success_rate(&self) -> f64 {
        if self.records.is_empty() {
            0.0
        } else {
            self.successes() as f64 / self.records.len() as f64
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    /// Directory receiving one JSON report per successfully analyzed file.
    pub reports_dir: Option<PathBuf>,
}

/// Peak resident set size of this process (Linux `VmHWM`).
pub fn peak_memory_bytes() -> Option<u64> {
    let status = fs::read_to_string("/proc/self/status").ok()?;
    let line = status.lines().find(|l| l.starts_with("VmHWM:"))?;
    let kb: u64 = line.split_whitespace().nth(1)?.parse().ok()?;
    Some(kb * 1024)
}

fn is_document(path: &Path) -> bool {
    matches!(
        path.extension()
            .and_then(|e| e.to_str())
            .map(str::to_ascii_lowercase)
            .as_deref(),
        Some("json" | "yaml" | "yml")
    )
}

/// JSON and YAML files under `dir`, recursively, sorted by relative name.
pub fn collect_documents(dir: &Path) -> Result<Vec<(String, PathBuf)>, BenchError> {
    fn walk(dir: &Path, out: &mut Vec<PathBuf>) -> Result<(), BenchError> {
        for entry in fs::read_dir(dir).map_err(io_error(dir))? {
            let path = entry.map_err(io_error(dir))?.path();
            if path.is_dir() {
                walk(&path, out)?;
            } else if is_document(&path) {
                out.push(path);
            }
        }
        Ok(())
    }
    let mut files = Vec::new();
    walk(dir, &mut files)?;
    let mut named: Vec<(String, PathBuf)> = files
        .into_iter()
        .map(|p| {
            let rel = p.strip_prefix(dir).unwrap_or(&p);
            let name = rel
                .components()
                .map(|c| c.as_os_str().to_string_lossy())
                .collect::<Vec<_>>()
                .join("/");
            (name, p)
        })
        .collect();
    named.sort();
    if named.is_empty() {
        return Err(BenchError::NoDocuments(dir.to_path_buf()));
    }
    Ok(named)
}

fn report_file_name(name: &str) -> String {
    format!("{}.report.json", name.replace('/', "__"))
}

fn analyze_file(analyzer: &Analyzer, name: &str, path: &Path, reports_dir: Option<&Path>) -> CorpusRecord {
    let start = Instant::now();
    let result = fs::read(path)
        .map_err(|e| (Outcome::ParseError, format!("cannot read file: {e}")))
        .and_then(|bytes| {
            analyzer.analyze_source(&bytes, name).map_err(|e| {
                let outcome = match e {
                    EngineError::Parse(ParseError::DocumentTooLarge { .. })
                    | EngineError::AnalysisAborted(_) => Outcome::Aborted,
                    _ => Outcome::ParseError,
                };
                (outcome, e.to_string())
            })
        });
    let duration_ms = start.elapsed().as_secs_f64() * 1000.0;

    let mut record = CorpusRecord {
        file: name.to_string(),
        outcome: Outcome::Success,
        duration_ms,
        path_count: 0,
        size_bucket: SizeBucket::VerySmall,
        violation_count: 0,
        peak_memory_bytes: peak_memory_bytes(),
        error: None,
    };
    match result {
        Ok(report) => {
            record.path_count = report.path_count;
            record.size_bucket = SizeBucket::for_paths(report.path_count);
            record.violation_count = report.violations.len();
            if let Some(dir) = reports_dir {
                let target = dir.join(report_file_name(name));
                if let Err(e) = fs::write(&target, render_json(&report).content) {
                    record.error = Some(format!("cannot write {}: {e}", target.display()));
                }
            }
        }
        Err((outcome, message)) => {
            record.outcome = outcome;
            record.error = Some(message);
        }
    }
    record
}

/// Analyzes every document under `dir`. Failures are recorded per file and
/// never stop the run.
pub fn run_corpus(
    dir: &Path,
    config: &AnalysisConfig,
    options: &RunOptions,
) -> Result<CorpusRun, BenchError> {
    let files = collect_documents(dir)?;
    if let Some(reports) = &options.reports_dir {
        fs::create_dir_all(reports).map_err(io_error(reports))?;
    }
    let analyzer = Analyzer::new(config.clone())?;
    let reports_dir = options.reports_dir.as_deref();
    let records = par::map(&files, config.execution, |(name, path)| {
        analyze_file(&analyzer, name, path, reports_dir)
    });
    Ok(CorpusRun { records })
}

pub fn write_records_csv<W: Write>(records: &[CorpusRecord], out: W) -> Result<(), BenchError> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(r)?;
    }
    w.flush().map_err(io_error("<csv output>"))?;
    Ok(())
}
