//! Command-line front end.
//!
//! Exit codes: 0 when the analysis found nothing, 1 when it reported
//! violations, 2 for usage, input and parse errors. Subcommands exit 0 on
//! success and 2 on error.

mod fetch;
mod interactive;

use std::collections::BTreeSet;
use std::ffi::OsString;
use std::fs::{self, File};
use std::io::{self, BufReader, IsTerminal, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bench::{self, perf_summary, RunOptions};
use crate::classifier::{self, DEFAULT_ALPHA, MODEL_ENV};
use crate::engine::{AnalysisConfig, Analyzer};
use crate::lexicon::DictionaryProfile;
use crate::openapi::DEFAULT_MAX_DOCUMENT_BYTES;
use crate::par::Execution;
use crate::report::{render_console, render_json, render_markdown};
use crate::rules::{RuleId, DEFAULT_TUNNEL_THRESHOLD};

pub use fetch::{fetch_remote, is_remote, FetchError, DEFAULT_FETCH_TIMEOUT};
pub use interactive::select_rules;

pub const EXIT_CLEAN: i32 = 0;
pub const EXIT_VIOLATIONS: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "api-ruler",
    version,
    about = "Check an OpenAPI description against RESTful design rules",
    args_conflicts_with_subcommands = true,
    subcommand_negates_reqs = true
)]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,
    #[command(flatten)]
    analyze: AnalyzeArgs,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum DictArg {
    Standard,
    Large,
}

#[derive(Debug, Args)]
struct AnalyzeArgs {
    /// OpenAPI file path or http(s) URL.
    #[arg(required = true)]
    input: Option<String>,
    /// Comma-separated rule ids to run (default: all).
    #[arg(long, value_delimiter = ',', conflicts_with = "interactive")]
    rules: Option<Vec<String>>,
    /// Choose rules one by one at a terminal prompt.
    #[arg(long)]
    interactive: bool,
    /// Write a Markdown report to this file.
    #[arg(long = "out", value_name = "FILE.md")]
    out_markdown: Option<PathBuf>,
    /// Write a JSON report to this file.
    #[arg(long = "json", value_name = "FILE.json")]
    out_json: Option<PathBuf>,
    /// Minimum classifier confidence for NoTunnel reports.
    #[arg(long, default_value_t = DEFAULT_TUNNEL_THRESHOLD)]
    threshold: f64,
    /// Frequency dictionary used for word segmentation.
    #[arg(long, value_enum, default_value = "standard")]
    dict: DictArg,
    /// Largest accepted document, in bytes.
    #[arg(long, default_value_t = DEFAULT_MAX_DOCUMENT_BYTES)]
    max_bytes: usize,
    /// Classifier model file (default: $API_RULER_MODEL, else the bundled model).
    #[arg(long)]
    model: Option<PathBuf>,
    /// Run rule checkers one after another instead of concurrently.
    #[arg(long)]
    serial: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Train or evaluate the HTTP verb classifier.
    #[command(subcommand)]
    Classifier(ClassifierCommand),
    /// Run the analyzer over a corpus or score its reports.
    #[command(subcommand)]
    Bench(BenchCommand),
}

#[derive(Debug, Subcommand)]
enum ClassifierCommand {
    /// Train a model from a `label,text` CSV corpus.
    Train {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = DEFAULT_ALPHA)]
        alpha: f64,
        /// Seed for the fold shuffle of the cross-validation estimate printed after training.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// k-fold cross-validation on a corpus.
    Eval {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long, default_value_t = 10)]
        folds: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = DEFAULT_ALPHA)]
        alpha: f64,
    },
}

#[derive(Debug, Subcommand)]
enum BenchCommand {
    /// Analyze every JSON/YAML file under a directory.
    Run {
        dir: PathBuf,
        /// Per-file results CSV.
        #[arg(long)]
        out: PathBuf,
        /// Also write a JSON report per analyzed file here.
        #[arg(long)]
        reports_dir: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_DOCUMENT_BYTES)]
        max_bytes: usize,
        /// Analyze files one after another.
        #[arg(long)]
        serial: bool,
    },
    /// Score JSON reports against JSON Lines gold labels.
    Score {
        #[arg(long)]
        reports: PathBuf,
        #[arg(long)]
        gold: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
}

/// A failure that ends the process with exit code 2.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

fn write_file(path: &Path, content: &str) -> Result<(), Failure> {
    fs::write(path, content).map_err(|e| Failure(format!("cannot write {}: {e}", path.display())))
}

fn parse_rules(names: &[String]) -> Result<BTreeSet<RuleId>, Failure> {
    let mut set = BTreeSet::new();
    for name in names.iter().filter(|n| !n.trim().is_empty()) {
        set.insert(name.parse::<RuleId>()?);
    }
    if set.is_empty() {
        return Err(Failure("no rules selected".into()));
    }
    Ok(set)
}

fn read_input(input: &str, max_bytes: usize) -> Result<Vec<u8>, Failure> {
    if is_remote(input) {
        return Ok(fetch_remote(input, max_bytes, DEFAULT_FETCH_TIMEOUT)?);
    }
    fs::read(input).map_err(|e| Failure(format!("cannot read {input}: {e}")))
}

fn run_analysis(args: AnalyzeArgs, stdout: &mut dyn Write) -> Result<i32, Failure> {
    let input = args.input.unwrap_or_default();
    if input.trim().is_empty() {
        return Err(Failure("input must not be empty".into()));
    }
    let enabled_rules = if args.interactive {
        if !io::stdin().is_terminal() {
            return Err(Failure("--interactive needs a terminal on standard input".into()));
        }
        let rules = select_rules(io::stdin().lock(), io::stderr())?;
        if rules.is_empty() {
            return Err(Failure("no rules selected".into()));
        }
        rules
    } else if let Some(names) = &args.rules {
        parse_rules(names)?
    } else {
        RuleId::ALL.into_iter().collect()
    };
    let model = args.model.or_else(|| {
        std::env::var_os(MODEL_ENV)
            .filter(|v| !v.is_empty())
            .map(PathBuf::from)
    });
    let config = AnalysisConfig {
        enabled_rules,
        tunnel_threshold: args.threshold,
        dictionary_profile: match args.dict {
            DictArg::Standard => DictionaryProfile::Standard,
            DictArg::Large => DictionaryProfile::Large,
        },
        large_dictionary_path: None,
        max_document_bytes: args.max_bytes,
        classifier_model_path: model,
        execution: if args.serial {
            Execution::Serial
        } else {
            Execution::Parallel
        },
    };
    let analyzer = Analyzer::new(config)?;
    let bytes = read_input(&input, args.max_bytes)?;
    let report = analyzer.analyze_source(&bytes, &input)?;

    stdout.write_all(render_console(&report).content.as_bytes())?;
    if let Some(path) = &args.out_markdown {
        write_file(path, &render_markdown(&report).content)?;
    }
    if let Some(path) = &args.out_json {
        write_file(path, &render_json(&report).content)?;
    }
    Ok(if report.violations.is_empty() {
        EXIT_CLEAN
    } else {
        EXIT_VIOLATIONS
    })
}

fn run_classifier(cmd: ClassifierCommand, stdout: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        ClassifierCommand::Train {
            corpus,
            out,
            alpha,
            seed,
        } => {
            let samples = classifier::read_corpus_path(&corpus)?;
            let model = classifier::train(&samples, alpha)?;
            model.save(&out)?;
            writeln!(
                stdout,
                "trained on {} samples, {} labels, vocabulary {}; model written to {}",
                samples.len(),
                model.labels().len(),
                model.vocabulary().len(),
                out.display()
            )?;
            if samples.len() >= 10 {
                if let Ok(cv) = classifier::cross_validate(&samples, 10, seed, alpha) {
                    writeln!(stdout, "10-fold cross-validation accuracy: {:.4}", cv.accuracy)?;
                }
            }
        }
        ClassifierCommand::Eval {
            corpus,
            folds,
            seed,
            alpha,
        } => {
            let samples = classifier::read_corpus_path(&corpus)?;
            let cv = classifier::cross_validate(&samples, folds, seed, alpha)?;
            for (i, a) in cv.fold_accuracies.iter().enumerate() {
                writeln!(stdout, "fold {:>2}: {:.4}", i + 1, a)?;
            }
            writeln!(stdout, "mean accuracy: {:.4}", cv.accuracy)?;
        }
    }
    Ok(EXIT_CLEAN)
}

fn run_bench(cmd: BenchCommand, stdout: &mut dyn Write) -> Result<i32, Failure> {
    match cmd {
        BenchCommand::Run {
            dir,
            out,
            reports_dir,
            max_bytes,
            serial,
        } => {
            let config = AnalysisConfig {
                max_document_bytes: max_bytes,
                execution: if serial {
                    Execution::Serial
                } else {
                    Execution::Parallel
                },
                ..AnalysisConfig::default()
            };
            let run = bench::run_corpus(&dir, &config, &RunOptions { reports_dir })?;
            let file =
                File::create(&out).map_err(|e| Failure(format!("cannot write {}: {e}", out.display())))?;
            bench::write_records_csv(&run.records, file)?;
            writeln!(
                stdout,
                "{} of {} documents analyzed, success rate {:.4}\n",
                run.successes(),
                run.records.len(),
                run.success_rate()
            )?;
            stdout.write_all(perf_summary(&run.records).to_markdown().as_bytes())?;
        }
        BenchCommand::Score { reports, gold, out } => {
            let reports = bench::load_reports(&reports)?;
            let gold_file =
                File::open(&gold).map_err(|e| Failure(format!("cannot read {}: {e}", gold.display())))?;
            let labels = bench::read_gold(BufReader::new(gold_file))?;
            let table = bench::score(&reports, &labels);
            let file =
                File::create(&out).map_err(|e| Failure(format!("cannot write {}: {e}", out.display())))?;
            bench::write_scores_csv(&table, file)?;
            let pct = |x: Option<f64>| x.map_or("n/a".to_string(), |v| format!("{:.3}", v));
            writeln!(
                stdout,
                "precision {} recall {} (TP {}, FP {}, FN {})",
                pct(table.total.precision),
                pct(table.total.recall),
                table.total.true_positives,
                table.total.false_positives,
                table.total.false_negatives
            )?;
        }
    }
    Ok(EXIT_CLEAN)
}

/// Runs the command line in `args` (including the program name) and returns
/// the exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_CLEAN };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                stderr.write_all(text.as_bytes())
            } else {
                stdout.write_all(text.as_bytes())
            };
            return code;
        }
    };
    let result = match cli.command {
        Some(Command::Classifier(cmd)) => run_classifier(cmd, stdout),
        Some(Command::Bench(cmd)) => run_bench(cmd, stdout),
        None => run_analysis(cli.analyze, stdout),
    };
    match result {
        Ok(code) => code,
        Err(Failure(message)) => {
            let _ = writeln!(stderr, "error: {message}");
            EXIT_ERROR
        }
    }
}

/// Entry point for the binary.
pub fn main() -> i32 {
    run(
        std::env::args_os(),
        &mut io::stdout().lock(),
        &mut io::stderr().lock(),
    )
}
