#[path = "../tests/common/mod.rs"]
mod common;

use api_ruler::bench::{run_corpus, RunOptions};
use api_ruler::engine::{AnalysisConfig, Analyzer};
use api_ruler::openapi::parse_document;
use api_ruler::par::Execution;
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};

const MODES: [(&str, Execution); 2] = [("serial", Execution::Serial), ("parallel", Execution::Parallel)];

fn analyzer(execution: Execution) -> Analyzer {
    Analyzer::new(AnalysisConfig {
        execution,
        ..AnalysisConfig::default()
    })
    .unwrap()
}

fn checkers(c: &mut Criterion) {
    let mut group = c.benchmark_group("analyze");
    for n in [10, 50, 200] {
        let doc = parse_document(common::synthetic_document(n).as_bytes(), "synthetic.yaml").unwrap();
        group.throughput(Throughput::Elements(n as u64));
        for (name, execution) in MODES {
            let analyzer = analyzer(execution);
            group.bench_with_input(BenchmarkId::new(name, n), &doc, |b, doc| {
                b.iter(|| analyzer.analyze(doc).unwrap())
            });
        }
    }
    group.finish();
}

fn parse_and_analyze(c: &mut Criterion) {
    let text = common::synthetic_document(200);
    let mut group = c.benchmark_group("analyze_source");
    for (name, execution) in MODES {
        let analyzer = analyzer(execution);
        group.bench_function(name, |b| {
            b.iter(|| {
                analyzer
                    .analyze_source(text.as_bytes(), "synthetic.yaml")
                    .unwrap()
            })
        });
    }
    group.finish();
}

fn corpus(c: &mut Criterion) {
    let dir = common::rule_fixtures();
    let mut group = c.benchmark_group("run_corpus");
    group.sample_size(20);
    for (name, execution) in MODES {
        let config = AnalysisConfig {
            execution,
            ..AnalysisConfig::default()
        };
        group.bench_function(name, |b| {
            b.iter(|| run_corpus(&dir, &config, &RunOptions::default()).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, checkers, parse_and_analyze, corpus);
criterion_main!(benches);
