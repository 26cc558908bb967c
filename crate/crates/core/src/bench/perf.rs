use std::fmt::Write as _;

use super::{CorpusRecord, Outcome, SizeBucket};

/// Median of `values`; the mean of the middle pair for even lengths.
pub fn median(values: &[f64]) -> Option<f64> {
    if values.is_empty() {
        return None;
    }
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let mid = v.len() / 2;
    Some(if v.len() % 2 == 1 {
        v[mid]
    } else {
        (v[mid - 1] + v[mid]) / 2.0
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct BucketSummary {
    pub bucket: SizeBucket,
    pub files: usize,
    pub median_duration_ms: Option<f64>,
    pub median_paths: Option<f64>,
    pub median_peak_memory_bytes: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PerfSummary {
    pub buckets: Vec<BucketSummary>,
    /// A larger bucket has a smaller median duration than a smaller one.
    pub non_monotonic: bool,
}

impl PerfSummary {
    pub fn to_markdown(&self) -> String {
        let fmt = |x: Option<f64>, scale: f64, digits: usize| {
            x.map_or("n/a".to_string(), |v| format!("{:.*}", digits, v / scale))
        };
        let mut out = String::from(
            "| Size | Files | Median duration (ms) | Median paths | Median peak memory (MB) |\n|---|---:|---:|---:|---:|\n",
        );
        for b in &self.buckets {
            let _ = writeln!(
                out,
                "| {} | {} | {} | {} | {} |",
                b.bucket.label(),
                b.files,
                fmt(b.median_duration_ms, 1.0, 2),
                fmt(b.median_paths, 1.0, 1),
                fmt(b.median_peak_memory_bytes, 1024.0 * 1024.0, 1),
            );
        }
        if self.non_monotonic {
            out.push_str("\nNote: median duration does not grow with document size across all buckets.\n");
        }
        out
    }
}

/// Per-bucket medians over successful records.
pub fn perf_summary(records: &[CorpusRecord]) -> PerfSummary {
    let buckets: Vec<BucketSummary> = SizeBucket::ALL
        .into_iter()
        .map(|bucket| {
            let rs: Vec<&CorpusRecord> = records
                .iter()
                .filter(|r| r.outcome == Outcome::Success && r.size_bucket == bucket)
                .collect();
            let memory: Vec<f64> = rs
                .iter()
                .filter_map(|r| r.peak_memory_bytes.map(|m| m as f64))
                .collect();
            BucketSummary {
                bucket,
                files: rs.len(),
                median_duration_ms: median(&rs.iter().map(|r| r.duration_ms).collect::<Vec<_>>()),
                median_paths: median(&rs.iter().map(|r| r.path_count as f64).collect::<Vec<_>>()),
                median_peak_memory_bytes: median(&memory),
            }
        })
        .collect();
    let durations: Vec<f64> = buckets.iter().filter_map(|b| b.median_duration_ms).collect();
    let non_monotonic = durations.windows(2).any(|w| w[1] < w[0]);
    PerfSummary {
        buckets,
        non_monotonic,
    }
}
