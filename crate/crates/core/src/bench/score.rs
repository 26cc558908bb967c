use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fs;
use std::io::{BufRead, Write};
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{io_error, BenchError};
use crate::report::JsonReport;
use crate::rules::RuleId;

/// One expert judgement: whether `rule` should fire on `path` in `file`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldLabel {
    pub file: String,
    pub rule: RuleId,
    pub path: String,
    pub expected: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EffectivenessScore {
    /// `None` for the total row.
    pub rule: Option<RuleId>,
    pub true_positives: usize,
    pub false_positives: usize,
    pub false_negatives: usize,
    pub precision: Option<f64>,
    pub recall: Option<f64>,
}

impl EffectivenessScore {
    fn new(rule: Option<RuleId>, tp: usize, fp: usize, fn_: usize) -> Self {
        let ratio = |num: usize, den: usize| (den > 0).then(|| num as f64 / den as f64);
        EffectivenessScore {
            rule,
            true_positives: tp,
            false_positives: fp,
            false_negatives: fn_,
            precision: ratio(tp, tp + fp),
            recall: ratio(tp, tp + fn_),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScoreTable {
    /// One row per rule, in reporting order.
    pub per_rule: Vec<EffectivenessScore>,
    pub total: EffectivenessScore,
}

impl ScoreTable {
    pub fn rule(&self, id: RuleId) -> &EffectivenessScore {
        &self.per_rule[id as usize]
    }
}

/// Reads JSON Lines gold labels; blank lines are skipped.
pub fn read_gold<R: BufRead>(reader: R) -> Result<Vec<GoldLabel>, BenchError> {
    let mut labels = Vec::new();
    let mut seen = HashSet::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line.map_err(io_error("<gold>"))?;
        if line.trim().is_empty() {
            continue;
        }
        let label: GoldLabel = serde_json::from_str(&line).map_err(|e| BenchError::Gold {
            line: i + 1,
            message: e.to_string(),
        })?;
        if !seen.insert((label.file.clone(), label.rule, label.path.clone())) {
            return Err(BenchError::Gold {
                line: i + 1,
                message: format!("duplicate label for {} {} {}", label.file, label.rule, label.path),
            });
        }
        labels.push(label);
    }
    Ok(labels)
}

/// Loads every `*.json` report in `dir`.
pub fn load_reports(dir: &Path) -> Result<Vec<JsonReport>, BenchError> {
    let mut paths: Vec<_> = fs::read_dir(dir)
        .map_err(io_error(dir))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|e| e == "json"))
        .collect();
    paths.sort();
    paths
        .iter()
        .map(|p| {
            let text = fs::read_to_string(p).map_err(io_error(p))?;
            serde_json::from_str(&text).map_err(|e| BenchError::Report {
                path: p.clone(),
                message: e.to_string(),
            })
        })
        .collect()
}

/// Scores reported violations against gold labels on (file, rule, path).
///
/// Expected labels count as true positives when reported and false
/// negatives otherwise; reports on labels marked not expected are false
/// positives. Reports without any label are excluded.
pub fn score(reports: &[JsonReport], gold: &[GoldLabel]) -> ScoreTable {
    let reported: BTreeSet<(&str, RuleId, &str)> = reports
        .iter()
        .flat_map(|r| {
            r.violations
                .iter()
                .map(move |v| (r.source.as_str(), v.rule, v.path.as_str()))
        })
        .collect();

    let mut counts: BTreeMap<RuleId, (usize, usize, usize)> = BTreeMap::new();
    for label in gold {
        let hit = reported.contains(&(label.file.as_str(), label.rule, label.path.as_str()));
        let c = counts.entry(label.rule).or_default();
        match (label.expected, hit) {
            (true, true) => c.0 += 1,
            (false, true) => c.1 += 1,
            (true, false) => c.2 += 1,
            (false, false) => {}
        }
    }

    let per_rule: Vec<EffectivenessScore> = RuleId::ALL
        .into_iter()
        .map(|id| {
            let (tp, fp, fn_) = counts.get(&id).copied().unwrap_or_default();
            EffectivenessScore::new(Some(id), tp, fp, fn_)
        })
        .collect();
    let sum = |f: fn(&EffectivenessScore) -> usize| per_rule.iter().map(f).sum::<usize>();
    let total = EffectivenessScore::new(
        None,
        sum(|s| s.true_positives),
        sum(|s| s.false_positives),
        sum(|s| s.false_negatives),
    );
    ScoreTable { per_rule, total }
}

/// Columns: rule, tp, fp, fn, precision, recall. Undefined ratios are empty.
pub fn write_scores_csv<W: Write>(table: &ScoreTable, out: W) -> Result<(), BenchError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["rule", "tp", "fp", "fn", "precision", "recall"])?;
    let fmt = |x: Option<f64>| x.map(|v| format!("{v:.4}")).unwrap_or_default();
    for s in table.per_rule.iter().chain(std::iter::once(&table.total)) {
        w.write_record([
            s.rule.map_or("TOTAL", RuleId::as_str).to_string(),
            s.true_positives.to_string(),
            s.false_positives.to_string(),
            s.false_negatives.to_string(),
            fmt(s.precision),
            fmt(s.recall),
        ])?;
    }
    w.flush().map_err(io_error("<csv output>"))?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::JsonViolation;
    use crate::rules::{Category, Severity};

    fn report(file: &str, hits: &[(RuleId, &str)]) -> JsonReport {
        JsonReport {
            source: file.into(),
            violations: hits
                .iter()
                .map(|(rule, path)| JsonViolation {
                    rule: *rule,
                    path: path.to_string(),
                    method: None,
                    line: 1,
                    message: "m".into(),
                    evidence: "e".into(),
                    severity: Severity::Warning,
                    category: Category::UriDesign,
                })
                .collect(),
            counts: BTreeMap::new(),
            warnings: vec![],
        }
    }

    fn label(file: &str, rule: RuleId, path: &str, expected: bool) -> GoldLabel {
        GoldLabel {
            file: file.into(),
            rule,
            path: path.into(),
            expected,
        }
    }

    fn four_expected() -> Vec<GoldLabel> {
        ["/a", "/b", "/c", "/d"]
            .iter()
            .map(|p| label("f", RuleId::Lowercase, p, true))
            .collect()
    }

    #[test]
    fn full_and_half_recall() {
        let gold = four_expected();
        let all = report(
            "f",
            &[
                (RuleId::Lowercase, "/a"),
                (RuleId::Lowercase, "/b"),
                (RuleId::Lowercase, "/c"),
                (RuleId::Lowercase, "/d"),
            ],
        );
        assert_eq!(score(&[all], &gold).rule(RuleId::Lowercase).recall, Some(1.0));
        let half = report("f", &[(RuleId::Lowercase, "/a"), (RuleId::Lowercase, "/c")]);
        let s = score(&[half], &gold);
        assert_eq!(s.rule(RuleId::Lowercase).recall, Some(0.5));
        assert_eq!(s.rule(RuleId::Lowercase).precision, Some(1.0));
    }

    #[test]
    fn report_on_negative_label_is_false_positive() {
        let gold = vec![label("f", RuleId::Hyphens, "/x", false)];
        let s = score(&[report("f", &[(RuleId::Hyphens, "/x")])], &gold);
        let h = s.rule(RuleId::Hyphens);
        assert_eq!((h.true_positives, h.false_positives), (0, 1));
        assert_eq!(h.precision, Some(0.0));
        assert_eq!(h.recall, None);
    }

    #[test]
    fn unlabeled_reports_are_excluded() {
        let s = score(&[report("f", &[(RuleId::Hyphens, "/zzz")])], &four_expected());
        assert_eq!(s.rule(RuleId::Hyphens).precision, None);
        assert_eq!(s.total.false_positives, 0);
        assert_eq!(s.total.false_negatives, 4);
    }

    #[test]
    fn order_independent() {
        let gold = four_expected();
        let r1 = report("f", &[(RuleId::Lowercase, "/a")]);
        let r2 = report("g", &[(RuleId::Lowercase, "/b")]);
        let mut rev = gold.clone();
        rev.reverse();
        assert_eq!(score(&[r1.clone(), r2.clone()], &gold), score(&[r2, r1], &rev));
    }

    #[test]
    fn gold_parsing() {
        let text = "{\"file\":\"f\",\"rule\":\"NoCRUDNames\",\"path\":\"/getX\",\"expected\":true}\n\n{\"file\":\"f\",\"rule\":\"RC401\",\"path\":\"/a\",\"expected\":false}\n";
        let g = read_gold(text.as_bytes()).unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(g[0].rule, RuleId::NoCrudNames);
        let dup = format!(
            "{}{}",
            text, "{\"file\":\"f\",\"rule\":\"RC401\",\"path\":\"/a\",\"expected\":true}\n"
        );
        assert!(matches!(
            read_gold(dup.as_bytes()),
            Err(BenchError::Gold { line: 4, .. })
        ));
        assert!(read_gold("{\"file\":1}".as_bytes()).is_err());
    }

    #[test]
    fn scores_csv() {
        let s = score(&[report("f", &[(RuleId::Lowercase, "/a")])], &four_expected());
        let mut buf = Vec::new();
        write_scores_csv(&s, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("rule,tp,fp,fn,precision,recall\nPluralNoun,0,0,0,,\n"));
        assert!(text.contains("Lowercase,1,0,3,1.0000,0.2500\n"));
        assert!(text.ends_with("TOTAL,1,0,3,1.0000,0.2500\n"));
    }
}
