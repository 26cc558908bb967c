use std::fs::File;
use std::io::Read;
use std::path::Path;

use super::{ClassifierError, LabeledSample, VerbLabel};

/// Reads a UTF-8 CSV corpus with header `label,text`.
pub fn read_corpus<R: Read>(reader: R) -> Result<Vec<LabeledSample>, ClassifierError> {
    let mut rdr = csv::ReaderBuilder::new().has_headers(true).from_reader(reader);
    let headers = rdr
        .headers()
        .map_err(|e| ClassifierError::Corpus(e.to_string()))?
        .clone();
    if headers.len() != 2 || &headers[0] != "label" || &headers[1] != "text" {
        return Err(ClassifierError::Corpus(
            "expected header \"label,text\"".to_string(),
        ));
    }
    let mut samples = Vec::new();
    for record in rdr.records() {
        let record = record.map_err(|e| ClassifierError::Corpus(e.to_string()))?;
        let line = record.position().map_or(0, |p| p.line());
        let label: VerbLabel = record[0]
            .trim()
            .parse()
            .map_err(|_| ClassifierError::Corpus(format!("line {line}: unknown label {:?}", &record[0])))?;
        let text = record[1].to_string();
        if label != VerbLabel::Invalid && text.trim().is_empty() {
            return Err(ClassifierError::Corpus(format!(
                "line {line}: empty text for label {label}"
            )));
        }
        samples.push(LabeledSample { text, label });
    }
    Ok(samples)
}

pub fn read_corpus_path(path: &Path) -> Result<Vec<LabeledSample>, ClassifierError> {
    let file = File::open(path).map_err(|source| ClassifierError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    read_corpus(file)
}
