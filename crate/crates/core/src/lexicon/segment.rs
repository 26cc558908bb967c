use thiserror::Error;

use super::Dictionary;

/// Cost charged per character of a chunk that is not a dictionary word.
pub const UNKNOWN_CHAR_PENALTY: f64 = 10.0;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SegmentError {
    #[error("token has no letters to segment")]
    EmptyToken,
}

/// Minimum-cost split of a token into words.
#[derive(Debug, Clone, PartialEq)]
pub struct Segmentation {
    pub words: Vec<String>,
    /// Sum of per-word costs; infinite when any chunk is unknown.
    pub cost: f64,
    /// The optimized objective, with unknown chunks charged
    /// [`UNKNOWN_CHAR_PENALTY`] per character. Equals `cost` when not residual.
    pub penalized_cost: f64,
    pub residual: bool,
}

/// Splits `token` into the cheapest sequence of dictionary words.
///
/// Non-letters are dropped and the rest lowercased. Each known word costs
/// `ln(rank * ln N)`; every chunk not in the dictionary costs
/// `UNKNOWN_CHAR_PENALTY * len`. Adjacent unknown chunks are merged in the
/// returned word list.
pub fn segment(token: &str, dictionary: &Dictionary) -> Result<Segmentation, SegmentError> {
    let norm: String = token
        .chars()
        .filter(|c| c.is_alphabetic())
        .flat_map(char::to_lowercase)
        .collect();
    if norm.is_empty() {
        return Err(SegmentError::EmptyToken);
    }
    let bounds: Vec<usize> = norm
        .char_indices()
        .map(|(i, _)| i)
        .chain(std::iter::once(norm.len()))
        .collect();
    let n = bounds.len() - 1;

    // best[i]: cheapest cost for the first i chars; back[i]: (start, known)
    let mut best = vec![f64::INFINITY; n + 1];
    let mut back = vec![(0usize, false); n + 1];
    best[0] = 0.0;
    for end in 1..=n {
        for start in 0..end {
            let chunk = &norm[bounds[start]..bounds[end]];
            let (chunk_cost, known) = match dictionary.word_cost(chunk) {
                Some(c) => (c, true),
                None => (UNKNOWN_CHAR_PENALTY * (end - start) as f64, false),
            };
            let candidate = best[start] + chunk_cost;
            if candidate < best[end] {
                best[end] = candidate;
                back[end] = (start, known);
            }
        }
    }

    let mut chunks = Vec::new();
    let mut end = n;
    while end > 0 {
        let (start, known) = back[end];
        chunks.push((&norm[bounds[start]..bounds[end]], known));
        end = start;
    }
    chunks.reverse();

    let mut words: Vec<String> = Vec::with_capacity(chunks.len());
    let mut residual = false;
    let mut prev_unknown = false;
    for (chunk, known) in chunks {
        if !known {
            residual = true;
            if prev_unknown {
                words.last_mut().expect("previous chunk").push_str(chunk);
                continue;
            }
        }
        words.push(chunk.to_string());
        prev_unknown = !known;
    }

    let penalized_cost = best[n];
    Ok(Segmentation {
        words,
        cost: if residual { f64::INFINITY } else { penalized_cost },
        penalized_cost,
        residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lexicon::Lexicon;

    #[test]
    fn splits_run_together_words() {
        let seg = Lexicon::shared().segment("applicationusers").unwrap();
        assert_eq!(seg.words, ["application", "users"]);
        assert!(!seg.residual);
        assert!(seg.cost.is_finite());
    }

    #[test]
    fn single_word_is_kept_whole() {
        let lex = Lexicon::shared();
        let seg = lex.segment("users").unwrap();
        assert_eq!(seg.words, ["users"]);
        assert_eq!(seg.cost, lex.frequency().word_cost("users").unwrap());
    }

    #[test]
    fn unknown_token_is_residual() {
        let seg = Lexicon::shared().segment("xqzt").unwrap();
        assert_eq!(seg.words, ["xqzt"]);
        assert!(seg.residual);
        assert!(seg.cost.is_infinite());
        assert_eq!(seg.penalized_cost, 40.0);
    }

    #[test]
    fn empty_token_is_an_error() {
        let d = Dictionary::from_words("t", ["a"]);
        assert_eq!(segment("", &d), Err(SegmentError::EmptyToken));
        assert_eq!(segment("123-_", &d), Err(SegmentError::EmptyToken));
    }

    #[test]
    fn strips_digits_and_case() {
        let d = Dictionary::from_words("t", ["user", "list", "x", "y", "z"]);
        let seg = segment("User2List", &d).unwrap();
        assert_eq!(seg.words, ["user", "list"]);
    }

    #[test]
    fn adjacent_unknown_chunks_are_merged() {
        let d = Dictionary::from_words("t", ["cat", "dog", "x", "y", "z"]);
        let seg = segment("catqqqdog", &d).unwrap();
        assert_eq!(seg.words, ["cat", "qqq", "dog"]);
        assert!(seg.residual);
    }
}
