use std::collections::HashMap;

/// A named set of lowercase words, optionally ranked by frequency.
///
/// For ranked dictionaries the rank of a word is its position in the source
/// list (1 = most frequent); duplicates keep their first rank.
#[derive(Debug, Clone)]
pub struct Dictionary {
    name: String,
    words: Vec<String>,
    index: HashMap<String, u32>,
    ranked: bool,
}

pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

impl Dictionary {
    /// Unranked word set.
    pub fn from_text(name: &str, text: &str) -> Self {
        let mut d = Self::ranked(name, text);
        d.ranked = false;
        d
    }

    /// Frequency-ordered list, most frequent first.
    pub fn ranked(name: &str, text: &str) -> Self {
        let mut d = Dictionary {
            name: name.to_string(),
            words: Vec::new(),
            index: HashMap::new(),
            ranked: true,
        };
        d.extend_ranked(text);
        d
    }

    pub fn from_words<I, S>(name: &str, words: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let text = words
            .into_iter()
            .map(|w| w.as_ref().to_string())
            .collect::<Vec<_>>()
            .join("\n");
        Self::ranked(name, &text)
    }

    /// Appends entries after the current last rank, skipping words already present.
    pub(crate) fn extend_ranked(&mut self, text: &str) {
        for (_, line) in content_lines(text) {
            let word = line.to_lowercase();
            if self.index.contains_key(&word) {
                continue;
            }
            self.words.push(word.clone());
            self.index.insert(word, self.words.len() as u32);
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn contains(&self, word: &str) -> bool {
        self.index.contains_key(word)
    }

    pub fn rank(&self, word: &str) -> Option<u32> {
        if self.ranked {
            self.index.get(word).copied()
        } else {
            None
        }
    }

    pub fn is_ranked(&self) -> bool {
        self.ranked
    }

    pub fn iter(&self) -> impl Iterator<Item = &str> {
        self.words.iter().map(String::as_str)
    }

    pub(crate) fn words_by_rank(&self) -> impl Iterator<Item = &str> {
        self.iter()
    }

    /// Zipf cost `ln(rank * ln N)` of a known word.
    pub fn word_cost(&self, word: &str) -> Option<f64> {
        let n = self.words.len() as f64;
        self.index.get(word).map(|&rank| (rank as f64 * n.ln()).ln())
    }
}
