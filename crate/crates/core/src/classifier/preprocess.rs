use std::collections::HashSet;
use std::sync::OnceLock;

use super::porter::stem;
use crate::lexicon::Dictionary;

/// Identifies the tokenizer, stop-word list and stemmer. Models record it so
/// a model trained with different preprocessing is rejected at load time.
pub const PREPROCESSING_VERSION: &str = "porter-classic/stopwords-154/v1";

const STOP_WORDS: &str = include_str!("../../data/stop_words.txt");

fn stop_words() -> &'static HashSet<String> {
    static WORDS: OnceLock<HashSet<String>> = OnceLock::new();
    WORDS.get_or_init(|| {
        Dictionary::from_text("stop_words", STOP_WORDS)
            .iter()
            .map(str::to_string)
            .collect()
    })
}

pub fn is_stop_word(word: &str) -> bool {
    stop_words().contains(word)
}

/// Lowercases, drops everything but letters, removes stop words and stems.
pub fn preprocess(text: &str) -> Vec<String> {
    let lowered = text.to_lowercase();
    lowered
        .split(|c: char| !c.is_alphabetic())
        .filter(|w| !w.is_empty() && !is_stop_word(w))
        .map(stem)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pets_example() {
        assert_eq!(preprocess("Returns the list of pets"), ["return", "list", "pet"]);
    }

    #[test]
    fn empty_and_stop_word_only_inputs() {
        assert!(preprocess("").is_empty());
        assert!(preprocess("The a an of").is_empty());
        assert!(preprocess("  ... 42 ?!").is_empty());
    }

    #[test]
    fn punctuation_and_digits_split_words() {
        assert_eq!(preprocess("Delete user#42,forever"), ["delet", "user", "forev"]);
    }

    #[test]
    fn stop_word_list_is_loaded() {
        assert!(stop_words().len() > 100);
        assert!(is_stop_word("the"));
        assert!(!is_stop_word("delete"));
    }
}
