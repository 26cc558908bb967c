//! Word lists and morphology services shared by the URI rules.
//!
//! All dictionaries are plain UTF-8 text, one entry per line, with `#`
//! comments. The standard set is compiled into the binary; a directory with
//! the same file names can be loaded instead.

mod dictionary;
mod matchers;
mod morphology;
mod segment;
mod tokens;

use std::collections::HashMap;
use std::fs;
use std::path::{Path, PathBuf};
use std::sync::OnceLock;

use thiserror::Error;

pub use dictionary::Dictionary;
pub use matchers::DOTLESS_FORMATS;
pub use morphology::{GrammaticalNumber, WordSense};
pub use segment::{segment, SegmentError, Segmentation, UNKNOWN_CHAR_PENALTY};
pub use tokens::{is_template, split_words, strip_templates};

pub const EXTENSIONS_FILE: &str = "extensions.txt";
pub const CRUD_FILE: &str = "crud.txt";
pub const CRUD_ALLOWLIST_FILE: &str = "crud_allowlist.txt";
pub const FREQUENCY_FILE: &str = "words_by_frequency.txt";
pub const IRREGULAR_FILE: &str = "irregular_nouns.txt";
pub const INVARIANT_FILE: &str = "invariant_nouns.txt";
pub const UNCOUNTABLE_FILE: &str = "uncountable_nouns.txt";
pub const VERBS_FILE: &str = "verbs.txt";

/// Environment variable naming the extra word list used by the large profile.
pub const LARGE_DICTIONARY_ENV: &str = "API_RULER_LARGE_DICT";

const STD_EXTENSIONS: &str = include_str!("../../data/extensions.txt");
const STD_CRUD: &str = include_str!("../../data/crud.txt");
const STD_CRUD_ALLOWLIST: &str = include_str!("../../data/crud_allowlist.txt");
const STD_FREQUENCY: &str = include_str!("../../data/words_by_frequency.txt");
const STD_IRREGULAR: &str = include_str!("../../data/irregular_nouns.txt");
const STD_INVARIANT: &str = include_str!("../../data/invariant_nouns.txt");
const STD_UNCOUNTABLE: &str = include_str!("../../data/uncountable_nouns.txt");
const STD_VERBS: &str = include_str!("../../data/verbs.txt");

#[derive(Debug, Error)]
pub enum LexiconError {
    #[error("cannot read dictionary {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("dictionary {0} is empty")]
    Empty(String),
    #[error("malformed line {line} in {name}: {text:?}")]
    Malformed { name: String, line: usize, text: String },
    #[error("large dictionary requested but {LARGE_DICTIONARY_ENV} is not set")]
    LargeDictionaryUnavailable,
}

/// Which frequency dictionary backs word segmentation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DictionaryProfile {
    #[default]
    Standard,
    Large,
}

/// Immutable bundle of every word list the rules consult.
#[derive(Debug, Clone)]
pub struct Lexicon {
    pub(crate) frequency: Dictionary,
    pub(crate) extensions: Dictionary,
    /// CRUD tokens, longest first so prefixes resolve to the most specific verb.
    pub(crate) crud: Vec<String>,
    pub(crate) crud_allowlist: Dictionary,
    pub(crate) irregular_singular: HashMap<String, String>,
    pub(crate) irregular_plural: HashMap<String, String>,
    pub(crate) invariant: Dictionary,
    pub(crate) uncountable: HashMap<String, GrammaticalNumber>,
    pub(crate) verbs: Dictionary,
}

struct Sources<'a> {
    extensions: &'a str,
    crud: &'a str,
    crud_allowlist: &'a str,
    frequency: &'a str,
    irregular: &'a str,
    invariant: &'a str,
    uncountable: &'a str,
    verbs: &'a str,
}

impl Lexicon {
    /// Builds the lexicon shipped with the crate.
    pub fn standard() -> Self {
        Self::from_sources(Sources {
            extensions: STD_EXTENSIONS,
            crud: STD_CRUD,
            crud_allowlist: STD_CRUD_ALLOWLIST,
            frequency: STD_FREQUENCY,
            irregular: STD_IRREGULAR,
            invariant: STD_INVARIANT,
            uncountable: STD_UNCOUNTABLE,
            verbs: STD_VERBS,
        })
        .expect("shipped dictionaries are well-formed")
    }

    /// Process-wide shared copy of [`Lexicon::standard`].
    pub fn shared() -> &'static Lexicon {
        static SHARED: OnceLock<Lexicon> = OnceLock::new();
        SHARED.get_or_init(Lexicon::standard)
    }

    /// Loads all eight dictionary files from `dir`.
    pub fn load_dir(dir: &Path) -> Result<Self, LexiconError> {
        let read = |name: &str| {
            let path = dir.join(name);
            fs::read_to_string(&path).map_err(|source| LexiconError::Io { path, source })
        };
        let extensions = read(EXTENSIONS_FILE)?;
        let crud = read(CRUD_FILE)?;
        let crud_allowlist = read(CRUD_ALLOWLIST_FILE)?;
        let frequency = read(FREQUENCY_FILE)?;
        let irregular = read(IRREGULAR_FILE)?;
        let invariant = read(INVARIANT_FILE)?;
        let uncountable = read(UNCOUNTABLE_FILE)?;
        let verbs = read(VERBS_FILE)?;
        Self::from_sources(Sources {
            extensions: &extensions,
            crud: &crud,
            crud_allowlist: &crud_allowlist,
            frequency: &frequency,
            irregular: &irregular,
            invariant: &invariant,
            uncountable: &uncountable,
            verbs: &verbs,
        })
    }

    /// Resolves a profile to a lexicon. `Large` appends the word list named
    /// by [`LARGE_DICTIONARY_ENV`] (or `large_path`) after the standard ranks.
    pub fn for_profile(profile: DictionaryProfile, large_path: Option<&Path>) -> Result<Self, LexiconError> {
        match profile {
            DictionaryProfile::Standard => Ok(Self::shared().clone()),
            DictionaryProfile::Large => {
                let path = match large_path {
                    Some(p) => p.to_path_buf(),
                    None => std::env::var_os(LARGE_DICTIONARY_ENV)
                        .map(PathBuf::from)
                        .ok_or(LexiconError::LargeDictionaryUnavailable)?,
                };
                let extra = fs::read_to_string(&path).map_err(|source| LexiconError::Io { path, source })?;
                let mut lexicon = Self::shared().clone();
                lexicon.frequency.extend_ranked(&extra);
                Ok(lexicon)
            }
        }
    }

    fn from_sources(src: Sources<'_>) -> Result<Self, LexiconError> {
        let frequency = Dictionary::ranked("words_by_frequency", src.frequency);
        let extensions = Dictionary::from_text("extensions", src.extensions);
        let crud_dict = Dictionary::ranked("crud", src.crud);
        let crud_allowlist = Dictionary::from_text("crud_allowlist", src.crud_allowlist);
        let invariant = Dictionary::from_text("invariant_nouns", src.invariant);
        let verbs = Dictionary::from_text("verbs", src.verbs);
        for d in [&frequency, &extensions, &crud_dict, &verbs] {
            if d.is_empty() {
                return Err(LexiconError::Empty(d.name().to_string()));
            }
        }

        let mut crud: Vec<String> = crud_dict.words_by_rank().map(str::to_string).collect();
        crud.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));

        let mut irregular_singular = HashMap::new();
        let mut irregular_plural = HashMap::new();
        for (line, text) in dictionary::content_lines(src.irregular) {
            let mut cols = text.split_whitespace();
            match (cols.next(), cols.next(), cols.next()) {
                (Some(s), Some(p), None) => {
                    let (s, p) = (s.to_lowercase(), p.to_lowercase());
                    irregular_singular.insert(s.clone(), p.clone());
                    irregular_plural.insert(p, s);
                }
                _ => {
                    return Err(LexiconError::Malformed {
                        name: IRREGULAR_FILE.into(),
                        line,
                        text: text.into(),
                    })
                }
            }
        }

        let mut uncountable = HashMap::new();
        for (line, text) in dictionary::content_lines(src.uncountable) {
            let mut cols = text.split_whitespace();
            let word = cols.next().unwrap_or_default().to_lowercase();
            let number = match cols.next() {
                None | Some("singular") => GrammaticalNumber::Singular,
                Some("invariant") => GrammaticalNumber::Invariant,
                Some(_) => {
                    return Err(LexiconError::Malformed {
                        name: UNCOUNTABLE_FILE.into(),
                        line,
                        text: text.into(),
                    })
                }
            };
            uncountable.insert(word, number);
        }

        Ok(Lexicon {
            frequency,
            extensions,
            crud,
            crud_allowlist,
            irregular_singular,
            irregular_plural,
            invariant,
            uncountable,
            verbs,
        })
    }

    pub fn frequency(&self) -> &Dictionary {
        &self.frequency
    }

    pub fn extensions(&self) -> &Dictionary {
        &self.extensions
    }

    pub fn crud_tokens(&self) -> &[String] {
        &self.crud
    }

    pub fn crud_allowlist(&self) -> &Dictionary {
        &self.crud_allowlist
    }

    pub fn verbs(&self) -> &Dictionary {
        &self.verbs
    }

    pub fn invariant_nouns(&self) -> &Dictionary {
        &self.invariant
    }

    pub fn irregular_pairs(&self) -> impl Iterator<Item = (&str, &str)> {
        self.irregular_singular
            .iter()
            .map(|(s, p)| (s.as_str(), p.as_str()))
    }

    pub fn uncountable_nouns(&self) -> impl Iterator<Item = (&str, GrammaticalNumber)> {
        self.uncountable.iter().map(|(w, n)| (w.as_str(), *n))
    }

    /// Segments a token with this lexicon's frequency dictionary.
    pub fn segment(&self, token: &str) -> Result<Segmentation, SegmentError> {
        segment(token, &self.frequency)
    }

    pub fn is_verb(&self, word: &str) -> bool {
        self.verbs.contains(&word.to_lowercase())
    }

    /// Words of a URI segment, segmenting single unseparated chunks that are
    /// not dictionary words themselves.
    pub fn segment_words(&self, segment: &str) -> Vec<String> {
        let words = split_words(segment);
        if words.len() == 1 && !self.frequency.contains(&words[0]) {
            if let Ok(seg) = self.segment(&words[0]) {
                if !seg.residual {
                    return seg.words;
                }
            }
        }
        words
    }
}
