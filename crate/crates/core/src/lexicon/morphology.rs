use serde::{Deserialize, Serialize};

use super::Lexicon;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GrammaticalNumber {
    Singular,
    Plural,
    /// Same form in singular and plural ("species", "series").
    Invariant,
    /// Out of vocabulary.
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordSense {
    pub token: String,
    pub is_noun: bool,
    pub is_verb: bool,
    pub number: GrammaticalNumber,
}

// Singular nouns ending in "s" that the suffix rules would call plural.
const SINGULAR_S_WORDS: &[&str] = &[
    "status",
    "bus",
    "analysis",
    "gas",
    "lens",
    "atlas",
    "canvas",
    "alias",
    "bias",
    "chaos",
    "cosmos",
    "ethos",
    "kudos",
    "pathos",
    "iris",
    "tennis",
    "christmas",
    "dns",
    "sms",
    "mms",
    "os",
    "ios",
    "aws",
    "gps",
    "http",
    "https",
    "cors",
    "nfs",
    "saas",
    "paas",
    "iaas",
    "faas",
    "virus",
    "campus",
    "census",
    "corpus",
    "bonus",
    "focus",
    "genus",
    "surplus",
    "apparatus",
    "asbestos",
    "plus",
    "minus",
    "octopus",
    "platypus",
    "thesaurus",
    "walrus",
    "circus",
    "citrus",
    "consensus",
    "prospectus",
    "sinus",
    "stylus",
    "onus",
    "omnibus",
    "syllabus",
    "yes",
    "this",
    "his",
    "has",
    "was",
    "is",
    "us",
    "thus",
    "bis",
    "redis",
    "kubernetes",
];

// Nouns ending in "u" whose "-us" form is a regular plural.
const U_STEMS: &[&str] = &[
    "menu",
    "guru",
    "emu",
    "tofu",
    "haiku",
    "tutu",
    "bayou",
    "gnu",
    "kudzu",
    "zebu",
    "snafu",
    "impromptu",
    "tiramisu",
    "sudoku",
    "cpu",
    "gpu",
    "sku",
    "tpu",
    "mfu",
    "ecu",
    "vu",
];

impl Lexicon {
    fn in_vocabulary(&self, word: &str) -> bool {
        self.frequency.contains(word)
    }

    /// Grammatical number and part-of-speech flags of a single word.
    ///
    /// Tables take precedence over suffix rules: irregular plurals and
    /// singulars, then uncountable nouns, then invariant nouns.
    pub fn classify_word(&self, token: &str) -> WordSense {
        let t = token.trim().to_lowercase();
        let is_verb = self.verbs.contains(&t);
        let number = self.number_of(&t);
        WordSense {
            is_noun: number != GrammaticalNumber::Unknown,
            is_verb,
            number,
            token: t,
        }
    }

    fn number_of(&self, t: &str) -> GrammaticalNumber {
        use GrammaticalNumber::*;
        if t.is_empty() {
            return Unknown;
        }
        if self.irregular_plural.contains_key(t) {
            return Plural;
        }
        if self.irregular_singular.contains_key(t) {
            return Singular;
        }
        if let Some(n) = self.uncountable.get(t) {
            return *n;
        }
        if self.invariant.contains(t) {
            return Invariant;
        }
        if !self.in_vocabulary(t) {
            return Unknown;
        }
        if SINGULAR_S_WORDS.contains(&t) || t.ends_with("ss") {
            return Singular;
        }
        if t.ends_with("us") {
            let u_stem = &t[..t.len() - 1];
            return if U_STEMS.contains(&u_stem) {
                Plural
            } else {
                Singular
            };
        }
        if t.ends_with("is") {
            let stem = &t[..t.len() - 1];
            if t.ends_with("sis") || t.ends_with("xis") || stem.len() < 3 || !self.in_vocabulary(stem) {
                return Singular;
            }
            return Plural;
        }
        if t.len() > 4 && t.ends_with("ies") {
            return Plural;
        }
        if t.len() >= 3 && t.ends_with('s') {
            let stem_s = &t[..t.len() - 1];
            let stem_es = t.strip_suffix("es");
            if self.in_vocabulary(stem_s)
                || stem_es.is_some_and(|s| s.len() >= 2 && self.in_vocabulary(s))
                || self.irregular_singular.contains_key(stem_s)
            {
                return Plural;
            }
            return Singular;
        }
        Singular
    }
}
