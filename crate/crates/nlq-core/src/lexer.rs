//! Whitespace tokenizer with dictionary classification.
//!
//! Splitting is deliberately simple: whitespace separates tokens, surrounding
//! punctuation is stripped, and whatever remains is classified against the
//! lexicon. Interior punctuation survives, so values like `Waf.Papan` or
//! `01-09-08` stay in one piece.

use alloc::string::String;
use alloc::vec::Vec;

use crate::lexicon::{classify, ClassSet, Lexicon, TokenClass};

/// Punctuation stripped from token edges (never from the middle).
const EDGE_PUNCT: &[char] = &['.', ',', ';', ':', '?', '!', '"', '\'', '(', ')'];

/// One classified word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    /// The word as written, punctuation-trimmed but case-preserved.
    pub surface: String,
    /// Case-folded form used for all matching.
    pub normalized: String,
    /// Dictionary classes (never empty).
    pub classes: ClassSet,
    /// True for attribute nouns — object words naming a column.
    pub attribute: bool,
    /// Byte range of `surface` within the original input.
    pub span: (usize, usize),
}

impl Token {
    pub fn is(&self, class: TokenClass) -> bool {
        self.classes.contains(class)
    }

    /// Normalized-text equality, the usual way grammar keywords are matched.
    pub fn word_is(&self, word: &str) -> bool {
        self.normalized == word
    }
}

/// The classified input, in source order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TokenStream {
    pub source: String,
    pub tokens: Vec<Token>,
}

impl TokenStream {
    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }
}

/// Tokenizes `input`: split on whitespace runs, trim edge punctuation, drop
/// fragments that were pure punctuation, classify the rest.
pub fn tokenize(input: &str, lexicon: &Lexicon) -> TokenStream {
    let mut tokens = Vec::new();
    let mut offset = 0;
    for chunk in input.split_whitespace() {
        // split_whitespace yields substrings of `input`; recover the offset by
        // searching forward from the previous chunk.
        let start = match input[offset..].find(chunk) {
            Some(rel) => offset + rel,
            None => continue,
        };
        offset = start + chunk.len();

        let trimmed = chunk.trim_matches(EDGE_PUNCT);
        if trimmed.is_empty() {
            continue;
        }
        let lead = chunk.len() - chunk.trim_start_matches(EDGE_PUNCT).len();
        let span = (start + lead, start + lead + trimmed.len());
        let normalized = trimmed.to_lowercase();
        let classes = classify(lexicon, trimmed);
        let attribute = classes.contains(TokenClass::Object) && lexicon.is_attribute(&normalized);
        tokens.push(Token {
            surface: String::from(trimmed),
            normalized,
            classes,
            attribute,
            span,
        });
    }
    TokenStream { source: String::from(input), tokens }
}
