//! The word dictionary that drives tokenization.
//!
//! Every known word belongs to one or more classes; a word may be ambiguous
//! ("is" is both a verb and a condition keyword) and the parser picks the
//! reading that fits the surrounding rule. Out-of-dictionary words are
//! literals — they carry data (names, type codes, dates) rather than grammar.
//!
//! Attribute nouns ("name", "type", "author", ...) classify as objects but
//! additionally carry an attribute marker: they refer to a column rather than
//! to a table or a search keyword.

use alloc::borrow::ToOwned;
use alloc::collections::{BTreeMap, BTreeSet};
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Word classes. The first seven mirror the classic lexer sets (digits,
/// numbers, subjects, verbs, objects, blanks, conditions); `Literal` is the
/// catch-all for out-of-dictionary words and `Filler` marks function words
/// the parser skips. `Digit` and `Blank` exist for completeness: whole-word
/// classification emits `Number` for digit runs, and blanks never survive
/// tokenization.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum TokenClass {
    Digit,
    Number,
    Subject,
    Verb,
    Object,
    Blank,
    Condition,
    Literal,
    Filler,
}

impl TokenClass {
    pub const ALL: [TokenClass; 9] = [
        TokenClass::Digit,
        TokenClass::Number,
        TokenClass::Subject,
        TokenClass::Verb,
        TokenClass::Object,
        TokenClass::Blank,
        TokenClass::Condition,
        TokenClass::Literal,
        TokenClass::Filler,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TokenClass::Digit => "Digit",
            TokenClass::Number => "Number",
            TokenClass::Subject => "Subject",
            TokenClass::Verb => "Verb",
            TokenClass::Object => "Object",
            TokenClass::Blank => "Blank",
            TokenClass::Condition => "Condition",
            TokenClass::Literal => "Literal",
            TokenClass::Filler => "Filler",
        }
    }

    fn bit(self) -> u16 {
        1 << self as u16
    }
}

impl fmt::Display for TokenClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A small copyable set of token classes.
#[derive(Clone, Copy, PartialEq, Eq, Default)]
pub struct ClassSet(u16);

impl ClassSet {
    pub const EMPTY: ClassSet = ClassSet(0);

    pub fn of(class: TokenClass) -> ClassSet {
        ClassSet(class.bit())
    }

    pub fn insert(&mut self, class: TokenClass) {
        self.0 |= class.bit();
    }

    pub fn with(mut self, class: TokenClass) -> ClassSet {
        self.insert(class);
        self
    }

    pub fn contains(self, class: TokenClass) -> bool {
        self.0 & class.bit() != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn iter(self) -> impl Iterator<Item = TokenClass> {
        TokenClass::ALL.into_iter().filter(move |c| self.contains(*c))
    }
}

impl fmt::Debug for ClassSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, c) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(c.name())?;
        }
        f.write_str("}")
    }
}

impl FromIterator<TokenClass> for ClassSet {
    fn from_iter<I: IntoIterator<Item = TokenClass>>(iter: I) -> Self {
        let mut set = ClassSet::EMPTY;
        for c in iter {
            set.insert(c);
        }
        set
    }
}

/// Errors raised while reading a lexicon file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LexiconError {
    /// A non-comment line is not of the form `class: word, word, ...`.
    MalformedLine { line: usize },
    /// The class name before the colon is not one we know.
    UnknownClass { line: usize, name: String },
}

impl fmt::Display for LexiconError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LexiconError::MalformedLine { line } => {
                write!(f, "lexicon line {line}: expected `class: word, word, ...`")
            }
            LexiconError::UnknownClass { line, name } => {
                write!(
                    f,
                    "lexicon line {line}: unknown word class `{name}` \
                     (expected subject, verb, object, attribute, condition or filler)"
                )
            }
        }
    }
}

impl core::error::Error for LexiconError {}

/// The word dictionary. Lookups are case-insensitive; all stored words are
/// case-folded.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Lexicon {
    entries: BTreeMap<String, ClassSet>,
    attributes: BTreeSet<String>,
}

impl Lexicon {
    pub fn empty() -> Lexicon {
        Lexicon::default()
    }

    /// Adds `word` to `class`, preserving any classes it already has.
    pub fn add(&mut self, word: &str, class: TokenClass) {
        let folded = word.to_lowercase();
        self.entries.entry(folded).or_insert(ClassSet::EMPTY).insert(class);
    }

    /// Adds an attribute noun: an object-class word that names a column.
    pub fn add_attribute(&mut self, word: &str) {
        let folded = word.to_lowercase();
        self.entries.entry(folded.clone()).or_insert(ClassSet::EMPTY).insert(TokenClass::Object);
        self.attributes.insert(folded);
    }

    /// True when `word` is a known attribute noun.
    pub fn is_attribute(&self, word: &str) -> bool {
        self.attributes.contains(&word.to_lowercase())
    }

    /// All dictionary words carrying `class`, in sorted order.
    pub fn words_in_class(&self, class: TokenClass) -> Vec<&str> {
        self.entries
            .iter()
            .filter(|(_, set)| set.contains(class))
            .map(|(w, _)| w.as_str())
            .collect()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// The built-in dictionary covering the product-data search domain: pronouns,
/// request verbs, catalog entity nouns, the domain keywords themselves, column
/// attribute nouns, condition keywords and skippable function words.
pub fn builtin_lexicon() -> Lexicon {
    let mut lex = Lexicon::empty();
    for w in ["i", "we", "he", "she", "they", "you", "it"] {
        lex.add(w, TokenClass::Subject);
    }
    for w in [
        "is", "am", "are", "need", "needs", "want", "wants", "look", "looking", "give",
        "searching", "find",
    ] {
        lex.add(w, TokenClass::Verb);
    }
    for w in [
        "document", "documents", "project", "projects", "product", "products", "person",
        "persons", "design", "designs", "pdm", "cad",
    ] {
        lex.add(w, TokenClass::Object);
    }
    for w in ["name", "type", "author", "date", "number", "title", "category"] {
        lex.add_attribute(w);
    }
    for w in [
        "where", "between", "equal", "equals", "and", "with", "is", "to", "greater", "less",
        "than",
    ] {
        lex.add(w, TokenClass::Condition);
    }
    for w in ["for", "a", "an", "the", "of", "me", "details"] {
        lex.add(w, TokenClass::Filler);
    }
    lex
}

/// Classifies a single word. Digit runs are numbers no matter what the
/// dictionary says; unknown words are literals. Never returns an empty set.
pub fn classify(lexicon: &Lexicon, word: &str) -> ClassSet {
    if !word.is_empty() && word.bytes().all(|b| b.is_ascii_digit()) {
        return ClassSet::of(TokenClass::Number);
    }
    let folded = word.to_lowercase();
    match lexicon.entries.get(&folded) {
        Some(set) if !set.is_empty() => *set,
        _ => ClassSet::of(TokenClass::Literal),
    }
}

/// Parses a lexicon file and merges it over the built-in dictionary.
///
/// One class per line: `verb: fetch, grab`. Classes are `subject`, `verb`,
/// `object`, `attribute`, `condition` and `filler`; `attribute` words are
/// object nouns with the attribute marker. `#` starts a comment; blank lines
/// are ignored.
pub fn load_lexicon(source: &str) -> Result<Lexicon, LexiconError> {
    let mut lex = builtin_lexicon();
    extend_lexicon(&mut lex, source)?;
    Ok(lex)
}

/// Applies lexicon-file directives to an existing dictionary.
pub fn extend_lexicon(lex: &mut Lexicon, source: &str) -> Result<(), LexiconError> {
    for (idx, raw_line) in source.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw_line.split_once('#') {
            Some((before, _)) => before,
            None => raw_line,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let (class_name, words) = line
            .split_once(':')
            .ok_or(LexiconError::MalformedLine { line: line_no })?;
        let class = match class_name.trim().to_lowercase().as_str() {
            "subject" => Some(TokenClass::Subject),
            "verb" => Some(TokenClass::Verb),
            "object" => Some(TokenClass::Object),
            "condition" => Some(TokenClass::Condition),
            "filler" => Some(TokenClass::Filler),
            "attribute" => None,
            other => {
                return Err(LexiconError::UnknownClass {
                    line: line_no,
                    name: other.to_owned(),
                })
            }
        };
        let mut any = false;
        for word in words.split(',') {
            let word = word.trim();
            if word.is_empty() {
                continue;
            }
            any = true;
            match class {
                Some(c) => lex.add(word, c),
                None => lex.add_attribute(word),
            }
        }
        if !any {
            return Err(LexiconError::MalformedLine { line: line_no });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_classifies_core_words() {
        let lex = builtin_lexicon();
        assert_eq!(classify(&lex, "I"), ClassSet::of(TokenClass::Subject));
        assert_eq!(
            classify(&lex, "is"),
            ClassSet::of(TokenClass::Verb).with(TokenClass::Condition)
        );
        assert_eq!(classify(&lex, "between"), ClassSet::of(TokenClass::Condition));
        assert_eq!(classify(&lex, "PDM"), ClassSet::of(TokenClass::Object));
        assert_eq!(classify(&lex, "123"), ClassSet::of(TokenClass::Number));
        assert_eq!(classify(&lex, "MotorEngine"), ClassSet::of(TokenClass::Literal));
    }

    #[test]
    fn attribute_nouns_are_flagged_objects() {
        let lex = builtin_lexicon();
        assert!(classify(&lex, "Type").contains(TokenClass::Object));
        assert!(lex.is_attribute("Type"));
        assert!(!lex.is_attribute("document"));
    }

    #[test]
    fn classification_folds_case() {
        let lex = builtin_lexicon();
        for word in ["pdm", "PDM", "Pdm", "pDm"] {
            assert_eq!(classify(&lex, word), ClassSet::of(TokenClass::Object));
        }
    }

    #[test]
    fn digit_runs_beat_the_dictionary() {
        let mut lex = builtin_lexicon();
        lex.add("42", TokenClass::Verb);
        assert_eq!(classify(&lex, "42"), ClassSet::of(TokenClass::Number));
    }

    #[test]
    fn load_extends_builtin() {
        let lex = load_lexicon("object: screw, bolt\nverb: FETCH\n# comment\n").unwrap();
        assert_eq!(classify(&lex, "screw"), ClassSet::of(TokenClass::Object));
        assert_eq!(classify(&lex, "fetch"), ClassSet::of(TokenClass::Verb));
        assert_eq!(classify(&lex, "want"), ClassSet::of(TokenClass::Verb));
    }

    #[test]
    fn load_attribute_class() {
        let lex = load_lexicon("attribute: weight").unwrap();
        assert!(lex.is_attribute("Weight"));
        assert!(classify(&lex, "weight").contains(TokenClass::Object));
    }

    #[test]
    fn empty_source_is_builtin() {
        let lex = load_lexicon("").unwrap();
        assert_eq!(lex.len(), builtin_lexicon().len());
    }

    #[test]
    fn malformed_line_reports_number() {
        assert_eq!(load_lexicon("verb fetch"), Err(LexiconError::MalformedLine { line: 1 }));
        assert_eq!(
            load_lexicon("\nnoun: screw"),
            Err(LexiconError::UnknownClass { line: 2, name: "noun".into() })
        );
    }

    #[test]
    fn merged_classes_accumulate() {
        let lex = load_lexicon("condition: below\nverb: below").unwrap();
        let set = classify(&lex, "below");
        assert!(set.contains(TokenClass::Condition) && set.contains(TokenClass::Verb));
    }
}
