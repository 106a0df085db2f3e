//! Recursive-descent parser over classified tokens.
//!
//! The grammar is small and flat. Five direct rules cover condition-free
//! statements (`astmt` subjects, `bstmt` verbs, `cstmt` bare objects, `stmt1`
//! subject+verb+object, `stmt2` verb+object) and four conditional rules cover
//! statements with a trailing condition tail (`condeq` where/is/equal clauses,
//! `condweq` with-clauses, `condbt` between-ranges, `condqbt` an equality
//! fused with a range). Filler words are skipped before matching.
//!
//! Ambiguous words are read by position: "is" after the subject run is a
//! verb, "is" after the object run opens a condition clause; "and" joins
//! objects in the head, joins alternative values inside a clause, joins range
//! bounds inside `between`, and starts a new clause when an attribute noun
//! follows.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::lexer::{Token, TokenStream};
use crate::lexicon::TokenClass;

// --- public types -----------------------------------------------------------

/// Grammar rule identifiers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RuleId {
    Astmt,
    Bstmt,
    Cstmt,
    Stmt1,
    Stmt2,
    CondBt,
    CondEq,
    CondWEq,
    CondQBt,
}

impl RuleId {
    pub fn name(self) -> &'static str {
        match self {
            RuleId::Astmt => "Astmt",
            RuleId::Bstmt => "Bstmt",
            RuleId::Cstmt => "Cstmt",
            RuleId::Stmt1 => "Stmt1",
            RuleId::Stmt2 => "Stmt2",
            RuleId::CondBt => "CondBt",
            RuleId::CondEq => "CondEq",
            RuleId::CondWEq => "CondWEq",
            RuleId::CondQBt => "CondQBt",
        }
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The four searchable statement shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StatementKind {
    /// Bare keywords: "PDM", "CAD Designs".
    Keyword,
    /// Verb-led request without a subject: "want PDM".
    ShortObjective,
    /// Full subject-verb-object sentence: "I am looking for PDM".
    SimpleObjective,
    /// Any statement with a condition tail.
    MultiCondition,
}

impl StatementKind {
    pub fn name(self) -> &'static str {
        match self {
            StatementKind::Keyword => "Keyword",
            StatementKind::ShortObjective => "ShortObjective",
            StatementKind::SimpleObjective => "SimpleObjective",
            StatementKind::MultiCondition => "MultiCondition",
        }
    }
}

impl fmt::Display for StatementKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Condition flavors as written. `Greater`/`Less` versus `GreaterThan`/
/// `LessThan` record whether "than" was spelled out; they compare the same.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ConditionKind {
    Between,
    Equal,
    Greater,
    Less,
    GreaterThan,
    LessThan,
    With,
}

impl ConditionKind {
    pub fn name(self) -> &'static str {
        match self {
            ConditionKind::Between => "Between",
            ConditionKind::Equal => "Equal",
            ConditionKind::Greater => "Greater",
            ConditionKind::Less => "Less",
            ConditionKind::GreaterThan => "GreaterThan",
            ConditionKind::LessThan => "LessThan",
            ConditionKind::With => "With",
        }
    }

    fn is_comparison(self) -> bool {
        matches!(
            self,
            ConditionKind::Greater
                | ConditionKind::Less
                | ConditionKind::GreaterThan
                | ConditionKind::LessThan
        )
    }
}

impl fmt::Display for ConditionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One parsed condition: `kind` applied to `attribute` (absent when the
/// clause named no column — semantics then treats the values as keywords)
/// with one or more values. Between clauses always have exactly two values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionClause {
    pub kind: ConditionKind,
    pub attribute: Option<Token>,
    pub values: Vec<Token>,
}

/// A parsed query statement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Statement {
    pub kind: StatementKind,
    pub matched_rule: RuleId,
    pub subject: Vec<Token>,
    pub verbs: Vec<Token>,
    /// Head objects plus any stray object/literal tokens found inside
    /// condition clauses (entity mentions, extra keywords).
    pub objects: Vec<Token>,
    pub conditions: Vec<ConditionClause>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    /// Nothing left after dropping filler words.
    EmptyQuery,
    /// The stream fits no production; `span` marks where matching failed.
    NoRuleMatched { span: (usize, usize), found: String, reason: &'static str },
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::EmptyQuery => f.write_str("empty query"),
            ParseError::NoRuleMatched { span, found, reason } => {
                write!(f, "no grammar rule matches near `{found}` (bytes {}..{}): {reason}", span.0, span.1)
            }
        }
    }
}

impl core::error::Error for ParseError {}

// --- parsing ----------------------------------------------------------------

pub type ParseResult<T> = Result<T, ParseError>;

fn err_at(tok: &Token, reason: &'static str) -> ParseError {
    ParseError::NoRuleMatched { span: tok.span, found: tok.surface.clone(), reason }
}

fn is_value_token(tok: &Token) -> bool {
    !tok.attribute
        && !tok.is(TokenClass::Condition)
        && (tok.is(TokenClass::Object) || tok.is(TokenClass::Literal) || tok.is(TokenClass::Number))
}

/// Parses a token stream into a statement, trying conditional rules before
/// direct ones (a stream with a condition tail never degrades to a direct
/// match). Filler tokens are skipped.
pub fn parse(stream: &TokenStream) -> ParseResult<Statement> {
    let toks: Vec<&Token> = stream
        .tokens
        .iter()
        .filter(|t| !t.is(TokenClass::Filler))
        .collect();
    if toks.is_empty() {
        return Err(ParseError::EmptyQuery);
    }

    let (head, rest) = parse_head(&toks);
    if rest == toks.len() {
        return direct_statement(head);
    }

    // A condition tail follows; the head must be stmt1- or stmt2-shaped.
    let first = toks[rest];
    if !first.is(TokenClass::Condition) {
        return Err(err_at(first, "expected a condition keyword after the statement head"));
    }
    if head.verbs.is_empty() || head.objects.is_empty() {
        return Err(err_at(first, "a condition clause needs a verb-and-object head before it"));
    }
    let tail = parse_tail(&toks[rest..])?;

    let rule = if tail.saw_between && (tail.saw_eq || tail.saw_with) {
        RuleId::CondQBt
    } else if tail.saw_with {
        RuleId::CondWEq
    } else if tail.saw_between {
        RuleId::CondBt
    } else {
        RuleId::CondEq
    };

    let mut objects: Vec<Token> = head.objects.into_iter().cloned().collect();
    objects.extend(tail.strays);
    Ok(Statement {
        kind: StatementKind::MultiCondition,
        matched_rule: rule,
        subject: head.subject.into_iter().cloned().collect(),
        verbs: head.verbs.into_iter().cloned().collect(),
        objects,
        conditions: tail.clauses,
    })
}

/// Tests a stream against one specific rule. Direct word-class rules
/// (`Astmt`, `Bstmt`) are pure class runs; the statement-producing rules
/// match exactly when `parse` would assign them.
pub fn match_rule(stream: &TokenStream, rule: RuleId) -> bool {
    let toks: Vec<&Token> = stream
        .tokens
        .iter()
        .filter(|t| !t.is(TokenClass::Filler))
        .collect();
    if toks.is_empty() {
        return false;
    }
    match rule {
        RuleId::Astmt => toks.iter().all(|t| t.is(TokenClass::Subject)),
        RuleId::Bstmt => toks.iter().all(|t| t.is(TokenClass::Verb)),
        _ => matches!(parse(stream), Ok(stmt) if stmt.matched_rule == rule),
    }
}

// --- head -------------------------------------------------------------------

struct Head<'a> {
    subject: Vec<&'a Token>,
    verbs: Vec<&'a Token>,
    objects: Vec<&'a Token>,
}

/// Greedy subject / verb / object runs. "and" between head objects extends
/// the object list ("Product and Project Document") as long as no attribute
/// noun follows — an attribute after "and" belongs to a condition clause.
fn parse_head<'a>(toks: &[&'a Token]) -> (Head<'a>, usize) {
    let mut i = 0;
    let mut subject = Vec::new();
    while i < toks.len() && toks[i].is(TokenClass::Subject) {
        subject.push(toks[i]);
        i += 1;
    }
    let mut verbs = Vec::new();
    while i < toks.len() && toks[i].is(TokenClass::Verb) {
        verbs.push(toks[i]);
        i += 1;
    }
    let mut objects = Vec::new();
    loop {
        if i < toks.len()
            && !toks[i].is(TokenClass::Condition)
            && (toks[i].is(TokenClass::Object) || toks[i].is(TokenClass::Literal))
        {
            objects.push(toks[i]);
            i += 1;
        } else if i + 1 < toks.len()
            && !objects.is_empty()
            && toks[i].word_is("and")
            && is_value_token(toks[i + 1])
        {
            i += 1; // absorb the joiner, keep scanning objects
        } else {
            break;
        }
    }
    (Head { subject, verbs, objects }, i)
}

fn direct_statement(head: Head<'_>) -> ParseResult<Statement> {
    let Head { subject, verbs, objects } = head;
    let (kind, rule) = match (!subject.is_empty(), !verbs.is_empty(), !objects.is_empty()) {
        (true, true, true) => (StatementKind::SimpleObjective, RuleId::Stmt1),
        (false, true, true) => (StatementKind::ShortObjective, RuleId::Stmt2),
        (false, false, true) => (StatementKind::Keyword, RuleId::Cstmt),
        (_, _, false) => {
            let last = subject.iter().chain(&verbs).last().expect("non-empty stream");
            return Err(err_at(last, "statement has no object to search for"));
        }
        (true, false, true) => {
            return Err(err_at(subject[0], "statement has a subject but no verb"));
        }
    };
    Ok(Statement {
        kind,
        matched_rule: rule,
        subject: subject.into_iter().cloned().collect(),
        verbs: verbs.into_iter().cloned().collect(),
        objects: objects.into_iter().cloned().collect(),
        conditions: Vec::new(),
    })
}

// --- condition tail ---------------------------------------------------------

struct Tail {
    clauses: Vec<ConditionClause>,
    strays: Vec<Token>,
    saw_with: bool,
    saw_eq: bool,
    saw_between: bool,
}

struct TailParser<'a> {
    toks: &'a [&'a Token],
    j: usize,
    out: Tail,
    in_with: bool,
    cur_attr: Option<&'a Token>,
    cur_kind: Option<ConditionKind>,
    cur_values: Vec<Token>,
}

impl<'a> TailParser<'a> {
    fn new(toks: &'a [&'a Token]) -> Self {
        TailParser {
            toks,
            j: 0,
            out: Tail {
                clauses: Vec::new(),
                strays: Vec::new(),
                saw_with: false,
                saw_eq: false,
                saw_between: false,
            },
            in_with: false,
            cur_attr: None,
            cur_kind: None,
            cur_values: Vec::new(),
        }
    }

    fn default_kind(&self) -> ConditionKind {
        if self.in_with { ConditionKind::With } else { ConditionKind::Equal }
    }

    /// Closes the clause under construction. An attribute without any value
    /// is a grammar error (nothing to compare against).
    fn flush(&mut self) -> ParseResult<()> {
        if self.cur_values.is_empty() {
            if let Some(attr) = self.cur_attr {
                return Err(err_at(attr, "attribute has no value to compare against"));
            }
            self.cur_kind = None;
            return Ok(());
        }
        let kind = self.cur_kind.take().unwrap_or_else(|| self.default_kind());
        self.out.clauses.push(ConditionClause {
            kind,
            attribute: self.cur_attr.take().cloned(),
            values: core::mem::take(&mut self.cur_values),
        });
        Ok(())
    }

    fn take_value(&mut self, reason: &'static str) -> ParseResult<Token> {
        match self.toks.get(self.j) {
            Some(t) if is_value_token(t) => {
                self.j += 1;
                Ok((*t).clone())
            }
            Some(t) => Err(err_at(t, reason)),
            None => Err(err_at(self.toks[self.toks.len() - 1], reason)),
        }
    }

    fn take_attribute_if_present(&mut self) -> Option<&'a Token> {
        match self.toks.get(self.j) {
            Some(t) if t.attribute => {
                self.j += 1;
                Some(t)
            }
            _ => None,
        }
    }

    /// `between [attr] v1 (and|to) v2 [attr]`. When an equality was pending
    /// ("<value> <attr> is between ...") and the range names its own
    /// attribute, the stray value before the pending attribute becomes that
    /// attribute's equality value — the fused equality-plus-range reading.
    fn parse_range(&mut self) -> ParseResult<()> {
        self.out.saw_between = true;
        if !self.cur_values.is_empty() {
            self.flush()?;
        }
        let inline = self.take_attribute_if_present();
        let v1 = self.take_value("expected a range start after `between`")?;
        match self.toks.get(self.j) {
            Some(t) if t.word_is("and") || t.word_is("to") => self.j += 1,
            Some(t) => return Err(err_at(t, "expected `and` (or `to`) between range bounds")),
            None => {
                return Err(err_at(
                    self.toks[self.toks.len() - 1],
                    "expected `and` (or `to`) between range bounds",
                ))
            }
        }
        let v2 = self.take_value("expected a range end")?;
        let trailing = self.take_attribute_if_present();

        let mut range_attr = inline.or(trailing);
        if let Some(pending) = self.cur_attr.take() {
            if range_attr.is_some() {
                match self.out.strays.pop() {
                    Some(stray) => {
                        let kind = self.cur_kind.take().unwrap_or_else(|| self.default_kind());
                        let kind = if kind.is_comparison() { ConditionKind::Equal } else { kind };
                        self.out.clauses.push(ConditionClause {
                            kind,
                            attribute: Some(pending.clone()),
                            values: alloc::vec![stray],
                        });
                    }
                    None => return Err(err_at(pending, "attribute has no value to compare against")),
                }
            } else {
                range_attr = Some(pending);
            }
        }
        self.cur_kind = None;
        self.out.clauses.push(ConditionClause {
            kind: ConditionKind::Between,
            attribute: range_attr.cloned(),
            values: alloc::vec![v1, v2],
        });
        Ok(())
    }

    fn run(mut self) -> ParseResult<Tail> {
        while self.j < self.toks.len() {
            let t = self.toks[self.j];
            if t.is(TokenClass::Condition) {
                match t.normalized.as_str() {
                    "where" => {
                        self.flush()?;
                        self.j += 1;
                    }
                    "with" => {
                        self.flush()?;
                        self.in_with = true;
                        self.out.saw_with = true;
                        self.j += 1;
                    }
                    "is" | "equal" | "equals" => {
                        self.out.saw_eq = true;
                        if self.cur_kind.is_none() {
                            self.cur_kind = Some(ConditionKind::Equal);
                        }
                        self.j += 1;
                    }
                    "to" | "than" => self.j += 1,
                    "greater" | "less" => {
                        let than_follows =
                            matches!(self.toks.get(self.j + 1), Some(n) if n.word_is("than"));
                        self.cur_kind = Some(match (t.normalized.as_str(), than_follows) {
                            ("greater", false) => ConditionKind::Greater,
                            ("greater", true) => ConditionKind::GreaterThan,
                            ("less", false) => ConditionKind::Less,
                            (_, true) => ConditionKind::LessThan,
                            (_, false) => ConditionKind::Less,
                        });
                        self.j += if than_follows { 2 } else { 1 };
                    }
                    "between" => {
                        self.j += 1;
                        self.parse_range()?;
                    }
                    "and" => match self.toks.get(self.j + 1) {
                        None => return Err(err_at(t, "dangling `and` at the end of the query")),
                        Some(n) if n.attribute => {
                            self.flush()?;
                            self.j += 1;
                        }
                        Some(n) if is_value_token(n) => self.j += 1,
                        Some(_) => {
                            self.flush()?;
                            self.j += 1;
                        }
                    },
                    _ => self.j += 1,
                }
            } else if t.attribute {
                if !self.cur_values.is_empty() {
                    self.flush()?;
                } else if let Some(prev) = self.cur_attr.take() {
                    self.out.strays.push(prev.clone());
                }
                self.cur_attr = Some(t);
                self.j += 1;
            } else if is_value_token(t) {
                if self.cur_attr.is_some() || self.cur_kind.is_some() {
                    if matches!(self.cur_kind, Some(k) if k.is_comparison())
                        && !self.cur_values.is_empty()
                    {
                        return Err(err_at(t, "a comparison takes a single value"));
                    }
                    self.cur_values.push(t.clone());
                } else {
                    self.out.strays.push(t.clone());
                }
                self.j += 1;
            } else {
                return Err(err_at(t, "unexpected word inside a condition clause"));
            }
        }
        self.flush()?;
        if self.out.clauses.is_empty() {
            return Err(err_at(
                self.toks[0],
                "condition keyword is not followed by a complete clause",
            ));
        }
        Ok(self.out)
    }
}

fn parse_tail(toks: &[&Token]) -> ParseResult<Tail> {
    TailParser::new(toks).run()
}
