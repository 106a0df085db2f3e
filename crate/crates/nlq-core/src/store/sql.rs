//! A small SQL executor for the generated queries and for raw passthrough.
//!
//! Supported shape: `SELECT (*|col, ...) FROM table [WHERE expr]` where the
//! expression combines comparisons (`=`, `<`, `>`, `<=`, `>=`), `BETWEEN
//! ... AND ...` and `LIKE` with `AND`, `OR` and parentheses. Either side of a
//! comparison may be a column, a literal, or `LOWER(...)` over text.
//!
//! This module deliberately evaluates rows on its own instead of delegating
//! to the intent executor, so the two routes can be checked against each
//! other.

use alloc::borrow::ToOwned;
use alloc::boxed::Box;
use alloc::string::String;
use alloc::vec::Vec;

use super::{ResultSet, StoreError, TableData};
use crate::value::{Cell, DateTime, Value};

// --- lexing ---------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Str(String),
    Int(i64),
    Star,
    Comma,
    LParen,
    RParen,
    Eq,
    Lt,
    Gt,
    Le,
    Ge,
    End,
}

impl Tok {
    fn describe(&self) -> String {
        match self {
            Tok::Ident(w) => alloc::format!("`{w}`"),
            Tok::Str(_) => "a string literal".to_owned(),
            Tok::Int(n) => alloc::format!("`{n}`"),
            Tok::Star => "`*`".to_owned(),
            Tok::Comma => "`,`".to_owned(),
            Tok::LParen => "`(`".to_owned(),
            Tok::RParen => "`)`".to_owned(),
            Tok::Eq => "`=`".to_owned(),
            Tok::Lt => "`<`".to_owned(),
            Tok::Gt => "`>`".to_owned(),
            Tok::Le => "`<=`".to_owned(),
            Tok::Ge => "`>=`".to_owned(),
            Tok::End => "end of input".to_owned(),
        }
    }
}

fn syntax(position: usize, expected: &str, found: &Tok) -> StoreError {
    StoreError::SqlSyntax {
        position,
        expected: expected.to_owned(),
        found: found.describe(),
    }
}

/// Tokenizes the SQL text, recording the byte position of each token.
fn lex(sql: &str) -> Result<Vec<(usize, Tok)>, StoreError> {
    let bytes = sql.as_bytes();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\r' | b'\n' => i += 1,
            b'*' => {
                toks.push((i, Tok::Star));
                i += 1;
            }
            b',' => {
                toks.push((i, Tok::Comma));
                i += 1;
            }
            b'(' => {
                toks.push((i, Tok::LParen));
                i += 1;
            }
            b')' => {
                toks.push((i, Tok::RParen));
                i += 1;
            }
            b'=' => {
                toks.push((i, Tok::Eq));
                i += 1;
            }
            b'<' | b'>' => {
                let start = i;
                i += 1;
                if i < bytes.len() && bytes[i] == b'=' {
                    i += 1;
                    toks.push((start, if b == b'<' { Tok::Le } else { Tok::Ge }));
                } else {
                    toks.push((start, if b == b'<' { Tok::Lt } else { Tok::Gt }));
                }
            }
            b'\'' | b'"' => {
                let quote = b;
                let start = i;
                i += 1;
                let mut text = String::new();
                loop {
                    if i >= bytes.len() {
                        return Err(StoreError::SqlSyntax {
                            position: start,
                            expected: "a closing quote".to_owned(),
                            found: "end of input".to_owned(),
                        });
                    }
                    if bytes[i] == quote {
                        if i + 1 < bytes.len() && bytes[i + 1] == quote {
                            text.push(quote as char);
                            i += 2;
                        } else {
                            i += 1;
                            break;
                        }
                    } else {
                        // Strings are sliced on byte runs between quotes, so
                        // multi-byte characters pass through unchanged.
                        let run_start = i;
                        while i < bytes.len() && bytes[i] != quote {
                            i += 1;
                        }
                        text.push_str(&sql[run_start..i]);
                    }
                }
                toks.push((start, Tok::Str(text)));
            }
            b'-' | b'0'..=b'9' => {
                let start = i;
                i += 1;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let slice = &sql[start..i];
                let n: i64 = slice.parse().map_err(|_| StoreError::SqlSyntax {
                    position: start,
                    expected: "an integer literal".to_owned(),
                    found: alloc::format!("`{slice}`"),
                })?;
                toks.push((start, Tok::Int(n)));
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                let start = i;
                while i < bytes.len()
                    && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_')
                {
                    i += 1;
                }
                toks.push((start, Tok::Ident(sql[start..i].to_owned())));
            }
            other => {
                return Err(StoreError::SqlSyntax {
                    position: i,
                    expected: "a token".to_owned(),
                    found: alloc::format!("`{}`", other as char),
                });
            }
        }
    }
    toks.push((sql.len(), Tok::End));
    Ok(toks)
}

// --- parsing --------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
enum Operand {
    Column(String),
    Lower(Box<Operand>),
    Text(String),
    Int(i64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum CmpOp {
    Eq,
    Lt,
    Gt,
    Le,
    Ge,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Expr {
    Cmp { op: CmpOp, left: Operand, right: Operand },
    Between { subject: Operand, low: Operand, high: Operand },
    Like { subject: Operand, pattern: Operand },
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Projection {
    All,
    Columns(Vec<String>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Query {
    projection: Projection,
    table: String,
    filter: Option<Expr>,
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].1
    }

    fn pos(&self) -> usize {
        self.toks[self.at].0
    }

    fn bump(&mut self) -> Tok {
        let t = self.toks[self.at].1.clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn keyword(&self) -> Option<String> {
        match self.peek() {
            Tok::Ident(w) => Some(w.to_lowercase()),
            _ => None,
        }
    }

    fn eat_keyword(&mut self, word: &str) -> bool {
        if self.keyword().as_deref() == Some(word) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect_keyword(&mut self, word: &str) -> Result<(), StoreError> {
        if self.eat_keyword(word) {
            Ok(())
        } else {
            Err(syntax(self.pos(), &alloc::format!("`{}`", word.to_uppercase()), self.peek()))
        }
    }

    fn expect_ident(&mut self, what: &str) -> Result<String, StoreError> {
        match self.peek() {
            Tok::Ident(w) if !is_reserved(w) => {
                let w = w.clone();
                self.bump();
                Ok(w)
            }
            other => Err(syntax(self.pos(), what, other)),
        }
    }

    fn query(&mut self) -> Result<Query, StoreError> {
        self.expect_keyword("select")?;
        let projection = if matches!(self.peek(), Tok::Star) {
            self.bump();
            Projection::All
        } else {
            let mut cols = alloc::vec![self.expect_ident("a column name or `*`")?];
            while matches!(self.peek(), Tok::Comma) {
                self.bump();
                cols.push(self.expect_ident("a column name")?);
            }
            Projection::Columns(cols)
        };
        self.expect_keyword("from")?;
        let table = self.expect_ident("a table name")?;
        let filter = if self.eat_keyword("where") {
            Some(self.or_expr()?)
        } else {
            None
        };
        if !matches!(self.peek(), Tok::End) {
            return Err(syntax(self.pos(), "end of input", self.peek()));
        }
        Ok(Query { projection, table, filter })
    }

    fn or_expr(&mut self) -> Result<Expr, StoreError> {
        let mut left = self.and_expr()?;
        while self.eat_keyword("or") {
            let right = self.and_expr()?;
            left = Expr::Or(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn and_expr(&mut self) -> Result<Expr, StoreError> {
        let mut left = self.factor()?;
        while self.eat_keyword("and") {
            let right = self.factor()?;
            left = Expr::And(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn factor(&mut self) -> Result<Expr, StoreError> {
        if matches!(self.peek(), Tok::LParen) {
            self.bump();
            let inner = self.or_expr()?;
            if !matches!(self.peek(), Tok::RParen) {
                return Err(syntax(self.pos(), "`)`", self.peek()));
            }
            self.bump();
            return Ok(inner);
        }
        self.predicate()
    }

    fn predicate(&mut self) -> Result<Expr, StoreError> {
        let left = self.operand()?;
        if self.eat_keyword("between") {
            let low = self.operand()?;
            self.expect_keyword("and")?;
            let high = self.operand()?;
            return Ok(Expr::Between { subject: left, low, high });
        }
        if self.eat_keyword("like") {
            let pattern = self.operand()?;
            return Ok(Expr::Like { subject: left, pattern });
        }
        let op = match self.peek() {
            Tok::Eq => CmpOp::Eq,
            Tok::Lt => CmpOp::Lt,
            Tok::Gt => CmpOp::Gt,
            Tok::Le => CmpOp::Le,
            Tok::Ge => CmpOp::Ge,
            other => return Err(syntax(self.pos(), "a comparison operator", other)),
        };
        self.bump();
        let right = self.operand()?;
        Ok(Expr::Cmp { op, left, right })
    }

    fn operand(&mut self) -> Result<Operand, StoreError> {
        match self.peek().clone() {
            Tok::Ident(w) if w.eq_ignore_ascii_case("lower") => {
                self.bump();
                if !matches!(self.peek(), Tok::LParen) {
                    return Err(syntax(self.pos(), "`(`", self.peek()));
                }
                self.bump();
                let inner = self.operand()?;
                if !matches!(self.peek(), Tok::RParen) {
                    return Err(syntax(self.pos(), "`)`", self.peek()));
                }
                self.bump();
                Ok(Operand::Lower(Box::new(inner)))
            }
            Tok::Ident(w) if !is_reserved(&w) => {
                self.bump();
                Ok(Operand::Column(w))
            }
            Tok::Str(s) => {
                self.bump();
                Ok(Operand::Text(s))
            }
            Tok::Int(n) => {
                self.bump();
                Ok(Operand::Int(n))
            }
            other => Err(syntax(self.pos(), "a column, literal or LOWER(...)", &other)),
        }
    }
}

fn is_reserved(word: &str) -> bool {
    matches!(
        word.to_lowercase().as_str(),
        "select" | "from" | "where" | "and" | "or" | "between" | "like" | "lower"
    )
}

// --- evaluation -----------------------------------------------------------

/// Parses and runs one SQL statement against the loaded tables.
pub fn execute_sql(sql: &str, tables: &[TableData]) -> Result<ResultSet, StoreError> {
    let toks = lex(sql)?;
    let mut parser = Parser { toks, at: 0 };
    let query = parser.query()?;

    let table = tables
        .iter()
        .find(|t| t.name.eq_ignore_ascii_case(&query.table))
        .ok_or_else(|| StoreError::UnknownTable { name: query.table.clone() })?;

    let projected: Vec<usize> = match &query.projection {
        Projection::All => (0..table.columns.len()).collect(),
        Projection::Columns(cols) => {
            let mut indices = Vec::with_capacity(cols.len());
            for col in cols {
                let idx = table
                    .column_index(col)
                    .ok_or_else(|| StoreError::UnknownColumn { name: col.clone() })?;
                indices.push(idx);
            }
            indices
        }
    };

    // Resolve column references once, up front, so an unknown column is
    // reported even when the table has no rows.
    if let Some(expr) = &query.filter {
        check_columns(expr, table)?;
    }

    let mut rows = Vec::new();
    for row in &table.rows {
        let keep = match &query.filter {
            Some(expr) => eval_expr(expr, row, table)?,
            None => true,
        };
        if keep {
            rows.push(projected.iter().map(|&i| row[i].clone()).collect());
        }
    }

    Ok(ResultSet {
        columns: projected.iter().map(|&i| table.columns[i].0.clone()).collect(),
        rows,
    })
}

fn check_columns(expr: &Expr, table: &TableData) -> Result<(), StoreError> {
    match expr {
        Expr::Cmp { left, right, .. } => {
            check_operand(left, table)?;
            check_operand(right, table)
        }
        Expr::Between { subject, low, high } => {
            check_operand(subject, table)?;
            check_operand(low, table)?;
            check_operand(high, table)
        }
        Expr::Like { subject, pattern } => {
            check_operand(subject, table)?;
            check_operand(pattern, table)
        }
        Expr::And(a, b) | Expr::Or(a, b) => {
            check_columns(a, table)?;
            check_columns(b, table)
        }
    }
}

fn check_operand(operand: &Operand, table: &TableData) -> Result<(), StoreError> {
    match operand {
        Operand::Column(name) => table
            .column_index(name)
            .map(|_| ())
            .ok_or_else(|| StoreError::UnknownColumn { name: name.clone() }),
        Operand::Lower(inner) => check_operand(inner, table),
        _ => Ok(()),
    }
}

fn eval_expr(expr: &Expr, row: &[Cell], table: &TableData) -> Result<bool, StoreError> {
    match expr {
        Expr::And(a, b) => Ok(eval_expr(a, row, table)? && eval_expr(b, row, table)?),
        Expr::Or(a, b) => Ok(eval_expr(a, row, table)? || eval_expr(b, row, table)?),
        Expr::Cmp { op, left, right } => {
            let l = eval_operand(left, row, table)?;
            let r = eval_operand(right, row, table)?;
            let (Some(l), Some(r)) = (l, r) else { return Ok(false) };
            let (l, r) = align(l, r)?;
            let ord = l.cmp(&r);
            Ok(match op {
                CmpOp::Eq => ord.is_eq(),
                CmpOp::Lt => ord.is_lt(),
                CmpOp::Gt => ord.is_gt(),
                CmpOp::Le => ord.is_le(),
                CmpOp::Ge => ord.is_ge(),
            })
        }
        Expr::Between { subject, low, high } => {
            let s = eval_operand(subject, row, table)?;
            let lo = eval_operand(low, row, table)?;
            let hi = eval_operand(high, row, table)?;
            let (Some(s), Some(lo), Some(hi)) = (s, lo, hi) else { return Ok(false) };
            let (s1, lo) = align(s.clone(), lo)?;
            let (s2, hi) = align(s, hi)?;
            Ok(s1.cmp(&lo).is_ge() && s2.cmp(&hi).is_le())
        }
        Expr::Like { subject, pattern } => {
            let s = eval_operand(subject, row, table)?;
            let p = eval_operand(pattern, row, table)?;
            let (Some(s), Some(p)) = (s, p) else { return Ok(false) };
            match (s, p) {
                (Value::Text(text), Value::Text(pattern)) => Ok(like_match(&text, &pattern)),
                (s, p) => Err(StoreError::TypeMismatch {
                    detail: alloc::format!(
                        "LIKE needs text on both sides, found {} and {}",
                        s.value_type(),
                        p.value_type()
                    ),
                }),
            }
        }
    }
}

/// Evaluates an operand for one row. A null cell stays null and makes the
/// surrounding predicate false without a type check.
fn eval_operand(
    operand: &Operand,
    row: &[Cell],
    table: &TableData,
) -> Result<Option<Value>, StoreError> {
    match operand {
        Operand::Column(name) => {
            let idx = table
                .column_index(name)
                .ok_or_else(|| StoreError::UnknownColumn { name: name.clone() })?;
            Ok(row[idx].clone())
        }
        Operand::Lower(inner) => match eval_operand(inner, row, table)? {
            None => Ok(None),
            Some(Value::Text(s)) => Ok(Some(Value::Text(s.to_lowercase()))),
            Some(other) => Err(StoreError::TypeMismatch {
                detail: alloc::format!("LOWER needs text, found {}", other.value_type()),
            }),
        },
        Operand::Text(s) => Ok(Some(Value::Text(s.clone()))),
        Operand::Int(n) => Ok(Some(Value::Integer(*n))),
    }
}

/// Brings two values onto one type so they can be compared, coercing string
/// literals toward the typed side. Bare text comparison is case-sensitive.
fn align(a: Value, b: Value) -> Result<(Value, Value), StoreError> {
    if a.value_type() == b.value_type() {
        return Ok((a, b));
    }
    match (&a, &b) {
        (Value::DateTime(_), Value::Text(s)) => match DateTime::parse(s) {
            Some(dt) => Ok((a, Value::DateTime(dt))),
            None => Err(mismatch(&a, &b)),
        },
        (Value::Text(s), Value::DateTime(_)) => match DateTime::parse(s) {
            Some(dt) => Ok((Value::DateTime(dt), b)),
            None => Err(mismatch(&a, &b)),
        },
        (Value::Boolean(_), other) => match as_bool(other) {
            Some(v) => Ok((a.clone(), Value::Boolean(v))),
            None => Err(mismatch(&a, &b)),
        },
        (other, Value::Boolean(_)) => match as_bool(other) {
            Some(v) => Ok((Value::Boolean(v), b.clone())),
            None => Err(mismatch(&a, &b)),
        },
        _ => Err(mismatch(&a, &b)),
    }
}

fn mismatch(a: &Value, b: &Value) -> StoreError {
    StoreError::TypeMismatch {
        detail: alloc::format!("cannot compare {} with {}", a.value_type(), b.value_type()),
    }
}

fn as_bool(value: &Value) -> Option<bool> {
    match value {
        Value::Integer(0) => Some(false),
        Value::Integer(1) => Some(true),
        Value::Text(s) if s.eq_ignore_ascii_case("true") || s == "1" => Some(true),
        Value::Text(s) if s.eq_ignore_ascii_case("false") || s == "0" => Some(false),
        _ => None,
    }
}

/// `%` matches any run of characters; every other character matches itself.
fn like_match(text: &str, pattern: &str) -> bool {
    if !pattern.contains('%') {
        return text == pattern;
    }
    let parts: Vec<&str> = pattern.split('%').collect();
    let first = parts[0];
    let last = parts[parts.len() - 1];
    if !text.starts_with(first) || !text.ends_with(last) {
        return false;
    }
    let mut at = first.len();
    let end = text.len() - last.len();
    if at > end {
        return false;
    }
    for part in &parts[1..parts.len() - 1] {
        if part.is_empty() {
            continue;
        }
        match text[at..end].find(part) {
            Some(rel) => at += rel + part.len(),
            None => return false,
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::super::tests::document_table;
    use super::*;

    fn run(sql: &str) -> ResultSet {
        execute_sql(sql, &[document_table()]).unwrap()
    }

    fn names(result: &ResultSet) -> Vec<String> {
        let idx = result.columns.iter().position(|c| c == "Document_Name").unwrap();
        result
            .rows
            .iter()
            .map(|r| r[idx].as_ref().unwrap().to_string())
            .collect()
    }

    #[test]
    fn generated_shape_runs() {
        let result = run(
            "SELECT * FROM document WHERE (LOWER(Document_Type) = 'doc' OR \
             LOWER(Document_Type) = 'pdf') AND (LOWER(Document_Name) LIKE '%pdf%')",
        );
        assert_eq!(names(&result), ["PDF", "PDF Document"]);
        assert_eq!(result.columns.len(), 10);
    }

    #[test]
    fn projection_uses_canonical_casing() {
        let result = run(
            "select document_name from document where Document_Seq between 100 and 200",
        );
        assert_eq!(result.columns, ["Document_Name"]);
        assert_eq!(result.rows, [[Some(Value::Text("PDF".into()))]]);
    }

    #[test]
    fn bare_text_equality_is_case_sensitive() {
        let hit = run("select * from document where Document_Type = 'doc'");
        assert_eq!(names(&hit), ["PDF"]);
        let miss = run("select * from document where Document_Type = 'DOC'");
        assert!(miss.rows.is_empty());
        let folded = run("select * from document where LOWER(Document_Type) = 'DOC'");
        assert!(folded.rows.is_empty());
        let folded = run("select * from document where LOWER(Document_Type) = 'doc'");
        assert_eq!(names(&folded), ["PDF"]);
    }

    #[test]
    fn double_quoted_strings_work() {
        let result = run("select * from document where Document_Author = \"Admin-Admin\"");
        assert_eq!(names(&result), ["PDF Document"]);
    }

    #[test]
    fn quote_doubling_is_an_escape() {
        let result = execute_sql(
            "select * from document where Document_Name = 'it''s'",
            &[document_table()],
        )
        .unwrap();
        assert!(result.rows.is_empty());
        let toks = lex("'it''s'").unwrap();
        assert_eq!(toks[0].1, Tok::Str("it's".into()));
    }

    #[test]
    fn datetime_literals_coerce() {
        let result = run(
            "select Document_Name from document where Document_Submitted > '2009-10-14 14:00:00'",
        );
        assert_eq!(result.rows, [[Some(Value::Text("PDF Document".into()))]]);
        let result = run("select Document_Name from document where Document_Submitted >= '2009-10-14'");
        assert_eq!(result.rows.len(), 2);
    }

    #[test]
    fn boolean_columns_accept_numbers_and_words() {
        assert_eq!(run("select * from document where Document_Enabled = 1").rows.len(), 2);
        assert_eq!(run("select * from document where Document_Disabled = 'true'").rows.len(), 0);
    }

    #[test]
    fn or_and_parens_nest() {
        let result = run(
            "select * from document where Document_Seq > 1000 or \
             (Document_Type = 'doc' and Document_Seq < 500)",
        );
        assert_eq!(result.rows.len(), 2);
    }

    #[test]
    fn nulls_never_match() {
        let schema = crate::semantics::parse_schema(super::super::tests::DOCUMENT_SCHEMA).unwrap();
        let data = super::super::tests::DOCUMENT_TSV.replace("doc\tWaf.Papan", "\tWaf.Papan");
        let table =
            crate::store::load_table(&data, schema.table("document").unwrap()).unwrap();
        let eq = execute_sql("select * from document where Document_Type = 'doc'", &[table.clone()])
            .unwrap();
        assert!(eq.rows.is_empty());
        let like = execute_sql(
            "select * from document where Document_Type like '%'",
            &[table.clone()],
        )
        .unwrap();
        assert_eq!(like.rows.len(), 1);
        let lower = execute_sql(
            "select * from document where LOWER(Document_Type) = 'doc'",
            &[table],
        )
        .unwrap();
        assert!(lower.rows.is_empty());
    }

    #[test]
    fn type_errors_are_reported() {
        let err = execute_sql(
            "select * from document where LOWER(Document_Seq) = '1'",
            &[document_table()],
        );
        assert!(matches!(err, Err(StoreError::TypeMismatch { .. })));
        let err = execute_sql(
            "select * from document where Document_Seq = 'one'",
            &[document_table()],
        );
        assert!(matches!(err, Err(StoreError::TypeMismatch { .. })));
    }

    #[test]
    fn unknown_names_are_reported_before_rows_run() {
        let err = execute_sql("select * from folders", &[document_table()]);
        assert_eq!(err, Err(StoreError::UnknownTable { name: "folders".into() }));
        let err = execute_sql("select Colour from document", &[document_table()]);
        assert_eq!(err, Err(StoreError::UnknownColumn { name: "Colour".into() }));
        let schema = crate::semantics::parse_schema(super::super::tests::DOCUMENT_SCHEMA).unwrap();
        let header = super::super::tests::DOCUMENT_TSV.lines().next().unwrap();
        let empty = crate::store::load_table(header, schema.table("document").unwrap()).unwrap();
        let err = execute_sql("select * from document where Colour = 'red'", &[empty]);
        assert_eq!(err, Err(StoreError::UnknownColumn { name: "Colour".into() }));
    }

    #[test]
    fn syntax_errors_carry_positions() {
        let err = execute_sql("select from document", &[document_table()]);
        assert_eq!(
            err,
            Err(StoreError::SqlSyntax {
                position: 7,
                expected: "a column name or `*`".into(),
                found: "`from`".into(),
            })
        );
        let err = execute_sql("select * document", &[document_table()]);
        assert!(matches!(err, Err(StoreError::SqlSyntax { position: 9, .. })));
        let err = execute_sql("select * from document where", &[document_table()]);
        assert!(matches!(err, Err(StoreError::SqlSyntax { position: 28, .. })));
        let err = execute_sql("select * from document where Document_Name = 'open", &[]);
        assert!(matches!(err, Err(StoreError::SqlSyntax { position: 45, .. })));
    }

    #[test]
    fn like_matcher_handles_wildcard_shapes() {
        assert!(like_match("PDF Document", "%Document%"));
        assert!(like_match("PDF Document", "PDF%"));
        assert!(like_match("PDF Document", "%ment"));
        assert!(like_match("PDF Document", "PDF%ment"));
        assert!(like_match("abc", "%"));
        assert!(like_match("", "%"));
        assert!(like_match("abc", "a%b%c"));
        assert!(!like_match("abc", "a%d%c"));
        assert!(!like_match("ab", "abc%"));
        assert!(!like_match("aba", "ab%ba"));
        assert!(like_match("abba", "ab%ba"));
        // Underscores are ordinary characters here.
        assert!(like_match("a_c", "a_c"));
        assert!(!like_match("abc", "a_c"));
        // Exact match when no wildcard at all.
        assert!(like_match("doc", "doc"));
        assert!(!like_match("doc", "do"));
    }

    #[test]
    fn keywords_are_case_insensitive() {
        let result = run("SeLeCt * FrOm document WhErE Document_Type LiKe 'd%'");
        assert_eq!(names(&result), ["PDF"]);
    }
}
