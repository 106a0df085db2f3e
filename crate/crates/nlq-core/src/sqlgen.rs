//! Renders query intents as SQL text.
//!
//! One `SELECT * FROM <table>` per target. Conditions render first, in
//! order, then one parenthesized OR-group per keyword term spanning the
//! table's keyword columns; everything joins with AND. Text equality and
//! keyword matching go through `LOWER(...)` with case-folded values so the
//! generated SQL is case-insensitive exactly where the intent evaluator is;
//! range and order comparisons compare raw values on both sides.

use alloc::string::String;
use alloc::vec::Vec;

use crate::semantics::{CompareOp, Condition, QueryIntent, TargetQuery};
use crate::value::Value;

/// A generated statement, tagged with the table it selects from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SqlQuery {
    pub table: String,
    pub text: String,
}

/// Renders one statement per intent target, in target order.
pub fn to_sql(intent: &QueryIntent) -> Vec<SqlQuery> {
    intent
        .targets
        .iter()
        .map(|target| SqlQuery {
            table: target.table.clone(),
            text: render_target(target, &intent.keyword_terms),
        })
        .collect()
}

fn render_target(target: &TargetQuery, keyword_terms: &[String]) -> String {
    let mut clauses: Vec<String> = Vec::new();
    for condition in &target.conditions {
        clauses.push(render_condition(condition));
    }
    for term in keyword_terms {
        clauses.push(render_keyword_group(term, &target.keyword_columns));
    }
    let mut out = String::from("SELECT * FROM ");
    out.push_str(&target.table);
    if !clauses.is_empty() {
        out.push_str(" WHERE ");
        out.push_str(&clauses.join(" AND "));
    }
    out
}

fn render_condition(condition: &Condition) -> String {
    let col = condition.column.as_str();
    match condition.operator {
        CompareOp::Eq => {
            let alternatives: Vec<String> =
                condition.values.iter().map(|v| render_equality(col, v)).collect();
            if alternatives.len() == 1 {
                alternatives.into_iter().next().expect("one alternative")
            } else {
                alloc::format!("({})", alternatives.join(" OR "))
            }
        }
        CompareOp::Contains => render_like(col, &condition.values[0]),
        CompareOp::Between => alloc::format!(
            "{col} BETWEEN {} AND {}",
            literal(&condition.values[0]),
            literal(&condition.values[1])
        ),
        CompareOp::Gt => alloc::format!("{col} > {}", literal(&condition.values[0])),
        CompareOp::Lt => alloc::format!("{col} < {}", literal(&condition.values[0])),
        CompareOp::Ge => alloc::format!("{col} >= {}", literal(&condition.values[0])),
        CompareOp::Le => alloc::format!("{col} <= {}", literal(&condition.values[0])),
    }
}

fn render_equality(col: &str, value: &Value) -> String {
    match value {
        Value::Text(s) => alloc::format!("LOWER({col}) = {}", quote(&s.to_lowercase())),
        other => alloc::format!("{col} = {}", literal(other)),
    }
}

fn render_like(col: &str, value: &Value) -> String {
    let needle = match value {
        Value::Text(s) => s.to_lowercase(),
        other => alloc::format!("{other}"),
    };
    alloc::format!("LOWER({col}) LIKE {}", quote(&alloc::format!("%{needle}%")))
}

fn render_keyword_group(term: &str, keyword_columns: &[String]) -> String {
    let folded = term.to_lowercase();
    let pattern = quote(&alloc::format!("%{folded}%"));
    let likes: Vec<String> = keyword_columns
        .iter()
        .map(|col| alloc::format!("LOWER({col}) LIKE {pattern}"))
        .collect();
    alloc::format!("({})", likes.join(" OR "))
}

/// Typed literal: text quoted raw, numbers bare, datetimes quoted ISO,
/// booleans as 1/0.
fn literal(value: &Value) -> String {
    match value {
        Value::Text(s) => quote(s),
        Value::Integer(n) => alloc::format!("{n}"),
        Value::DateTime(dt) => quote(&alloc::format!("{dt}")),
        Value::Boolean(b) => String::from(if *b { "1" } else { "0" }),
    }
}

/// Single-quoted string with embedded quotes doubled.
fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('\'');
    for ch in s.chars() {
        if ch == '\'' {
            out.push('\'');
        }
        out.push(ch);
    }
    out.push('\'');
    out
}
