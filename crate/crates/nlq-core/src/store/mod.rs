//! The embedded table store.
//!
//! Tables are loaded from tab-separated text and held in memory as typed
//! rows. Two query routes exist on purpose: `execute_intent` evaluates a
//! `QueryIntent` directly against rows, while [`sql::execute_sql`] parses and
//! runs the generated SQL with its own evaluator. The two share no predicate
//! code, so each one cross-checks the other.

mod sql;

pub use sql::execute_sql;

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::semantics::{CompareOp, QueryIntent, TableBinding};
use crate::value::{Cell, Value, ValueType};

/// One loaded table: column names with types (file order) and typed rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableData {
    pub name: String,
    pub columns: Vec<(String, ValueType)>,
    pub rows: Vec<Vec<Cell>>,
}

impl TableData {
    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|(c, _)| c.eq_ignore_ascii_case(name))
    }

    pub fn column_names(&self) -> Vec<String> {
        self.columns.iter().map(|(c, _)| c.clone()).collect()
    }
}

/// Rows produced by a query, with the projected column names.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResultSet {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl ResultSet {
    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StoreError {
    /// The data header is missing a column the binding declares.
    HeaderMismatch { table: String, missing: String },
    /// A data line has the wrong number of cells.
    RowArity { table: String, line: usize, expected: usize, got: usize },
    /// A cell does not conform to its column type.
    CellCoercion { table: String, line: usize, column: String, raw: String, expected: ValueType },
    UnknownTable { name: String },
    UnknownColumn { name: String },
    /// A predicate compares incompatible types.
    TypeMismatch { detail: String },
    /// The SQL text does not fit the supported subset.
    SqlSyntax { position: usize, expected: String, found: String },
}

impl fmt::Display for StoreError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            StoreError::HeaderMismatch { table, missing } => {
                write!(f, "table `{table}`: data header is missing column `{missing}`")
            }
            StoreError::RowArity { table, line, expected, got } => {
                write!(f, "table `{table}` line {line}: expected {expected} cells, found {got}")
            }
            StoreError::CellCoercion { table, line, column, raw, expected } => {
                write!(
                    f,
                    "table `{table}` line {line}, column `{column}`: `{raw}` is not a valid {expected}"
                )
            }
            StoreError::UnknownTable { name } => write!(f, "no table called `{name}`"),
            StoreError::UnknownColumn { name } => write!(f, "no column called `{name}`"),
            StoreError::TypeMismatch { detail } => write!(f, "type mismatch: {detail}"),
            StoreError::SqlSyntax { position, expected, found } => {
                write!(f, "SQL syntax error at byte {position}: expected {expected}, found {found}")
            }
        }
    }
}

impl core::error::Error for StoreError {}

/// Loads one table from tab-separated text.
///
/// The first line is the header; it must name every column of `binding`
/// (columns the binding does not declare load as text). Each following
/// non-blank line is one row with exactly one cell per header column; empty
/// cells are null.
pub fn load_table(data: &str, binding: &TableBinding) -> Result<TableData, StoreError> {
    let mut lines = data.lines().enumerate();
    let header_line = loop {
        match lines.next() {
            Some((_, l)) if l.trim_end_matches('\r').trim().is_empty() => continue,
            Some((_, l)) => break l.trim_end_matches('\r'),
            None => break "",
        }
    };
    let header: Vec<&str> = if header_line.is_empty() {
        Vec::new()
    } else {
        header_line.split('\t').map(str::trim).collect()
    };

    for declared in &binding.columns {
        if !header.iter().any(|h| h.eq_ignore_ascii_case(&declared.name)) {
            return Err(StoreError::HeaderMismatch {
                table: binding.name.clone(),
                missing: declared.name.clone(),
            });
        }
    }

    let columns: Vec<(String, ValueType)> = header
        .iter()
        .map(|h| {
            let ty = binding.column(h).map(|c| c.value_type).unwrap_or(ValueType::Text);
            (h.to_string(), ty)
        })
        .collect();

    let mut rows = Vec::new();
    for (idx, raw_line) in lines {
        let line = raw_line.trim_end_matches('\r');
        if line.trim().is_empty() {
            continue;
        }
        let cells: Vec<&str> = line.split('\t').collect();
        if cells.len() != columns.len() {
            return Err(StoreError::RowArity {
                table: binding.name.clone(),
                line: idx + 1,
                expected: columns.len(),
                got: cells.len(),
            });
        }
        let mut row = Vec::with_capacity(cells.len());
        for (cell, (col_name, ty)) in cells.iter().zip(&columns) {
            if cell.is_empty() {
                row.push(None);
            } else {
                match Value::parse_as(cell, *ty) {
                    Some(v) => row.push(Some(v)),
                    None => {
                        return Err(StoreError::CellCoercion {
                            table: binding.name.clone(),
                            line: idx + 1,
                            column: col_name.clone(),
                            raw: cell.to_string(),
                            expected: *ty,
                        })
                    }
                }
            }
        }
        rows.push(row);
    }

    Ok(TableData { name: binding.name.clone(), columns, rows })
}

/// Runs an intent directly against loaded tables, one result set per target
/// in target order. Null cells match nothing.
pub fn execute_intent(
    intent: &QueryIntent,
    tables: &[TableData],
) -> Result<Vec<(String, ResultSet)>, StoreError> {
    let mut results = Vec::with_capacity(intent.targets.len());
    for target in &intent.targets {
        let table = tables
            .iter()
            .find(|t| t.name.eq_ignore_ascii_case(&target.table))
            .ok_or_else(|| StoreError::UnknownTable { name: target.table.clone() })?;

        let mut condition_cols = Vec::with_capacity(target.conditions.len());
        for condition in &target.conditions {
            let idx = table
                .column_index(&condition.column)
                .ok_or_else(|| StoreError::UnknownColumn { name: condition.column.clone() })?;
            condition_cols.push(idx);
        }
        let mut keyword_cols = Vec::with_capacity(target.keyword_columns.len());
        for col in &target.keyword_columns {
            let idx = table
                .column_index(col)
                .ok_or_else(|| StoreError::UnknownColumn { name: col.clone() })?;
            keyword_cols.push(idx);
        }

        let folded_terms: Vec<String> =
            intent.keyword_terms.iter().map(|t| t.to_lowercase()).collect();

        let mut rows = Vec::new();
        'row: for row in &table.rows {
            for (condition, &idx) in target.conditions.iter().zip(&condition_cols) {
                let cell = &row[idx];
                let holds = match condition.operator {
                    CompareOp::Eq => condition.values.iter().any(|v| eq_matches(cell, v)),
                    CompareOp::Contains => contains_matches(cell, &condition.values[0]),
                    CompareOp::Between => {
                        in_order(cell, &condition.values[0], |o| o.is_ge())
                            && in_order(cell, &condition.values[1], |o| o.is_le())
                    }
                    CompareOp::Gt => in_order(cell, &condition.values[0], |o| o.is_gt()),
                    CompareOp::Lt => in_order(cell, &condition.values[0], |o| o.is_lt()),
                    CompareOp::Ge => in_order(cell, &condition.values[0], |o| o.is_ge()),
                    CompareOp::Le => in_order(cell, &condition.values[0], |o| o.is_le()),
                };
                if !holds {
                    continue 'row;
                }
            }
            for term in &folded_terms {
                let found = keyword_cols.iter().any(|&idx| match &row[idx] {
                    Some(Value::Text(s)) => s.to_lowercase().contains(term.as_str()),
                    _ => false,
                });
                if !found {
                    continue 'row;
                }
            }
            rows.push(row.clone());
        }

        results.push((
            target.table.clone(),
            ResultSet { columns: table.column_names(), rows },
        ));
    }
    Ok(results)
}

/// Equality: case-insensitive for text, exact for everything else.
fn eq_matches(cell: &Cell, value: &Value) -> bool {
    match (cell, value) {
        (Some(Value::Text(a)), Value::Text(b)) => a.to_lowercase() == b.to_lowercase(),
        (Some(a), b) => a == b,
        (None, _) => false,
    }
}

/// Case-insensitive substring match against a text cell.
fn contains_matches(cell: &Cell, value: &Value) -> bool {
    let needle = match value {
        Value::Text(s) => s.to_lowercase(),
        other => other.to_string().to_lowercase(),
    };
    match cell {
        Some(Value::Text(s)) => s.to_lowercase().contains(needle.as_str()),
        _ => false,
    }
}

/// Ordered comparison; text compares raw (case-sensitive), and values of
/// different types never compare.
fn in_order(cell: &Cell, value: &Value, accept: impl Fn(core::cmp::Ordering) -> bool) -> bool {
    match cell {
        Some(a) if a.value_type() == value.value_type() => accept(a.cmp(value)),
        _ => false,
    }
}
