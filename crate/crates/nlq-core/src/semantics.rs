//! Semantic modeling: from a parsed statement to an executable query intent.
//!
//! A schema map binds the dictionary's nouns to concrete tables and columns:
//! entity nouns ("document", "projects") name tables, attribute nouns
//! ("type", "date") name columns, and each table lists the keyword columns
//! searched when a query is just keywords. `analyze` walks a statement,
//! splits its object tokens into targets and keyword terms, resolves every
//! condition clause onto a column, and coerces values to the column type.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use crate::parser::{ConditionClause, ConditionKind, Statement};
use crate::value::{Value, ValueType};

// --- schema map --------------------------------------------------------------

/// One column: its data type plus the attribute nouns that select it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnBinding {
    pub name: String,
    pub value_type: ValueType,
    /// Case-folded attribute nouns bound to this column.
    pub attribute_nouns: Vec<String>,
}

/// One table: its data source, the entity nouns that select it, the columns
/// scanned for keyword matches, and its column bindings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableBinding {
    pub name: String,
    /// Data file the std layer loads this table from (verbatim from the map).
    pub source: Option<String>,
    /// Case-folded entity nouns bound to this table.
    pub entity_nouns: Vec<String>,
    pub keyword_columns: Vec<String>,
    pub columns: Vec<ColumnBinding>,
}

impl TableBinding {
    pub fn column(&self, name: &str) -> Option<&ColumnBinding> {
        self.columns.iter().find(|c| c.name.eq_ignore_ascii_case(name))
    }

    /// The column an attribute noun selects, if any.
    pub fn attribute_column(&self, noun: &str) -> Option<&ColumnBinding> {
        let folded = noun.to_lowercase();
        self.columns.iter().find(|c| c.attribute_nouns.contains(&folded))
    }
}

/// The full noun-to-storage binding for one catalog.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SchemaMap {
    pub tables: Vec<TableBinding>,
}

impl SchemaMap {
    pub fn table(&self, name: &str) -> Option<&TableBinding> {
        self.tables.iter().find(|t| t.name.eq_ignore_ascii_case(name))
    }

    /// The table an entity noun selects, if any.
    pub fn entity_target(&self, noun: &str) -> Option<&TableBinding> {
        let folded = noun.to_lowercase();
        self.tables.iter().find(|t| t.entity_nouns.contains(&folded))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SchemaError {
    /// Structural problem in the map file (bad section, unknown key, ...).
    Syntax { line: usize, message: String },
    /// The declarations contradict each other (duplicate nouns, keyword
    /// column that does not exist or is not text, ...).
    Conflict { message: String },
    /// No tables declared.
    Empty,
}

impl fmt::Display for SchemaError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SchemaError::Syntax { line, message } => write!(f, "schema line {line}: {message}"),
            SchemaError::Conflict { message } => write!(f, "schema: {message}"),
            SchemaError::Empty => f.write_str("schema declares no tables"),
        }
    }
}

impl core::error::Error for SchemaError {}

fn syntax(line: usize, message: impl fmt::Display) -> SchemaError {
    SchemaError::Syntax { line, message: message.to_string() }
}

fn conflict(message: impl fmt::Display) -> SchemaError {
    SchemaError::Conflict { message: message.to_string() }
}

/// Parses a schema map.
///
/// ```text
/// [table document]
/// source = document.tsv
/// nouns = document, documents
/// keyword-columns = Document_Name
///
/// [column Document_Type]
/// nouns = type
/// type = text
/// ```
///
/// `[column ...]` sections attach to the preceding `[table ...]`. Column
/// `type` is one of text / integer / datetime / boolean and defaults to text.
/// `#` starts a comment.
pub fn parse_schema(source: &str) -> Result<SchemaMap, SchemaError> {
    enum Scope {
        Top,
        Table,
        Column,
    }
    let mut map = SchemaMap::default();
    let mut scope = Scope::Top;

    for (idx, raw) in source.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.split_once('#') {
            Some((before, _)) => before,
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }

        if let Some(inner) = line.strip_prefix('[') {
            let inner = inner
                .strip_suffix(']')
                .ok_or_else(|| syntax(line_no, "unterminated section header"))?
                .trim();
            let mut parts = inner.split_whitespace();
            match (parts.next(), parts.next(), parts.next()) {
                (Some(kw), Some(name), None) if kw.eq_ignore_ascii_case("table") => {
                    map.tables.push(TableBinding {
                        name: name.to_string(),
                        source: None,
                        entity_nouns: Vec::new(),
                        keyword_columns: Vec::new(),
                        columns: Vec::new(),
                    });
                    scope = Scope::Table;
                }
                (Some(kw), Some(name), None) if kw.eq_ignore_ascii_case("column") => {
                    let table = map
                        .tables
                        .last_mut()
                        .ok_or_else(|| syntax(line_no, "[column ...] before any [table ...]"))?;
                    table.columns.push(ColumnBinding {
                        name: name.to_string(),
                        value_type: ValueType::Text,
                        attribute_nouns: Vec::new(),
                    });
                    scope = Scope::Column;
                }
                _ => return Err(syntax(line_no, "expected [table <name>] or [column <name>]")),
            }
            continue;
        }

        let (key, value) = line
            .split_once('=')
            .ok_or_else(|| syntax(line_no, "expected `key = value`"))?;
        let key = key.trim().to_lowercase();
        let value = value.trim();
        let nouns = || -> Vec<String> {
            value
                .split(',')
                .map(|n| n.trim().to_lowercase())
                .filter(|n| !n.is_empty())
                .collect()
        };
        match scope {
            Scope::Top => return Err(syntax(line_no, "key outside any section")),
            Scope::Table => {
                let table = map.tables.last_mut().expect("table scope");
                match key.as_str() {
                    "source" => table.source = Some(value.to_string()),
                    "nouns" => table.entity_nouns.extend(nouns()),
                    "keyword-columns" => table
                        .keyword_columns
                        .extend(value.split(',').map(|c| c.trim().to_string()).filter(|c| !c.is_empty())),
                    other => return Err(syntax(line_no, format_args!("unknown table key `{other}`"))),
                }
            }
            Scope::Column => {
                let table = map.tables.last_mut().expect("column scope");
                let column = table.columns.last_mut().expect("column scope");
                match key.as_str() {
                    "nouns" => column.attribute_nouns.extend(nouns()),
                    "type" => {
                        column.value_type = match value.to_lowercase().as_str() {
                            "text" => ValueType::Text,
                            "integer" => ValueType::Integer,
                            "datetime" => ValueType::DateTime,
                            "boolean" => ValueType::Boolean,
                            other => {
                                return Err(syntax(
                                    line_no,
                                    format_args!("unknown column type `{other}`"),
                                ))
                            }
                        }
                    }
                    other => return Err(syntax(line_no, format_args!("unknown column key `{other}`"))),
                }
            }
        }
    }

    validate_schema(&map)?;
    Ok(map)
}

fn validate_schema(map: &SchemaMap) -> Result<(), SchemaError> {
    if map.tables.is_empty() {
        return Err(SchemaError::Empty);
    }
    let mut seen_tables: Vec<String> = Vec::new();
    let mut seen_entities: Vec<&String> = Vec::new();
    for table in &map.tables {
        let folded = table.name.to_lowercase();
        if seen_tables.contains(&folded) {
            return Err(conflict(format_args!("table `{}` declared twice", table.name)));
        }
        seen_tables.push(folded);
        for noun in &table.entity_nouns {
            if seen_entities.contains(&noun) {
                return Err(conflict(format_args!("entity noun `{noun}` bound to two tables")));
            }
            seen_entities.push(noun);
        }
        let mut seen_cols: Vec<String> = Vec::new();
        let mut seen_attrs: Vec<&String> = Vec::new();
        for col in &table.columns {
            let folded = col.name.to_lowercase();
            if seen_cols.contains(&folded) {
                return Err(conflict(format_args!(
                    "column `{}` declared twice in table `{}`",
                    col.name, table.name
                )));
            }
            seen_cols.push(folded);
            for noun in &col.attribute_nouns {
                if seen_attrs.contains(&noun) {
                    return Err(conflict(format_args!(
                        "attribute noun `{noun}` bound to two columns of table `{}`",
                        table.name
                    )));
                }
                seen_attrs.push(noun);
            }
        }
        for kw in &table.keyword_columns {
            match table.column(kw) {
                None => {
                    return Err(conflict(format_args!(
                        "keyword column `{kw}` is not declared in table `{}`",
                        table.name
                    )))
                }
                Some(col) if col.value_type != ValueType::Text => {
                    return Err(conflict(format_args!(
                        "keyword column `{kw}` of table `{}` must be text, not {}",
                        table.name, col.value_type
                    )))
                }
                Some(_) => {}
            }
        }
    }
    Ok(())
}

// --- intent ------------------------------------------------------------------

/// Comparison operators in the executable model. `Ge`/`Le` have no natural
/// language spelling here and are reachable only through SQL passthrough or
/// hand-built intents.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompareOp {
    Eq,
    Contains,
    Between,
    Gt,
    Lt,
    Ge,
    Le,
}

impl CompareOp {
    pub fn name(self) -> &'static str {
        match self {
            CompareOp::Eq => "=",
            CompareOp::Contains => "contains",
            CompareOp::Between => "between",
            CompareOp::Gt => ">",
            CompareOp::Lt => "<",
            CompareOp::Ge => ">=",
            CompareOp::Le => "<=",
        }
    }
}

/// One executable condition against a concrete column. `Eq` with several
/// values means "any of these" (the alternatives reading of "doc and pdf");
/// `Between` carries exactly two ordered bounds; the comparison operators
/// carry exactly one value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Condition {
    pub column: String,
    pub operator: CompareOp,
    pub values: Vec<Value>,
}

/// One table to search, with its keyword columns and resolved conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TargetQuery {
    pub table: String,
    pub keyword_columns: Vec<String>,
    pub conditions: Vec<Condition>,
}

/// The executable model of a query: which tables to search, which keyword
/// terms every match must contain, and the per-table conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QueryIntent {
    pub targets: Vec<TargetQuery>,
    /// Case-folded keyword terms; a matching row contains every term in at
    /// least one keyword column.
    pub keyword_terms: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SemanticError {
    /// No entity noun matched and no table has keyword columns.
    NoTarget,
    /// An attribute noun resolves onto no candidate table's columns.
    UnknownAttribute { noun: String },
    /// An attribute noun (set) leaves more than one candidate table.
    AmbiguousAttribute { noun: String, tables: Vec<String> },
    /// A range or comparison clause named no attribute to bind to.
    MissingAttribute { kind: ConditionKind },
    /// A condition value does not conform to the column's type.
    ValueCoercion { raw: String, expected: ValueType },
    /// Keywords were given but the target table declares no keyword columns.
    NoKeywordColumns { table: String },
}

impl fmt::Display for SemanticError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SemanticError::NoTarget => {
                f.write_str("no table to search: name one, or declare keyword columns")
            }
            SemanticError::UnknownAttribute { noun } => {
                write!(f, "no searchable column is called `{noun}` here")
            }
            SemanticError::AmbiguousAttribute { noun, tables } => {
                write!(f, "`{noun}` matches columns in several tables (")?;
                for (i, t) in tables.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    f.write_str(t)?;
                }
                f.write_str("); name the table")
            }
            SemanticError::MissingAttribute { kind } => {
                write!(f, "{kind} condition does not say which attribute to compare")
            }
            SemanticError::ValueCoercion { raw, expected } => {
                write!(f, "cannot interpret `{raw}` as {expected}")
            }
            SemanticError::NoKeywordColumns { table } => {
                write!(f, "table `{table}` has no keyword columns to match terms against")
            }
        }
    }
}

impl core::error::Error for SemanticError {}

/// Coerces a raw token text to a typed value.
pub fn coerce_value(raw: &str, ty: ValueType) -> Result<Value, SemanticError> {
    Value::parse_as(raw, ty).ok_or_else(|| SemanticError::ValueCoercion {
        raw: raw.to_string(),
        expected: ty,
    })
}

/// Resolves an attribute noun against candidate tables; the hit must be
/// unique across candidates.
pub fn resolve_attribute<'a>(
    noun: &str,
    candidates: &[&'a TableBinding],
) -> Result<(&'a TableBinding, &'a ColumnBinding), SemanticError> {
    let mut hits = candidates
        .iter()
        .filter_map(|t| t.attribute_column(noun).map(|c| (*t, c)));
    match (hits.next(), hits.next()) {
        (None, _) => Err(SemanticError::UnknownAttribute { noun: noun.to_string() }),
        (Some(hit), None) => Ok(hit),
        (Some(first), Some(second)) => {
            let mut tables = alloc::vec![first.0.name.clone(), second.0.name.clone()];
            tables.extend(hits.map(|(t, _)| t.name.clone()));
            Err(SemanticError::AmbiguousAttribute { noun: noun.to_string(), tables })
        }
    }
}

/// Builds the executable intent for a statement.
///
/// Object tokens that match entity nouns become targets; the rest become
/// keyword terms. Without an entity noun the search fans out over every
/// table that has keyword columns. Condition clauses narrow the candidates
/// to the single table where all named attributes resolve; clauses that name
/// no attribute contribute their values as extra keyword terms.
pub fn analyze(stmt: &Statement, schema: &SchemaMap) -> Result<QueryIntent, SemanticError> {
    let mut explicit: Vec<&TableBinding> = Vec::new();
    let mut keywords: Vec<String> = Vec::new();
    for tok in &stmt.objects {
        match schema.entity_target(&tok.normalized) {
            Some(table) => {
                if !explicit.iter().any(|t| t.name == table.name) {
                    explicit.push(table);
                }
            }
            None => keywords.push(tok.normalized.clone()),
        }
    }

    let candidates: Vec<&TableBinding> = if explicit.is_empty() {
        schema.tables.iter().filter(|t| !t.keyword_columns.is_empty()).collect()
    } else {
        explicit
    };
    if candidates.is_empty() {
        return Err(SemanticError::NoTarget);
    }

    let mut attributed: Vec<&ConditionClause> = Vec::new();
    for clause in &stmt.conditions {
        match &clause.attribute {
            Some(_) => attributed.push(clause),
            None => match clause.kind {
                ConditionKind::Equal | ConditionKind::With => {
                    keywords.extend(clause.values.iter().map(|v| v.normalized.clone()));
                }
                kind => return Err(SemanticError::MissingAttribute { kind }),
            },
        }
    }

    let targets: Vec<TargetQuery> = if attributed.is_empty() {
        candidates
            .iter()
            .map(|t| TargetQuery {
                table: t.name.clone(),
                keyword_columns: t.keyword_columns.clone(),
                conditions: Vec::new(),
            })
            .collect()
    } else {
        // Narrow to the single table where every named attribute resolves.
        let mut surviving = candidates.clone();
        for clause in &attributed {
            let noun = &clause.attribute.as_ref().expect("attributed clause").normalized;
            let next: Vec<&TableBinding> = surviving
                .iter()
                .copied()
                .filter(|t| t.attribute_column(noun).is_some())
                .collect();
            if next.is_empty() {
                return Err(SemanticError::UnknownAttribute { noun: noun.clone() });
            }
            surviving = next;
        }
        if surviving.len() > 1 {
            let noun = attributed[0].attribute.as_ref().expect("attributed clause");
            return Err(SemanticError::AmbiguousAttribute {
                noun: noun.normalized.clone(),
                tables: surviving.iter().map(|t| t.name.clone()).collect(),
            });
        }
        let target = surviving[0];
        let mut conditions = Vec::new();
        for clause in &attributed {
            let noun = &clause.attribute.as_ref().expect("attributed clause").normalized;
            let column = target.attribute_column(noun).expect("narrowed table resolves");
            let operator = match clause.kind {
                ConditionKind::Equal | ConditionKind::With => CompareOp::Eq,
                ConditionKind::Between => CompareOp::Between,
                ConditionKind::Greater | ConditionKind::GreaterThan => CompareOp::Gt,
                ConditionKind::Less | ConditionKind::LessThan => CompareOp::Lt,
            };
            let mut values = Vec::with_capacity(clause.values.len());
            for tok in &clause.values {
                values.push(coerce_value(&tok.normalized, column.value_type)?);
            }
            if operator == CompareOp::Between && values[0] > values[1] {
                values.swap(0, 1);
            }
            conditions.push(Condition { column: column.name.clone(), operator, values });
        }
        alloc::vec![TargetQuery {
            table: target.name.clone(),
            keyword_columns: target.keyword_columns.clone(),
            conditions,
        }]
    };

    if !keywords.is_empty() {
        for target in &targets {
            if target.keyword_columns.is_empty() {
                return Err(SemanticError::NoKeywordColumns { table: target.table.clone() });
            }
        }
    }

    Ok(QueryIntent { targets, keyword_terms: keywords })
}
