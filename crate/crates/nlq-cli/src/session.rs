//! A loaded catalog plus everything needed to answer queries: the dictionary
//! (extended with the schema's own nouns), the schema map, and the tables.

use std::collections::BTreeMap;
use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use nlq_core::{
    analyze, builtin_lexicon, execute_sql, extend_lexicon, load_table, parse, parse_schema,
    to_sql, tokenize, Lexicon, LexiconError, ParseError, QueryIntent, ResultSet, SchemaError,
    SchemaMap, SemanticError, SqlQuery, Statement, StoreError, TableData, TokenClass,
    TokenStream,
};

#[derive(Debug)]
pub enum SessionError {
    Schema(SchemaError),
    Lexicon(LexiconError),
    Store(StoreError),
    /// A table declares no data and none was supplied for it.
    MissingSource { table: String },
    Io { path: PathBuf, error: std::io::Error },
}

impl fmt::Display for SessionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SessionError::Schema(e) => write!(f, "{e}"),
            SessionError::Lexicon(e) => write!(f, "{e}"),
            SessionError::Store(e) => write!(f, "{e}"),
            SessionError::MissingSource { table } => {
                write!(f, "no data supplied for table `{table}`")
            }
            SessionError::Io { path, error } => write!(f, "{}: {error}", path.display()),
        }
    }
}

impl std::error::Error for SessionError {}

impl From<SchemaError> for SessionError {
    fn from(e: SchemaError) -> Self {
        SessionError::Schema(e)
    }
}

impl From<LexiconError> for SessionError {
    fn from(e: LexiconError) -> Self {
        SessionError::Lexicon(e)
    }
}

impl From<StoreError> for SessionError {
    fn from(e: StoreError) -> Self {
        SessionError::Store(e)
    }
}

/// Anything that can go wrong while answering one query. The session stays
/// usable afterwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QueryError {
    Empty,
    Parse(ParseError),
    Semantic(SemanticError),
    Store(StoreError),
}

impl fmt::Display for QueryError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QueryError::Empty => f.write_str("empty query"),
            QueryError::Parse(e) => write!(f, "{e}"),
            QueryError::Semantic(e) => write!(f, "{e}"),
            QueryError::Store(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for QueryError {}

/// What one input produced. Natural-language queries keep every
/// intermediate stage so callers can show their work.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum QueryOutcome {
    NaturalLanguage {
        tokens: TokenStream,
        statement: Statement,
        intent: QueryIntent,
        sql: Vec<SqlQuery>,
        results: Vec<(String, ResultSet)>,
    },
    /// Raw SQL passthrough (input started with `select`).
    Sql { results: ResultSet },
}

impl QueryOutcome {
    /// Total row count across all targets.
    pub fn total_rows(&self) -> usize {
        match self {
            QueryOutcome::NaturalLanguage { results, .. } => {
                results.iter().map(|(_, r)| r.rows.len()).sum()
            }
            QueryOutcome::Sql { results } => results.rows.len(),
        }
    }
}

pub struct Session {
    pub lexicon: Lexicon,
    pub schema: SchemaMap,
    pub tables: Vec<TableData>,
}

impl Session {
    /// Builds a session from schema text and per-table data text. `sources`
    /// is keyed by table name.
    pub fn new(
        schema_text: &str,
        lexicon_text: Option<&str>,
        sources: &[(&str, &str)],
    ) -> Result<Session, SessionError> {
        let schema = parse_schema(schema_text)?;
        let mut lexicon = match lexicon_text {
            Some(text) => nlq_core::load_lexicon(text)?,
            None => builtin_lexicon(),
        };
        absorb_schema_nouns(&mut lexicon, &schema);

        let by_name: BTreeMap<&str, &str> = sources.iter().copied().collect();
        let mut tables = Vec::with_capacity(schema.tables.len());
        for binding in &schema.tables {
            let data = by_name
                .get(binding.name.as_str())
                .ok_or_else(|| SessionError::MissingSource { table: binding.name.clone() })?;
            tables.push(load_table(data, binding)?);
        }
        Ok(Session { lexicon, schema, tables })
    }

    /// Builds a session from files: the schema map plus one data file per
    /// table, found next to the schema unless `data_dir` says otherwise.
    pub fn from_files(
        schema_path: &Path,
        data_dir: Option<&Path>,
        lexicon_path: Option<&Path>,
    ) -> Result<Session, SessionError> {
        let schema_text = read(schema_path)?;
        let schema = parse_schema(&schema_text)?;

        let lexicon_text = match lexicon_path {
            Some(p) => Some(read(p)?),
            None => None,
        };
        let mut lexicon = builtin_lexicon();
        if let Some(text) = &lexicon_text {
            extend_lexicon(&mut lexicon, text)?;
        }
        absorb_schema_nouns(&mut lexicon, &schema);

        let dir = data_dir
            .map(Path::to_path_buf)
            .or_else(|| schema_path.parent().map(Path::to_path_buf))
            .unwrap_or_else(|| PathBuf::from("."));
        let mut tables = Vec::with_capacity(schema.tables.len());
        for binding in &schema.tables {
            let file = binding
                .source
                .clone()
                .unwrap_or_else(|| format!("{}.tsv", binding.name));
            let data = read(&dir.join(file))?;
            tables.push(load_table(&data, binding)?);
        }
        Ok(Session { lexicon, schema, tables })
    }

    /// Answers one input line. Inputs starting with `select` run as raw SQL;
    /// everything else goes through the language pipeline and executes via
    /// the generated SQL.
    pub fn run_query(&self, input: &str) -> Result<QueryOutcome, QueryError> {
        if input.trim().is_empty() {
            return Err(QueryError::Empty);
        }
        if is_raw_sql(input) {
            let results = execute_sql(input, &self.tables).map_err(QueryError::Store)?;
            return Ok(QueryOutcome::Sql { results });
        }

        let tokens = tokenize(input, &self.lexicon);
        let statement = parse(&tokens).map_err(QueryError::Parse)?;
        let intent = analyze(&statement, &self.schema).map_err(QueryError::Semantic)?;
        let sql = to_sql(&intent);
        let mut results = Vec::with_capacity(sql.len());
        for query in &sql {
            let set = execute_sql(&query.text, &self.tables).map_err(QueryError::Store)?;
            results.push((query.table.clone(), set));
        }
        Ok(QueryOutcome::NaturalLanguage { tokens, statement, intent, sql, results })
    }
}

/// `select ...` (any casing) is passed to the SQL engine untouched.
pub fn is_raw_sql(input: &str) -> bool {
    input
        .trim_start()
        .split_whitespace()
        .next()
        .is_some_and(|w| w.eq_ignore_ascii_case("select"))
}

/// Every entity and attribute noun from the schema becomes an Object word,
/// so a custom catalog is understood without touching the dictionary file.
fn absorb_schema_nouns(lexicon: &mut Lexicon, schema: &SchemaMap) {
    for table in &schema.tables {
        for noun in &table.entity_nouns {
            lexicon.add(noun, TokenClass::Object);
        }
        for column in &table.columns {
            for noun in &column.attribute_nouns {
                lexicon.add(noun, TokenClass::Object);
                lexicon.add_attribute(noun);
            }
        }
    }
}

fn read(path: &Path) -> Result<String, SessionError> {
    fs::read_to_string(path)
        .map_err(|error| SessionError::Io { path: path.to_path_buf(), error })
}
