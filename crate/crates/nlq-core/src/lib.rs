//! # Natural-language search over product-data tables.
//!
//! This crate turns short English queries into structured lookups against
//! tab-separated tables. The pipeline has five steps:
//!
//! 1. **read** — load a schema description and the table data it points at
//!    ([`parse_schema`], [`load_table`]).
//! 2. **tokenize** — split the query into words and classify each against a
//!    dictionary ([`tokenize`], [`builtin_lexicon`]).
//! 3. **parse** — match the token classes against a small set of statement
//!    shapes, from bare keywords up to condition clauses ([`parse`]).
//! 4. **model** — resolve entity and attribute nouns against the schema into
//!    a [`QueryIntent`]: which tables to search, which column conditions to
//!    apply, which words remain as free keywords ([`analyze`]).
//! 5. **generate** — render one SQL `SELECT` per target table ([`to_sql`]).
//!
//! The generated SQL runs on the embedded store ([`execute_sql`]), which also
//! accepts raw statements in the same subset. [`execute_intent`] evaluates an
//! intent without going through SQL at all; both routes must return the same
//! rows, and the test suite holds them to that.
//!
//! ```
//! use nlq_core::{analyze, builtin_lexicon, parse, to_sql, tokenize};
//! # let schema_text = "\
//! # [table document]
//! # nouns = document, documents
//! # keyword-columns = Document_Name
//! # [column Document_Name]
//! # nouns = name
//! # [column Document_Type]
//! # nouns = type
//! # ";
//! let schema = nlq_core::parse_schema(schema_text).unwrap();
//! let lexicon = builtin_lexicon();
//!
//! let tokens = tokenize("I am looking for PDM where Document Type is doc", &lexicon);
//! let statement = parse(&tokens).unwrap();
//! let intent = analyze(&statement, &schema).unwrap();
//! let sql = to_sql(&intent);
//!
//! assert_eq!(
//!     sql[0].text,
//!     "SELECT * FROM document WHERE LOWER(Document_Type) = 'doc' AND \
//!      (LOWER(Document_Name) LIKE '%pdm%')"
//! );
//! ```
//!
//! The crate is `no_std` with `alloc`; everything that touches files or a
//! terminal lives in the companion CLI crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

mod lexer;
mod lexicon;
mod parser;
mod semantics;
mod sqlgen;
mod store;
mod value;

pub use lexer::{tokenize, Token, TokenStream};
pub use lexicon::{
    builtin_lexicon, classify, extend_lexicon, load_lexicon, ClassSet, Lexicon, LexiconError,
    TokenClass,
};
pub use parser::{
    match_rule, parse, ConditionClause, ConditionKind, ParseError, ParseResult, RuleId,
    Statement, StatementKind,
};
pub use semantics::{
    analyze, parse_schema, resolve_attribute, ColumnBinding, CompareOp, Condition, QueryIntent,
    SchemaError, SchemaMap, SemanticError, TableBinding, TargetQuery,
};
pub use sqlgen::{to_sql, SqlQuery};
pub use store::{execute_intent, execute_sql, load_table, ResultSet, StoreError, TableData};
pub use value::{Cell, DateTime, Value, ValueType};
