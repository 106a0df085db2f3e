//! The built-in demo catalog: four small product-data tables and a corpus of
//! queries with known answers, used by `nlq demo` and by the test suite.

use nlq_core::{RuleId, StatementKind};

use crate::session::Session;

pub const SCHEMA: &str = include_str!("../demo/demo.schema");
pub const DOCUMENT_TSV: &str = include_str!("../demo/document.tsv");
pub const PROJECT_TSV: &str = include_str!("../demo/project.tsv");
pub const PRODUCT_TSV: &str = include_str!("../demo/product.tsv");
pub const DESIGN_TSV: &str = include_str!("../demo/design.tsv");

/// A session over the embedded demo catalog.
pub fn demo_session() -> Session {
    Session::new(
        SCHEMA,
        None,
        &[
            ("document", DOCUMENT_TSV),
            ("project", PROJECT_TSV),
            ("product", PRODUCT_TSV),
            ("design", DESIGN_TSV),
        ],
    )
    .expect("the embedded demo catalog must load")
}

/// One demo query with its full expectation: how it parses and how many
/// rows it finds across all targets in the demo tables.
pub struct DemoQuery {
    pub text: &'static str,
    pub kind: StatementKind,
    pub rule: RuleId,
    pub total_rows: usize,
}

pub const DEMO_CORPUS: &[DemoQuery] = &[
    DemoQuery { text: "PDM", kind: StatementKind::Keyword, rule: RuleId::Cstmt, total_rows: 2 },
    DemoQuery { text: "CAD", kind: StatementKind::Keyword, rule: RuleId::Cstmt, total_rows: 7 },
    DemoQuery {
        text: "want PDM",
        kind: StatementKind::ShortObjective,
        rule: RuleId::Stmt2,
        total_rows: 2,
    },
    DemoQuery {
        text: "need CAD",
        kind: StatementKind::ShortObjective,
        rule: RuleId::Stmt2,
        total_rows: 7,
    },
    DemoQuery {
        text: "I am looking for PDM",
        kind: StatementKind::SimpleObjective,
        rule: RuleId::Stmt1,
        total_rows: 2,
    },
    DemoQuery {
        text: "He is looking for CAD",
        kind: StatementKind::SimpleObjective,
        rule: RuleId::Stmt1,
        total_rows: 7,
    },
    DemoQuery {
        text: "I am looking for CAD document",
        kind: StatementKind::SimpleObjective,
        rule: RuleId::Stmt1,
        total_rows: 4,
    },
    DemoQuery {
        text: "give CAD desing",
        kind: StatementKind::ShortObjective,
        rule: RuleId::Stmt2,
        total_rows: 0,
    },
    DemoQuery {
        text: "I am looking for PDM where Document Type is doc",
        kind: StatementKind::MultiCondition,
        rule: RuleId::CondEq,
        total_rows: 1,
    },
    DemoQuery {
        text: "I need PDF with Document Type doc and pdf",
        kind: StatementKind::MultiCondition,
        rule: RuleId::CondWEq,
        total_rows: 2,
    },
    DemoQuery {
        text: "She need PDM with Document Type doc and Pdf",
        kind: StatementKind::MultiCondition,
        rule: RuleId::CondWEq,
        total_rows: 1,
    },
    DemoQuery {
        text: "I am looking for CAD Design between Number 100 and 200",
        kind: StatementKind::MultiCondition,
        rule: RuleId::CondBt,
        total_rows: 1,
    },
    DemoQuery {
        text: "I need CAD with name MotorEngine and type BMP",
        kind: StatementKind::MultiCondition,
        rule: RuleId::CondWEq,
        total_rows: 1,
    },
    DemoQuery {
        text: "I want Project with PDM name PDMDatabase",
        kind: StatementKind::MultiCondition,
        rule: RuleId::CondWEq,
        total_rows: 1,
    },
    DemoQuery {
        text: "looking for a Project where PDMDatabase name is between 2000 to 2009 Date",
        kind: StatementKind::MultiCondition,
        rule: RuleId::CondQBt,
        total_rows: 1,
    },
];

/// A query with its expected statement shape, for pinning the grammar
/// without involving any table data.
pub struct GoldenParse {
    pub text: &'static str,
    pub kind: StatementKind,
    pub rule: RuleId,
}

macro_rules! golden {
    ($text:literal, $kind:ident, $rule:ident) => {
        GoldenParse { text: $text, kind: StatementKind::$kind, rule: RuleId::$rule }
    };
}

pub const GOLDEN_PARSES: &[GoldenParse] = &[
    golden!("PDM", Keyword, Cstmt),
    golden!("CAD", Keyword, Cstmt),
    golden!("Documents", Keyword, Cstmt),
    golden!("CAD Designs", Keyword, Cstmt),
    golden!("PDM Documents", Keyword, Cstmt),
    golden!("want CAD", ShortObjective, Stmt2),
    golden!("need PDM", ShortObjective, Stmt2),
    golden!("want PDM", ShortObjective, Stmt2),
    golden!("need CAD", ShortObjective, Stmt2),
    golden!("give CAD desing", ShortObjective, Stmt2),
    golden!("Give me CAD designs of Car parts", ShortObjective, Stmt2),
    golden!("I am looking for CAD", SimpleObjective, Stmt1),
    golden!("I am looking for PDM", SimpleObjective, Stmt1),
    golden!("He is looking for CAD", SimpleObjective, Stmt1),
    golden!("I am looking for PDM Systems", SimpleObjective, Stmt1),
    golden!("I am looking for PDM Document", SimpleObjective, Stmt1),
    golden!("I need CAD Designs", SimpleObjective, Stmt1),
    golden!("I am looking for CAD document", SimpleObjective, Stmt1),
    golden!("I need Product and Project Document", SimpleObjective, Stmt1),
    golden!("I am looking for CAD where document type is doc", MultiCondition, CondEq),
    golden!("I am looking for PDM where document type is doc and pdf", MultiCondition, CondEq),
    golden!("I am looking for PDM where Document Type is doc", MultiCondition, CondEq),
    golden!("I am looking for PDM Documents where Document Type is doc", MultiCondition, CondEq),
    golden!("I am looking for CAD where document equals to Screw", MultiCondition, CondEq),
    golden!("I want Document where Author equal to Michael", MultiCondition, CondEq),
    golden!(
        "We are looking for Project details between Date 01-09-08 and 01-09-09",
        MultiCondition,
        CondBt
    ),
    golden!("I am looking for CAD Design between Number 100 and 200", MultiCondition, CondBt),
    golden!("I need CAD with name MotorEngine and type BMP", MultiCondition, CondWEq),
    golden!("I want Project with PDM name PDMDatabase", MultiCondition, CondWEq),
    golden!("I need PDF with Document Type doc and pdf", MultiCondition, CondWEq),
    golden!("She need PDM with Document Type doc and Pdf", MultiCondition, CondWEq),
    golden!(
        "looking for a Project where PDMDatabase name is between 2000 to 2009 Date",
        MultiCondition,
        CondQBt
    ),
];
