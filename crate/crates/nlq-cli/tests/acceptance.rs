//! Acceptance criteria for the whole engine, one test per criterion. Each
//! prints a PASS line once its assertions hold, so a full run reads as a
//! checklist.

use std::time::{Duration, Instant};

use nlq_cli::demo::{demo_session, DEMO_CORPUS, GOLDEN_PARSES};
use nlq_cli::session::{QueryOutcome, Session};
use nlq_core::{
    builtin_lexicon, execute_intent, execute_sql, parse, to_sql, tokenize, Cell, CompareOp,
    Condition, DateTime, QueryIntent, ResultSet, TableData, TargetQuery, Value, ValueType,
};

fn nl_results(session: &Session, query: &str) -> Vec<(String, ResultSet)> {
    match session.run_query(query) {
        Ok(QueryOutcome::NaturalLanguage { results, .. }) => results,
        other => panic!("expected a natural-language outcome for {query:?}, got {other:?}"),
    }
}

fn name_column(set: &ResultSet) -> Vec<String> {
    let idx = set.columns.iter().position(|c| c == "Document_Name").unwrap();
    set.rows.iter().map(|r| r[idx].as_ref().unwrap().to_string()).collect()
}

/// The worked example: a keyword plus a two-alternative type condition must
/// find exactly the two matching documents, quickly.
#[test]
fn criterion_1_worked_example_rows() {
    let session = demo_session();
    let started = Instant::now();
    let results = nl_results(&session, "I need PDF with Document Type doc and pdf");
    let elapsed = started.elapsed();

    assert_eq!(results.len(), 1, "one target table");
    assert_eq!(results[0].0, "document");
    assert_eq!(name_column(&results[0].1), ["PDF", "PDF Document"]);
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("PASS: worked example returns exactly PDF and PDF Document in {elapsed:?}");
}

/// The language route and a hand-written SQL equality must agree on the
/// same rows.
#[test]
fn criterion_2_language_route_matches_hand_sql() {
    let session = demo_session();
    let nl = nl_results(&session, "I am looking for PDM where Document Type is doc");
    let sql = execute_sql(
        "select * from document where LOWER(Document_Type) = 'doc' and \
         LOWER(Document_Name) = 'pdm'",
        &session.tables,
    )
    .unwrap();

    assert_eq!(nl.len(), 1);
    assert_eq!(nl[0].1.rows, sql.rows);
    assert_eq!(name_column(&nl[0].1), ["PDM"]);
    println!("PASS: language route and handwritten SQL select the same rows");
}

/// Every query in the golden table parses to its documented statement shape
/// and grammar rule.
#[test]
fn criterion_3_golden_parse_table() {
    let lexicon = builtin_lexicon();
    let mut checked = 0;
    for golden in GOLDEN_PARSES {
        let statement = parse(&tokenize(golden.text, &lexicon))
            .unwrap_or_else(|e| panic!("{:?} failed to parse: {e}", golden.text));
        assert_eq!(statement.kind, golden.kind, "kind for {:?}", golden.text);
        assert_eq!(statement.matched_rule, golden.rule, "rule for {:?}", golden.text);
        checked += 1;
    }
    println!("PASS: all {checked} golden queries parse to their documented shape");
}

/// Letter case must never change an answer: every demo query returns the
/// same rows when spelled lowercase or uppercase.
#[test]
fn criterion_4_case_insensitive_answers() {
    let session = demo_session();
    for demo in DEMO_CORPUS {
        let original = nl_results(&session, demo.text);
        let lower = nl_results(&session, &demo.text.to_lowercase());
        let upper = nl_results(&session, &demo.text.to_uppercase());
        assert_eq!(original, lower, "lowercase changed {:?}", demo.text);
        assert_eq!(original, upper, "uppercase changed {:?}", demo.text);
    }
    println!(
        "PASS: {} demo queries are case-insensitive end to end",
        DEMO_CORPUS.len()
    );
}

// --- criterion 5: randomized route equivalence --------------------------

/// xorshift64*; fixed seed, no dependencies, good enough spread.
struct Rng(u64);

impl Rng {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        self.0 = x;
        x.wrapping_mul(0x2545_F491_4F6C_DD1D)
    }

    fn below(&mut self, n: usize) -> usize {
        (self.next() % n as u64) as usize
    }

    fn chance(&mut self, one_in: usize) -> bool {
        self.below(one_in) == 0
    }
}

const COLUMNS: [(&str, ValueType); 6] = [
    ("Name", ValueType::Text),
    ("Category", ValueType::Text),
    ("Author", ValueType::Text),
    ("Seq", ValueType::Integer),
    ("Created", ValueType::DateTime),
    ("Active", ValueType::Boolean),
];

const TEXTS: [&str; 10] =
    ["Gear", "gear", "Motor Engine", "it's", "O'Brien", "pdf", "doc", "Zebra", "x", ""];

fn random_value(rng: &mut Rng, ty: ValueType) -> Value {
    match ty {
        ValueType::Text => Value::Text(TEXTS[rng.below(TEXTS.len())].to_string()),
        ValueType::Integer => Value::Integer(rng.below(100) as i64 - 50),
        ValueType::DateTime => Value::DateTime(
            DateTime::new(
                2005 + rng.below(7) as u16,
                1 + rng.below(12) as u8,
                1 + rng.below(28) as u8,
                rng.below(24) as u8,
                rng.below(60) as u8,
                rng.below(60) as u8,
            )
            .unwrap(),
        ),
        ValueType::Boolean => Value::Boolean(rng.chance(2)),
    }
}

fn random_table(rng: &mut Rng) -> TableData {
    let rows = (0..rng.below(30))
        .map(|_| {
            COLUMNS
                .iter()
                .map(|(_, ty)| if rng.chance(8) { None } else { Some(random_value(rng, *ty)) })
                .collect()
        })
        .collect();
    TableData {
        name: "item".to_string(),
        columns: COLUMNS.iter().map(|(n, t)| (n.to_string(), *t)).collect(),
        rows,
    }
}

/// Random but contract-respecting condition: equality and substring text
/// values arrive folded, substring only on text, values typed per column.
fn random_condition(rng: &mut Rng) -> Condition {
    let (name, ty) = COLUMNS[rng.below(COLUMNS.len())];
    let column = name.to_string();
    match ty {
        ValueType::Text => match rng.below(4) {
            0 => Condition {
                column,
                operator: CompareOp::Eq,
                values: (0..1 + rng.below(2))
                    .map(|_| match random_value(rng, ty) {
                        Value::Text(s) => Value::Text(s.to_lowercase()),
                        v => v,
                    })
                    .collect(),
            },
            1 => Condition {
                column,
                operator: CompareOp::Contains,
                values: vec![match random_value(rng, ty) {
                    Value::Text(s) => Value::Text(s.to_lowercase()),
                    v => v,
                }],
            },
            2 => Condition {
                column,
                operator: if rng.chance(2) { CompareOp::Gt } else { CompareOp::Lt },
                values: vec![random_value(rng, ty)],
            },
            _ => Condition {
                column,
                operator: CompareOp::Between,
                values: vec![random_value(rng, ty), random_value(rng, ty)],
            },
        },
        ValueType::Boolean => Condition {
            column,
            operator: CompareOp::Eq,
            values: vec![random_value(rng, ty)],
        },
        _ => match rng.below(4) {
            0 => Condition {
                column,
                operator: CompareOp::Eq,
                values: (0..1 + rng.below(2)).map(|_| random_value(rng, ty)).collect(),
            },
            1 => Condition {
                column,
                operator: CompareOp::Between,
                values: vec![random_value(rng, ty), random_value(rng, ty)],
            },
            _ => Condition {
                column,
                operator: [CompareOp::Gt, CompareOp::Lt, CompareOp::Ge, CompareOp::Le]
                    [rng.below(4)],
                values: vec![random_value(rng, ty)],
            },
        },
    }
}

fn random_intent(rng: &mut Rng) -> QueryIntent {
    const TERMS: [&str; 7] = ["gear", "motor", "o'brien", "pdf", "doc", "e", "x"];
    QueryIntent {
        targets: vec![TargetQuery {
            table: "item".to_string(),
            keyword_columns: vec!["Name".to_string(), "Category".to_string()],
            conditions: (0..rng.below(3)).map(|_| random_condition(rng)).collect(),
        }],
        keyword_terms: (0..rng.below(3))
            .map(|_| TERMS[rng.below(TERMS.len())].to_string())
            .collect(),
    }
}

/// Plain nested-loop reference evaluator, sharing no code with the engine.
fn reference_rows(intent: &QueryIntent, table: &TableData) -> Vec<Vec<Cell>> {
    let target = &intent.targets[0];
    let idx = |name: &str| table.columns.iter().position(|(c, _)| c == name).unwrap();
    let ord = |a: &Value, b: &Value| -> Option<std::cmp::Ordering> {
        match (a, b) {
            (Value::Text(x), Value::Text(y)) => Some(x.cmp(y)),
            (Value::Integer(x), Value::Integer(y)) => Some(x.cmp(y)),
            (Value::DateTime(x), Value::DateTime(y)) => Some(x.cmp(y)),
            (Value::Boolean(x), Value::Boolean(y)) => Some(x.cmp(y)),
            _ => None,
        }
    };
    table
        .rows
        .iter()
        .filter(|row| {
            let conditions_hold = target.conditions.iter().all(|c| {
                let Some(cell) = &row[idx(&c.column)] else { return false };
                match c.operator {
                    CompareOp::Eq => c.values.iter().any(|v| match (cell, v) {
                        (Value::Text(a), Value::Text(b)) => a.to_lowercase() == b.to_lowercase(),
                        (a, b) => a == b,
                    }),
                    CompareOp::Contains => match (cell, &c.values[0]) {
                        (Value::Text(a), Value::Text(b)) => {
                            a.to_lowercase().contains(&b.to_lowercase())
                        }
                        _ => false,
                    },
                    CompareOp::Between => {
                        ord(cell, &c.values[0]).is_some_and(|o| o != std::cmp::Ordering::Less)
                            && ord(cell, &c.values[1])
                                .is_some_and(|o| o != std::cmp::Ordering::Greater)
                    }
                    CompareOp::Gt => ord(cell, &c.values[0]) == Some(std::cmp::Ordering::Greater),
                    CompareOp::Lt => ord(cell, &c.values[0]) == Some(std::cmp::Ordering::Less),
                    CompareOp::Ge => {
                        ord(cell, &c.values[0]).is_some_and(|o| o != std::cmp::Ordering::Less)
                    }
                    CompareOp::Le => {
                        ord(cell, &c.values[0]).is_some_and(|o| o != std::cmp::Ordering::Greater)
                    }
                }
            });
            conditions_hold
                && intent.keyword_terms.iter().all(|term| {
                    target.keyword_columns.iter().any(|kc| match &row[idx(kc)] {
                        Some(Value::Text(s)) => s.to_lowercase().contains(&term.to_lowercase()),
                        _ => false,
                    })
                })
        })
        .cloned()
        .collect()
}

/// For 1000 random table/intent pairs, the direct intent evaluator, the
/// SQL route, and a brute-force scanner must return identical rows, within
/// a minute overall.
#[test]
fn criterion_5_route_equivalence_under_randomness() {
    let mut rng = Rng(0x1234_5678_9abc_def0);
    let started = Instant::now();
    for round in 0..1000 {
        let table = random_table(&mut rng);
        let intent = random_intent(&mut rng);
        let expected = reference_rows(&intent, &table);

        let direct = execute_intent(&intent, std::slice::from_ref(&table)).unwrap();
        assert_eq!(direct[0].1.rows, expected, "direct route diverged in round {round}");

        let sql = to_sql(&intent);
        let via_sql = execute_sql(&sql[0].text, std::slice::from_ref(&table)).unwrap();
        assert_eq!(
            via_sql.rows, expected,
            "SQL route diverged in round {round}: {}",
            sql[0].text
        );
    }
    let elapsed = started.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!("PASS: 1000 random queries agree across all three evaluators in {elapsed:?}");
}

/// Hammering the session with 10,000 arbitrary inputs must produce a typed
/// answer or a typed error every time, each within two seconds.
#[test]
fn criterion_6_fuzz_never_panics() {
    const WORDS: [&str; 32] = [
        "i", "we", "want", "need", "looking", "is", "are", "where", "with", "between", "and",
        "to", "equal", "than", "greater", "less", "pdm", "cad", "document", "name", "type",
        "number", "date", "100", "2009", "select", "from", "*", "'", "%", "абв", "🦀",
    ];
    let session = demo_session();
    let mut rng = Rng(0xfeed_babe_dead_beef);
    let (mut answered, mut rejected) = (0usize, 0usize);
    for round in 0..10_000 {
        let input = (0..rng.below(10))
            .map(|_| WORDS[rng.below(WORDS.len())])
            .collect::<Vec<_>>()
            .join(" ");
        let started = Instant::now();
        match session.run_query(&input) {
            Ok(_) => answered += 1,
            Err(_) => rejected += 1,
        }
        let elapsed = started.elapsed();
        assert!(
            elapsed < Duration::from_secs(2),
            "round {round} took {elapsed:?} for {input:?}"
        );
    }
    println!("PASS: 10000 fuzz inputs -> {answered} answers, {rejected} diagnostics, no panic");
}

/// The three spellings of the same request — bare keyword, short objective,
/// full sentence — must return identical result sets.
#[test]
fn criterion_7_statement_shapes_agree() {
    let session = demo_session();
    let keyword = nl_results(&session, "PDM");
    let short = nl_results(&session, "want PDM");
    let sentence = nl_results(&session, "I am looking for PDM");
    assert_eq!(keyword, short);
    assert_eq!(keyword, sentence);
    let total: usize = keyword.iter().map(|(_, r)| r.rows.len()).sum();
    assert_eq!(total, 2);
    println!("PASS: keyword, short and sentence forms return the same {total} rows");
}
