//! Step-by-step pipeline traces for the `explain` command: what each stage
//! saw, what it produced, and how long it took.

use std::time::Instant;

use nlq_core::{analyze, execute_sql, parse, to_sql, tokenize};

use crate::session::{QueryError, Session};

pub struct StepTrace {
    pub step: &'static str,
    pub micros: u128,
    pub lines: Vec<String>,
}

pub struct Explanation {
    pub steps: Vec<StepTrace>,
}

/// Runs the pipeline one stage at a time, collecting a trace per stage.
pub fn explain(session: &Session, input: &str) -> Result<Explanation, QueryError> {
    if input.trim().is_empty() {
        return Err(QueryError::Empty);
    }
    let mut steps = Vec::new();

    let started = Instant::now();
    let mut lines: Vec<String> = session
        .tables
        .iter()
        .map(|t| format!("{}: {} columns, {} rows", t.name, t.columns.len(), t.rows.len()))
        .collect();
    lines.insert(0, format!("catalog of {} tables", session.tables.len()));
    steps.push(StepTrace { step: "read", micros: started.elapsed().as_micros(), lines });

    if crate::session::is_raw_sql(input) {
        let started = Instant::now();
        let results = execute_sql(input, &session.tables).map_err(QueryError::Store)?;
        steps.push(StepTrace {
            step: "execute",
            micros: started.elapsed().as_micros(),
            lines: vec![format!("raw SQL passthrough: {} rows", results.rows.len())],
        });
        return Ok(Explanation { steps });
    }

    let started = Instant::now();
    let tokens = tokenize(input, &session.lexicon);
    let lines = tokens
        .tokens
        .iter()
        .map(|t| {
            let attr = if t.attribute { " (attribute)" } else { "" };
            format!("{} -> {:?}{attr}", t.normalized, t.classes)
        })
        .collect();
    steps.push(StepTrace { step: "tokenize", micros: started.elapsed().as_micros(), lines });

    let started = Instant::now();
    let statement = parse(&tokens).map_err(QueryError::Parse)?;
    let mut lines = vec![format!("rule {} -> {} statement", statement.matched_rule, statement.kind)];
    if !statement.subject.is_empty() {
        lines.push(format!(
            "subject: {}",
            statement.subject.iter().map(|t| t.normalized.as_str()).collect::<Vec<_>>().join(", ")
        ));
    }
    if !statement.verbs.is_empty() {
        lines.push(format!(
            "verbs: {}",
            statement.verbs.iter().map(|t| t.normalized.as_str()).collect::<Vec<_>>().join(", ")
        ));
    }
    if !statement.objects.is_empty() {
        lines.push(format!(
            "objects: {}",
            statement.objects.iter().map(|t| t.normalized.as_str()).collect::<Vec<_>>().join(", ")
        ));
    }
    for clause in &statement.conditions {
        let attribute = clause
            .attribute
            .as_ref()
            .map(|t| t.normalized.clone())
            .unwrap_or_else(|| "(no attribute)".to_string());
        let values: Vec<&str> = clause.values.iter().map(|t| t.normalized.as_str()).collect();
        lines.push(format!("clause: {} {} [{}]", clause.kind, attribute, values.join(", ")));
    }
    steps.push(StepTrace { step: "parse", micros: started.elapsed().as_micros(), lines });

    let started = Instant::now();
    let intent = analyze(&statement, &session.schema).map_err(QueryError::Semantic)?;
    let mut lines = Vec::new();
    for target in &intent.targets {
        lines.push(format!("target {}", target.table));
        for condition in &target.conditions {
            let values: Vec<String> = condition.values.iter().map(|v| v.to_string()).collect();
            lines.push(format!(
                "  {} {:?} [{}]",
                condition.column,
                condition.operator,
                values.join(", ")
            ));
        }
    }
    if !intent.keyword_terms.is_empty() {
        lines.push(format!("keywords: {}", intent.keyword_terms.join(", ")));
    }
    steps.push(StepTrace { step: "model", micros: started.elapsed().as_micros(), lines });

    let started = Instant::now();
    let sql = to_sql(&intent);
    let lines = sql.iter().map(|q| q.text.clone()).collect();
    steps.push(StepTrace { step: "generate", micros: started.elapsed().as_micros(), lines });

    let started = Instant::now();
    let mut lines = Vec::with_capacity(sql.len());
    for query in &sql {
        let set = execute_sql(&query.text, &session.tables).map_err(QueryError::Store)?;
        lines.push(format!("{}: {} rows", query.table, set.rows.len()));
    }
    steps.push(StepTrace { step: "execute", micros: started.elapsed().as_micros(), lines });

    Ok(Explanation { steps })
}

pub fn render(explanation: &Explanation) -> String {
    let mut out = String::new();
    for step in &explanation.steps {
        out.push_str(&format!("-- {} ({}us)\n", step.step, step.micros));
        for line in &step.lines {
            out.push_str("   ");
            out.push_str(line);
            out.push('\n');
        }
    }
    out
}
