//! Result rendering. The same renderer serves the one-shot command and the
//! interactive loop, so both print byte-identical output for the same query.

use nlq_core::{ResultSet, Value};

use crate::session::QueryOutcome;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    /// Aligned columns with a per-target heading.
    Table,
    /// Tab-separated values, one `# target` heading per table.
    Tsv,
    /// One JSON document with typed cells.
    Json,
}

pub fn render_outcome(outcome: &QueryOutcome, format: OutputFormat) -> String {
    let blocks: Vec<(Option<&str>, &ResultSet)> = match outcome {
        QueryOutcome::NaturalLanguage { results, .. } => {
            results.iter().map(|(t, r)| (Some(t.as_str()), r)).collect()
        }
        QueryOutcome::Sql { results } => vec![(None, results)],
    };
    match format {
        OutputFormat::Table => render_table_blocks(&blocks),
        OutputFormat::Tsv => render_tsv_blocks(&blocks),
        OutputFormat::Json => render_json_blocks(&blocks),
    }
}

fn cell_text(cell: &Option<Value>) -> String {
    match cell {
        Some(v) => v.to_string(),
        None => String::new(),
    }
}

// --- aligned table ----------------------------------------------------

fn render_table_blocks(blocks: &[(Option<&str>, &ResultSet)]) -> String {
    let mut out = String::new();
    for (i, (name, set)) in blocks.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        let noun = if set.rows.len() == 1 { "row" } else { "rows" };
        match name {
            Some(name) => out.push_str(&format!("-- {name} ({} {noun})\n", set.rows.len())),
            None => out.push_str(&format!("-- ({} {noun})\n", set.rows.len())),
        }
        if !set.rows.is_empty() {
            out.push_str(&render_grid(set));
        }
    }
    out
}

fn render_grid(set: &ResultSet) -> String {
    let mut widths: Vec<usize> = set.columns.iter().map(String::len).collect();
    let rows: Vec<Vec<String>> = set
        .rows
        .iter()
        .map(|row| row.iter().map(cell_text).collect())
        .collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }

    let mut out = String::new();
    let mut push_row = |cells: &[String]| {
        let line: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        out.push_str(line.join("  ").trim_end());
        out.push('\n');
    };
    push_row(&set.columns.to_vec());
    push_row(&widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>());
    for row in &rows {
        push_row(row);
    }
    out
}

// --- tab-separated ------------------------------------------------------

fn render_tsv_blocks(blocks: &[(Option<&str>, &ResultSet)]) -> String {
    let mut out = String::new();
    for (i, (name, set)) in blocks.iter().enumerate() {
        if i > 0 {
            out.push('\n');
        }
        if let Some(name) = name {
            out.push_str(&format!("# {name}\n"));
        }
        out.push_str(&set.columns.join("\t"));
        out.push('\n');
        for row in &set.rows {
            let cells: Vec<String> = row.iter().map(cell_text).collect();
            out.push_str(&cells.join("\t"));
            out.push('\n');
        }
    }
    out
}

// --- json ---------------------------------------------------------------

fn render_json_blocks(blocks: &[(Option<&str>, &ResultSet)]) -> String {
    let targets: Vec<serde_json::Value> = blocks
        .iter()
        .map(|(name, set)| {
            serde_json::json!({
                "table": name,
                "columns": set.columns,
                "rows": set
                    .rows
                    .iter()
                    .map(|row| row.iter().map(json_cell).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            })
        })
        .collect();
    let mut text = serde_json::json!({ "targets": targets }).to_string();
    text.push('\n');
    text
}

fn json_cell(cell: &Option<Value>) -> serde_json::Value {
    match cell {
        None => serde_json::Value::Null,
        Some(Value::Text(s)) => serde_json::Value::String(s.clone()),
        Some(Value::Integer(n)) => serde_json::json!(n),
        Some(Value::DateTime(dt)) => serde_json::Value::String(dt.to_string()),
        Some(Value::Boolean(b)) => serde_json::Value::Bool(*b),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use nlq_core::ResultSet;

    fn sample() -> ResultSet {
        ResultSet {
            columns: vec!["Name".into(), "Seq".into()],
            rows: vec![
                vec![Some(Value::Text("PDM".into())), Some(Value::Integer(55))],
                vec![None, Some(Value::Integer(3022))],
            ],
        }
    }

    #[test]
    fn table_grid_aligns_and_counts() {
        let outcome = QueryOutcome::Sql { results: sample() };
        let text = render_outcome(&outcome, OutputFormat::Table);
        assert_eq!(
            text,
            "-- (2 rows)\nName  Seq\n----  ----\nPDM   55\n      3022\n"
        );
    }

    #[test]
    fn tsv_is_plain() {
        let outcome = QueryOutcome::Sql { results: sample() };
        let text = render_outcome(&outcome, OutputFormat::Tsv);
        assert_eq!(text, "Name\tSeq\nPDM\t55\n\t3022\n");
    }

    #[test]
    fn json_keeps_types_and_nulls() {
        let outcome = QueryOutcome::Sql { results: sample() };
        let text = render_outcome(&outcome, OutputFormat::Json);
        let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed["targets"][0]["rows"][0][1], serde_json::json!(55));
        assert_eq!(parsed["targets"][0]["rows"][1][0], serde_json::Value::Null);
    }
}
