use std::io::{BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use nlq_cli::demo::{demo_session, DEMO_CORPUS};
use nlq_cli::render::{render_outcome, OutputFormat};
use nlq_cli::session::{QueryOutcome, Session};
use nlq_cli::trace;

#[derive(Parser)]
#[command(
    name = "nlq",
    version,
    about = "Search product-data tables with short natural-language queries",
    after_help = "Queries starting with `select` are run as SQL directly. \
                  Without --schema, a built-in demo catalog is used."
)]
struct Cli {
    /// Schema map file (also read from NLQ_SCHEMA).
    #[arg(long, global = true, env = "NLQ_SCHEMA")]
    schema: Option<PathBuf>,

    /// Directory with the table data files; defaults to the schema's
    /// directory.
    #[arg(long, global = true)]
    data_dir: Option<PathBuf>,

    /// Extra dictionary file (`class: word, word, ...` lines).
    #[arg(long, global = true)]
    lexicon: Option<PathBuf>,

    /// How to print result rows.
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Table)]
    format: OutputFormat,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Answer one query and exit.
    Query {
        /// The query; multiple words are joined with spaces.
        #[arg(required = true)]
        text: Vec<String>,
    },
    /// Read queries from stdin, one per line.
    Repl,
    /// Show every pipeline stage for one query.
    Explain {
        #[arg(required = true)]
        text: Vec<String>,
    },
    /// Run the built-in demo corpus and check its known answers.
    Demo,
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    let session = match &cli.schema {
        Some(path) => {
            match Session::from_files(path, cli.data_dir.as_deref(), cli.lexicon.as_deref()) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("nlq: {e}");
                    return ExitCode::from(2);
                }
            }
        }
        None => demo_session(),
    };

    match cli.command {
        Command::Query { text } => run_query(&session, &text.join(" "), cli.format),
        Command::Explain { text } => run_explain(&session, &text.join(" ")),
        Command::Repl => run_repl(&session, cli.format),
        Command::Demo => run_demo(&session),
    }
}

fn run_query(session: &Session, input: &str, format: OutputFormat) -> ExitCode {
    match session.run_query(input) {
        Ok(outcome) => {
            print!("{}", render_outcome(&outcome, format));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("nlq: {e}");
            ExitCode::from(1)
        }
    }
}

fn run_explain(session: &Session, input: &str) -> ExitCode {
    match trace::explain(session, input) {
        Ok(explanation) => {
            print!("{}", trace::render(&explanation));
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("nlq: {e}");
            ExitCode::from(1)
        }
    }
}

fn run_repl(session: &Session, format: OutputFormat) -> ExitCode {
    let stdin = std::io::stdin();
    let mut stderr = std::io::stderr();
    let mut lines = stdin.lock().lines();
    loop {
        let _ = write!(stderr, "nlq> ");
        let _ = stderr.flush();
        let Some(Ok(line)) = lines.next() else { break };
        let input = line.trim();
        if input.is_empty() {
            continue;
        }
        if input.eq_ignore_ascii_case("exit") || input.eq_ignore_ascii_case("quit") {
            break;
        }
        match session.run_query(input) {
            Ok(outcome) => print!("{}", render_outcome(&outcome, format)),
            Err(e) => eprintln!("nlq: {e}"),
        }
    }
    let _ = writeln!(stderr);
    ExitCode::SUCCESS
}

fn run_demo(session: &Session) -> ExitCode {
    let mut failures = 0usize;
    for demo in DEMO_CORPUS {
        match session.run_query(demo.text) {
            Ok(QueryOutcome::NaturalLanguage { statement, results, .. }) => {
                let rows: usize = results.iter().map(|(_, r)| r.rows.len()).sum();
                let parsed_ok =
                    statement.kind == demo.kind && statement.matched_rule == demo.rule;
                let rows_ok = rows == demo.total_rows;
                if parsed_ok && rows_ok {
                    println!(
                        "ok    {:<15} {:<8} {:>2} rows  {}",
                        statement.kind.name(),
                        statement.matched_rule.name(),
                        rows,
                        demo.text
                    );
                } else {
                    failures += 1;
                    println!(
                        "FAIL  expected {}/{} with {} rows, got {}/{} with {} rows  {}",
                        demo.kind.name(),
                        demo.rule.name(),
                        demo.total_rows,
                        statement.kind.name(),
                        statement.matched_rule.name(),
                        rows,
                        demo.text
                    );
                }
            }
            Ok(QueryOutcome::Sql { .. }) => {
                failures += 1;
                println!("FAIL  unexpectedly treated as raw SQL  {}", demo.text);
            }
            Err(e) => {
                failures += 1;
                println!("FAIL  {e}  {}", demo.text);
            }
        }
    }
    if failures == 0 {
        println!("all {} demo queries behave as documented", DEMO_CORPUS.len());
        ExitCode::SUCCESS
    } else {
        println!("{failures} of {} demo queries diverged", DEMO_CORPUS.len());
        ExitCode::from(1)
    }
}
