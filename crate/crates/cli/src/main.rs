use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use reqtax_core::format::{link, parse_named, SrsDocument};
use reqtax_core::lint::{suggest_category, LintConfig};
use reqtax_core::report::{graph, ExitClass, Report, Summary};
use reqtax_core::taxonomy::crosswalk::{crosswalk, Scheme};

#[derive(Parser)]
#[command(
    name = "reqtax",
    version,
    about = "Check, graph and summarize annotated requirements documents (.srs)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse, link and lint documents.
    Check {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        /// Emit the versioned JSON report.
        #[arg(long)]
        json: bool,
        /// Exit 1 when there are warnings.
        #[arg(long)]
        strict: bool,
        /// Lint configuration (key = value lines).
        #[arg(long, value_name = "FILE")]
        config: Option<PathBuf>,
    },
    /// Export the relation graph.
    Graph {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = GraphFormat::Dot)]
        format: GraphFormat,
        /// Leave out derived edges.
        #[arg(long)]
        declared_only: bool,
    },
    /// Per-category, subcategory and relation counts.
    Stats {
        #[arg(required = true)]
        files: Vec<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Suggest categories for a statement.
    Suggest {
        statement: String,
        #[arg(long)]
        json: bool,
    },
    /// Map a label from another requirements vocabulary.
    Crosswalk {
        #[arg(value_enum)]
        scheme: SchemeArg,
        label: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SchemeArg {
    Wb,
    Avl,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("reqtax: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn sorted(mut files: Vec<PathBuf>) -> Vec<PathBuf> {
    files.sort();
    files.dedup();
    files
}

fn display(path: &Path) -> String {
    path.display().to_string()
}

/// Reads and parses one file; parse errors go to standard error.
fn load(path: &Path) -> Result<Option<SrsDocument>> {
    let name = display(path);
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {name}"))?;
    match parse_named(&name, &text) {
        Ok(doc) => Ok(Some(doc)),
        Err(errors) => {
            for e in errors {
                eprintln!("{e}");
            }
            Ok(None)
        }
    }
}

fn run(command: Command) -> Result<u8> {
    match command {
        Command::Check {
            files,
            json,
            strict,
            config,
        } => {
            let cfg = match config {
                Some(path) => {
                    let text = fs::read_to_string(&path).with_context(|| format!("cannot read {}", path.display()))?;
                    text.parse::<LintConfig>()
                        .with_context(|| format!("invalid config {}", path.display()))?
                }
                None => LintConfig::default(),
            };
            let mut report = Report::default();
            for path in sorted(files) {
                let name = display(&path);
                let one = match fs::read_to_string(&path) {
                    Ok(text) => Report::check(&name, &text, &cfg),
                    Err(e) => {
                        eprintln!("reqtax: cannot read {name}: {e}");
                        Report::unreadable(&name, e.to_string())
                    }
                };
                report.merge(one);
            }
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            Ok(report.exit_class.exit_code(strict) as u8)
        }
        Command::Graph {
            file,
            format,
            declared_only,
        } => {
            let Some(doc) = load(&file)? else {
                return Ok(ExitClass::ParseFailed.exit_code(false) as u8);
            };
            let linked = link(&doc);
            let g = graph(&linked, declared_only);
            match format {
                GraphFormat::Dot => print!("{}", g.to_dot()),
                GraphFormat::Json => println!("{}", g.to_json()),
            }
            Ok(0)
        }
        Command::Stats { files, json } => {
            let mut total = Summary::default();
            for path in sorted(files) {
                let Some(doc) = load(&path)? else {
                    return Ok(ExitClass::ParseFailed.exit_code(false) as u8);
                };
                total.merge(&Summary::of(&link(&doc)));
            }
            if json {
                println!("{}", serde_json::to_string_pretty(&total)?);
            } else {
                print!("{}", total.table());
            }
            Ok(0)
        }
        Command::Suggest { statement, json } => {
            let suggestions = suggest_category(&statement);
            if json {
                println!("{}", serde_json::to_string_pretty(&suggestions)?);
            } else if suggestions.is_empty() {
                println!("no suggestion");
            } else {
                for (rank, s) in suggestions.iter().enumerate() {
                    let label = match s.subcategory {
                        Some(sub) => format!("{} / {}", s.category.name(), sub.name()),
                        None => s.category.name().to_string(),
                    };
                    println!("{}. {label} ({})", rank + 1, s.pattern);
                }
            }
            Ok(0)
        }
        Command::Crosswalk { scheme, label } => {
            let scheme = match scheme {
                SchemeArg::Wb => Scheme::WiegersBeatty,
                SchemeArg::Avl => Scheme::VanLamsweerde,
            };
            match crosswalk(scheme, &label) {
                Ok(entry) => {
                    println!("{entry}");
                    Ok(0)
                }
                Err(e) => {
                    eprintln!("reqtax: {e}");
                    Ok(1)
                }
            }
        }
    }
}
