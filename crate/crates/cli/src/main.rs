use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use cdgraph::constructions::build_recipe;
use cdgraph::data::DataSet;
use cdgraph::enumeration::{enumerate_all, enumerate_connected, AppendixIndex, Label};
use cdgraph::occurrence::{evaluate_all, is_admissible, is_strongly_admissible, KnowledgeBase};
use cdgraph::pipeline::{classify_all, derive_facts, load_index, render_dot, verify_paper};
use cdgraph::Graph;
use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "cdgraph",
    version,
    about = "Classify prime character degree graphs on seven vertices"
)]
struct Cli {
    /// Directory holding the appendix, facts, recipe and claims files.
    #[arg(long, global = true, default_value = "data")]
    data_dir: PathBuf,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List graphs of one order in graph6, one per line.
    Enumerate {
        #[arg(long)]
        order: usize,
        #[arg(long)]
        connected: bool,
    },
    /// Classify every eligible seven-vertex graph.
    Classify {
        #[arg(long, conflicts_with = "text")]
        json: bool,
        #[arg(long)]
        text: bool,
    },
    /// Verdict, reason and per-rule trace for one graph.
    Status { graph6: String },
    /// Admissibility of a vertex (0-based) with the deletion trace.
    Admissible {
        graph6: String,
        vertex: usize,
        #[arg(long)]
        strong: bool,
    },
    /// Run the full checklist.
    VerifyPaper {
        #[arg(long)]
        json: bool,
    },
    /// DOT drawing of an appendix label, recipe name or graph6 string.
    Render {
        target: String,
        /// Name vertices by their primes when the recipe has a degree set.
        #[arg(long)]
        labels: bool,
    },
    /// Rebuild a graph from its recipe and compare with the target.
    Construct { name: String },
}

/// Exit status 1: a check failed. Exit status 2: bad input or data.
enum Failure {
    Verification(String),
    Input(String),
}

impl From<cdgraph::Error> for Failure {
    fn from(e: cdgraph::Error) -> Self {
        Failure::Input(e.to_string())
    }
}

type CliResult = Result<(), Failure>;

/// Writes to stdout, treating a closed pipe as the reader being done.
fn emit(text: &str) {
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|_| out.flush());
}

macro_rules! say {
    ($($arg:tt)*) => {
        emit(&format!("{}\n", format_args!($($arg)*)))
    };
}

macro_rules! esay {
    ($($arg:tt)*) => {{
        let _ = writeln!(std::io::stderr(), $($arg)*);
    }};
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load(cli: &Cli) -> Result<DataSet, Failure> {
    Ok(DataSet::from_dir(&cli.data_dir)?)
}

/// Curated facts plus everything the recipes and claims establish.
fn full_kb(data: &DataSet) -> Result<(KnowledgeBase, AppendixIndex), Failure> {
    let (_, index) = load_index(data)?;
    let derived = derive_facts(data, &index)?;
    Ok((derived.kb, index))
}

fn parse_graph(s: &str) -> Result<Graph, Failure> {
    Graph::from_graph6(s).map_err(|e| Failure::Input(format!("{s:?}: {e}")))
}

fn run(cli: Cli) -> CliResult {
    match &cli.command {
        Command::Enumerate { order, connected } => {
            let catalog = if *connected {
                enumerate_connected(*order)?
            } else {
                enumerate_all(*order)?
            };
            for g in &catalog.graphs {
                say!("{}", g.to_graph6());
            }
            esay!("{} graphs", catalog.len());
        }
        Command::Classify { json, .. } => {
            let report = classify_all(&load(&cli)?)?;
            if *json {
                say!("{}", report.to_json());
            } else {
                emit(&report.to_text());
            }
        }
        Command::Status { graph6 } => {
            let g = parse_graph(graph6)?;
            let data = load(&cli)?;
            let (kb, index) = full_kb(&data)?;
            let eval = evaluate_all(&g, &kb)?;
            if let Some(label) = index.label_of(&g) {
                say!("label: {label}");
            }
            say!("canonical: {}", g.canonical_form());
            say!("status: {}", eval.status);
            for (rule, outcome) in &eval.rules {
                let shown = outcome
                    .as_ref()
                    .map(|s| s.to_string())
                    .unwrap_or_else(|| "n/a".into());
                say!("  {:<14} {shown}", rule.name());
            }
            match kb.lookup(&g) {
                Some(fact) => say!(
                    "  {:<14} {} {} ({})",
                    "fact",
                    fact.verdict,
                    fact.source,
                    fact.note
                ),
                None => say!("  {:<14} none", "fact"),
            }
        }
        Command::Admissible {
            graph6,
            vertex,
            strong,
        } => {
            let g = parse_graph(graph6)?;
            let data = load(&cli)?;
            let (kb, _) = full_kb(&data)?;
            let report = if *strong {
                is_strongly_admissible(&g, *vertex, &kb)?
            } else {
                is_admissible(&g, *vertex, &kb)?
            };
            for step in &report.steps {
                let removed: Vec<String> = step
                    .removed
                    .iter()
                    .map(|(a, b)| format!("{a}-{b}"))
                    .collect();
                say!(
                    "{:?} [{}] {} {}",
                    step.kind,
                    removed.join(" "),
                    step.graph6,
                    step.status
                );
            }
            say!(
                "vertex {vertex} is {}{}",
                if report.holds { "" } else { "not " },
                if *strong {
                    "strongly admissible"
                } else {
                    "admissible"
                }
            );
        }
        Command::VerifyPaper { json } => {
            let list = verify_paper(&load(&cli)?);
            if *json {
                say!(
                    "{}",
                    serde_json::to_string_pretty(&list).expect("checklist serializes")
                );
            } else {
                for item in &list.items {
                    say!(
                        "[{}] {} {} ({} ms): {}",
                        if item.passed { "pass" } else { "FAIL" },
                        item.id,
                        item.name,
                        item.millis,
                        item.detail
                    );
                }
            }
            if !list.all_passed() {
                let failed: Vec<String> = list
                    .items
                    .iter()
                    .filter(|i| !i.passed)
                    .map(|i| i.name.clone())
                    .collect();
                return Err(Failure::Verification(failed.join(", ")));
            }
        }
        Command::Render { target, labels } => {
            let data = load(&cli)?;
            let (_, index) = load_index(&data)?;
            let recipe = data.recipes.iter().find(|r| r.name == *target);
            let (graph, labeling) = match (recipe, target.parse::<Label>()) {
                (Some(r), _) if *labels => {
                    let built = build_recipe(r, Some(&index), &data.knowledge_base)?;
                    (built.graph, built.labeling)
                }
                (_, Ok(label)) if index.graph(label).is_some() => {
                    (*index.graph(label).expect("checked"), None)
                }
                (Some(r), _) => (
                    build_recipe(r, Some(&index), &data.knowledge_base)?.graph,
                    None,
                ),
                _ => (parse_graph(target)?, None),
            };
            if *labels && labeling.is_none() {
                esay!("no prime labeling for {target}, using vertex numbers");
            }
            emit(&render_dot(&graph, labeling.as_ref()));
        }
        Command::Construct { name } => {
            let data = load(&cli)?;
            let (_, index) = load_index(&data)?;
            let recipe = data
                .recipes
                .iter()
                .find(|r| r.name == *name)
                .ok_or_else(|| Failure::Input(format!("no recipe named {name}")))?;
            let built =
                build_recipe(recipe, Some(&index), &data.knowledge_base).map_err(|e| match e {
                    cdgraph::Error::Construction { .. } => Failure::Verification(e.to_string()),
                    other => Failure::Input(other.to_string()),
                })?;
            say!("recipe: {}", recipe.kind);
            say!("graph6: {}", built.graph.to_graph6());
            say!("target: {}", built.target.to_graph6());
            if let Some(ds) = &built.degrees {
                say!("degrees: {ds}");
            }
            if let Some(lab) = &built.labeling {
                let primes: Vec<String> = lab.primes().iter().map(u64::to_string).collect();
                say!("primes: {}", primes.join(" "));
            }
            say!("matches target: yes");
        }
    }
    Ok(())
}
