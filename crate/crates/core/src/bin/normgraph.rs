use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde_json::json;

use normgraph::analysis::Analysis;
use normgraph::builders::{self, catalog, parse_spec};
use normgraph::report::{self, AnalysisReport, GraphKind};
use normgraph::verify::{self, SuiteConfig};

#[derive(Parser)]
#[command(name = "normgraph", version, about = "Directed normalizing graphs of finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Report universal vertices, classification and graph structure of a group.
    Analyze {
        /// Group spec: C:n, D:2n, Q:2^k, S:m, Mod16, C3xQ8, TwoFrob294, F21, F20,
        /// prod(a,b), file:path, perm:path.
        spec: String,
        /// Graph(s) to report: gamma|delta|ugamma|udelta|nil|comm|ssol.
        #[arg(long = "graph", value_parser = parse_graph, default_values = ["delta"])]
        graphs: Vec<GraphKind>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Also write the first selected graph as Graphviz DOT.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Run the statement suite over groups.
    Verify {
        #[arg(long, default_value = "paper")]
        suite: String,
        /// Use the built-in catalog (`builtin`).
        #[arg(long)]
        catalog: Option<String>,
        /// Extra group specs; may be repeated.
        #[arg(long = "group")]
        groups: Vec<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        /// Record wall time per check.
        #[arg(long)]
        timing: bool,
        #[arg(long, default_value_t = 48)]
        supersolubility_cap: usize,
        #[arg(long, default_value_t = 48)]
        quotient_cap: usize,
    },
    /// Write a graph of a group as Graphviz DOT.
    ExportDot {
        spec: String,
        #[arg(long, value_parser = parse_graph, default_value = "delta")]
        graph: GraphKind,
        /// Output file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Built-in groups.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    /// List names and orders.
    List,
    /// Write one group as Cayley JSON.
    Export { spec: String },
}

fn parse_graph(s: &str) -> Result<GraphKind, String> {
    s.parse().map_err(|e: normgraph::Error| e.to_string())
}

fn load(spec: &str) -> normgraph::Result<Analysis> {
    let g = builders::build(&parse_spec(spec)?)?;
    Ok(Analysis::new(g))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> normgraph::Result<u8> {
    match command {
        Command::Analyze {
            spec,
            graphs,
            format,
            dot,
        } => {
            let a = load(&spec)?;
            let mut kinds = graphs;
            kinds.dedup();
            let r = AnalysisReport::new(&a, &kinds);
            match format {
                Format::Json => println!("{}", r.to_json()),
                Format::Text => print!("{}", r.to_text()),
            }
            if let Some(path) = dot {
                std::fs::write(path, report::dot(&a, kinds[0]))?;
            }
            Ok(0)
        }
        Command::Verify {
            suite,
            catalog: cat,
            groups,
            format,
            timing,
            supersolubility_cap,
            quotient_cap,
        } => {
            if suite != "paper" {
                return Err(normgraph::Error::Parse(format!("unknown suite {suite:?}; available: paper")));
            }
            let mut specs = Vec::new();
            match cat.as_deref() {
                None => {}
                Some("builtin") => specs.extend(catalog()),
                Some(other) => {
                    return Err(normgraph::Error::Parse(format!("unknown catalog {other:?}; available: builtin")))
                }
            }
            for s in &groups {
                specs.push(parse_spec(s)?);
            }
            if specs.is_empty() {
                return Err(normgraph::Error::Parse("no groups: pass --catalog builtin or --group".into()));
            }
            let analyses = specs
                .par_iter()
                .map(|s| builders::build(s).map(Analysis::new))
                .collect::<normgraph::Result<Vec<_>>>()?;
            let config = SuiteConfig {
                supersolubility_order_cap: supersolubility_cap,
                quotient_lift_order_cap: quotient_cap,
                timing,
                ..SuiteConfig::default()
            };
            let r = verify::run_suite(&verify::registry(), &analyses, &config);
            match format {
                Format::Json => {
                    let doc = json!({
                        "suite": suite,
                        "results": r.results,
                        "summary": r.summary,
                        "coverage": verify::coverage(),
                    });
                    println!("{}", serde_json::to_string_pretty(&doc).expect("serializable"));
                }
                Format::Text => {
                    print!("{}", r.to_text());
                    println!();
                    print!("{}", verify::coverage_table());
                }
            }
            Ok(r.exit_code() as u8)
        }
        Command::ExportDot { spec, graph, out } => {
            let a = load(&spec)?;
            let text = report::dot(&a, graph);
            match out {
                Some(p) => std::fs::write(p, text)?,
                None => print!("{text}"),
            }
            Ok(0)
        }
        Command::Catalog { action } => {
            match action {
                CatalogAction::List => {
                    for s in catalog() {
                        let g = builders::build(&s)?;
                        println!("{s} (order {})", g.order());
                    }
                }
                CatalogAction::Export { spec } => {
                    let g = builders::build(&parse_spec(&spec)?)?;
                    println!("{}", builders::export_cayley(&g));
                }
            }
            Ok(0)
        }
    }
}
