use std::io::Write as _;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use solvagraph::catalog::{self, build};
use solvagraph::graph::{verify_graph, GraphOptions};
use solvagraph::solv::VerifyOptions;
use solvagraph::{
    export_graph, parse_element, verify_group, Error, ExportFormat, GroupConfig, NonSolvableGraph,
    RelationMode, SolvabilizerMap, DEFAULT_MAX_ORDER, MAX_ORDER_ENV,
};
use solvagraph_cli::{analyze, AnalyzeOptions};

/// Solvabilizers, solvable radicals and non-solvable graphs of finite groups.
#[derive(Parser, Debug)]
#[command(name = "solvagraph", version)]
struct Cli {
    #[command(flatten)]
    global: Global,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Global {
    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Seed for sampled checks
    #[arg(long, global = true, default_value_t = 0x5eed)]
    seed: u64,
    /// Largest group order to enumerate (overrides SOLVAGRAPH_MAX_ORDER)
    #[arg(long, global = true)]
    cap: Option<usize>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Solvabilizers, radical, S-group test, graph invariants and checks
    Analyze {
        /// Group, e.g. A5, "SL2(5)", "perm: (1,2,3); (1,2)" or "A5 x C2"
        spec: String,
        #[arg(long)]
        json: bool,
        /// Include per-phase wall-clock timings
        #[arg(long)]
        timings: bool,
    },
    /// Pass/fail table of every checked law
    Verify {
        /// Group to verify (omit with --catalog-all)
        #[arg(required_unless_present = "catalog_all")]
        spec: Option<String>,
        /// Run every built-in group up to --max-order
        #[arg(long, conflicts_with = "spec")]
        catalog_all: bool,
        #[arg(long, default_value_t = 720)]
        max_order: usize,
        #[arg(long)]
        json: bool,
    },
    /// Export the non-solvable (or non-nilpotent) graph
    Graph {
        /// Group, e.g. A5, "SL2(5)", "perm: (1,2,3); (1,2)" or "A5 x C2"
        spec: String,
        /// dot or json
        #[arg(long, default_value = "dot")]
        format: String,
        /// All of G, including isolated radical elements
        #[arg(long, conflicts_with = "induced")]
        full: bool,
        /// G minus the radical (default)
        #[arg(long)]
        induced: bool,
        /// solvable or nilpotent
        #[arg(long, default_value = "solvable")]
        mode: String,
        /// Attach the graph check report (json only)
        #[arg(long)]
        report: bool,
    },
    /// Solvabilizer of one element
    Sol {
        /// Group, e.g. A5, "SL2(5)", "perm: (1,2,3); (1,2)" or "A5 x C2"
        spec: String,
        /// Cycle notation, matrix rows or #k
        element: String,
        /// Print the members in index order
        #[arg(long)]
        list: bool,
        /// solvable or nilpotent
        #[arg(long, default_value = "solvable")]
        mode: String,
    },
}

const EXIT_USAGE: u8 = 1;
const EXIT_CAP: u8 = 2;
const EXIT_FAILED_CHECK: u8 = 3;

fn config(global: &Global) -> Result<GroupConfig> {
    match global.cap {
        Some(cap) => Ok(GroupConfig::with_max_order(cap)),
        None => match std::env::var(MAX_ORDER_ENV) {
            Ok(v) => {
                let cap = v
                    .trim()
                    .parse()
                    .with_context(|| format!("{MAX_ORDER_ENV}={v} is not an integer"))?;
                Ok(GroupConfig::with_max_order(cap))
            }
            Err(_) => Ok(GroupConfig::with_max_order(DEFAULT_MAX_ORDER)),
        },
    }
}

fn emit(text: &str) -> Result<()> {
    let mut out = std::io::stdout().lock();
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

fn run(cli: Cli) -> Result<u8> {
    if let Some(threads) = cli.global.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .context("configuring the thread pool")?;
    }
    let config = config(&cli.global)?;
    let verify_opts = VerifyOptions {
        seed: cli.global.seed,
        ..VerifyOptions::default()
    };
    match cli.command {
        Command::Analyze {
            spec,
            json,
            timings,
        } => {
            let group = build(&spec, &config)?;
            let report = analyze(
                &group,
                &AnalyzeOptions {
                    verify: verify_opts,
                    timings,
                },
            );
            emit(&if json {
                report.to_json()
            } else {
                report.to_text(&group)
            })?;
            Ok(if report.passed() {
                0
            } else {
                EXIT_FAILED_CHECK
            })
        }
        Command::Verify {
            spec,
            catalog_all,
            max_order,
            json,
        } => {
            let groups = if catalog_all {
                catalog::entries_up_to(max_order.min(config.max_order))
                    .map(|e| build(e.spec, &config))
                    .collect::<solvagraph::Result<Vec<_>>>()?
            } else {
                vec![build(spec.as_deref().unwrap_or_default(), &config)?]
            };
            let mut reports = Vec::new();
            for group in &groups {
                let report = verify_group(group, &verify_opts);
                if !json {
                    let mut text = String::new();
                    for row in report.rows() {
                        text.push_str(&format!(
                            "{:<14} {:<4}  {:<40} {}\n",
                            report.label, row.status, row.name, row.detail
                        ));
                    }
                    emit(&text)?;
                }
                reports.push(report);
            }
            let failures: usize = reports
                .iter()
                .map(|r| r.rows().filter(|c| !c.passed()).count())
                .sum();
            if json {
                let mut s = serde_json::to_string_pretty(&reports)?;
                s.push('\n');
                emit(&s)?;
            } else {
                let rows: usize = reports.iter().map(|r| r.rows().count()).sum();
                emit(&format!(
                    "\n{} groups, {rows} rows, {failures} failures\n",
                    reports.len()
                ))?;
            }
            Ok(if failures == 0 { 0 } else { EXIT_FAILED_CHECK })
        }
        Command::Graph {
            spec,
            format,
            full,
            induced: _,
            mode,
            report,
        } => {
            let format: ExportFormat = format.parse()?;
            let mode: RelationMode = mode.parse()?;
            let group = build(&spec, &config)?;
            let map = SolvabilizerMap::compute(&group, mode);
            let graph = NonSolvableGraph::from_solvabilizers(&map, !full);
            let mut failed = false;
            let attached = if report {
                if format != ExportFormat::Json {
                    bail!("--report needs --format json");
                }
                let r = verify_graph(
                    &map,
                    None,
                    &GraphOptions {
                        seed: cli.global.seed,
                        ..GraphOptions::default()
                    },
                );
                failed = !solvagraph::report::all_passed(&r.checks);
                Some(r)
            } else {
                None
            };
            emit(&export_graph(&graph, format, attached.as_ref())?)?;
            Ok(if failed { EXIT_FAILED_CHECK } else { 0 })
        }
        Command::Sol {
            spec,
            element,
            list,
            mode,
        } => {
            let mode: RelationMode = mode.parse()?;
            let group = build(&spec, &config)?;
            let x = parse_element(&group, &element)?;
            let result = solvagraph::sol_of_element(&group, x, mode);
            let mut text = format!(
                "element {}\nmode {}\nsize {}\nsubgroup {}\n",
                group.render(x),
                mode,
                result.size,
                if result.is_subgroup { "yes" } else { "no" }
            );
            if list {
                for y in result.set.iter() {
                    text.push_str(&format!("{y} {}\n", group.render(y)));
                }
            }
            emit(&text)?;
            Ok(0)
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::CapExceeded { .. }) => EXIT_CAP,
        _ => EXIT_USAGE,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
