//! `tunedfs` command line.
//!
//! Exit codes: 0 success, 1 runtime or I/O failure (or a failed
//! verification), 2 usage error.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::bcc::BccAlgorithm;
use crate::bench::{self, ExperimentSpec, Suite};
use crate::corpus::{self, Counterexample, Execution};
use crate::dfs::{recursive_stack_bytes, with_stack, EngineKind};
use crate::error::Error;
use crate::graph::{
    random_digraph, random_undirected, read_edge_list, write_edge_list, write_labels,
    StaticDigraph, StaticUndirectedGraph,
};
use crate::oracle::{MAX_BCC_ORACLE_NODES, MAX_SCC_ORACLE_NODES};
use crate::scc::SccAlgorithm;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "tunedfs",
    version,
    about = "Cache-tuned DFS: SCC and biconnected components"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a uniform random graph as an edge list.
    Gen {
        #[arg(long)]
        nodes: usize,
        #[arg(long)]
        edges: usize,
        #[arg(long)]
        seed: u64,
        /// Read the pairs as undirected edges (same file format).
        #[arg(long)]
        undirected: bool,
        #[arg(long)]
        out: PathBuf,
    },
    /// Strongly connected components of a directed edge list.
    Scc {
        #[arg(long)]
        algo: SccArg,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value = "iterative")]
        engine: EngineArg,
        /// Write one component id per node.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Biconnected components of an undirected edge list.
    Bcc {
        #[arg(long)]
        algo: BccArg,
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value = "iterative")]
        engine: EngineArg,
        /// Write one component id per edge.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check every algorithm against the brute-force oracles on random graphs.
    Verify {
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        seed: u64,
        /// Verify biconnected components instead of SCCs.
        #[arg(long)]
        bcc: bool,
    },
    /// Time the algorithms over a grid of random graphs.
    Bench {
        #[arg(long)]
        suite: SuiteArg,
        #[arg(long, default_value_t = bench::DEFAULT_M_TOTAL)]
        m_total: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = bench::DEFAULT_REPEATS)]
        repeats: usize,
        #[arg(long)]
        csv: PathBuf,
        /// Also write per-(algo, n, m) medians.
        #[arg(long)]
        medians: Option<PathBuf>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SccArg {
    Ks,
    Tarjan,
    Cmg,
    TarjanTuned,
    CmgTuned,
}

impl From<SccArg> for SccAlgorithm {
    fn from(a: SccArg) -> Self {
        match a {
            SccArg::Ks => SccAlgorithm::KosarajuSharir,
            SccArg::Tarjan => SccAlgorithm::TarjanBaseline,
            SccArg::Cmg => SccAlgorithm::CmgBaseline,
            SccArg::TarjanTuned => SccAlgorithm::TarjanTuned,
            SccArg::CmgTuned => SccAlgorithm::CmgTuned,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum BccArg {
    Base,
    Tuned,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum EngineArg {
    Recursive,
    RecursiveEdgeStack,
    Iterative,
}

impl From<EngineArg> for EngineKind {
    fn from(e: EngineArg) -> Self {
        match e {
            EngineArg::Recursive => EngineKind::Recursive,
            EngineArg::RecursiveEdgeStack => EngineKind::RecursiveEdgeStack,
            EngineArg::Iterative => EngineKind::Iterative,
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
pub enum SuiteArg {
    Density,
    Size,
    Ablation,
    Bcc,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Self {
        match s {
            SuiteArg::Density => Suite::DensitySweep,
            SuiteArg::Size => Suite::SizeSweep,
            SuiteArg::Ablation => Suite::Ablation,
            SuiteArg::Bcc => Suite::Bcc,
        }
    }
}

enum Failure {
    Usage(String),
    Runtime(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::NoNodes { .. }
            | Error::TooLarge { .. }
            | Error::OracleLimit { .. }
            | Error::InvalidExperiment(_) => Failure::Usage(e.to_string()),
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            EXIT_FAILURE
        }
    }
}

pub fn main() -> i32 {
    run(std::env::args_os())
}

/// Runs `f` directly, or on a thread with enough stack for a recursive
/// engine on `n` nodes.
fn with_engine_stack<T: Send>(engine: EngineKind, n: usize, f: impl FnOnce() -> T + Send) -> T {
    if !engine.is_recursive() {
        return f();
    }
    let bytes = recursive_stack_bytes(n);
    eprintln!(
        "warning: {engine} engine needs about {} MiB of call stack for n = {n}; \
         running it on a thread with that much stack",
        bytes >> 20
    );
    with_stack(bytes, f)
}

fn execute(command: Command) -> Result<i32, Failure> {
    match command {
        Command::Gen {
            nodes,
            edges,
            seed,
            undirected,
            out,
        } => {
            let el = if undirected {
                random_undirected(nodes, edges, seed)?
            } else {
                random_digraph(nodes, edges, seed)?
            };
            write_edge_list(&el, &out)?;
            Ok(EXIT_OK)
        }
        Command::Scc {
            algo,
            input,
            engine,
            out,
        } => {
            let g = StaticDigraph::from_edge_list(&read_edge_list(&input)?)?;
            let algo = SccAlgorithm::from(algo);
            let engine = EngineKind::from(engine);
            let lab = with_engine_stack(engine, g.node_count(), || algo.run(&g, engine));
            println!("sccCount={}", lab.scc_count);
            if let Some(out) = out {
                write_labels(&lab.comp_num, out)?;
            }
            Ok(EXIT_OK)
        }
        Command::Bcc {
            algo,
            input,
            engine,
            out,
        } => {
            let g = StaticUndirectedGraph::from_edge_list(&read_edge_list(&input)?)?;
            let algo = match algo {
                BccArg::Base => BccAlgorithm::Baseline,
                BccArg::Tuned => BccAlgorithm::Tuned,
            };
            let engine = EngineKind::from(engine);
            let lab = with_engine_stack(engine, g.node_count(), || algo.run(&g, engine));
            println!("bccCount={}", lab.bcc_count);
            if let Some(out) = out {
                write_labels(&lab.edge_comp, out)?;
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            trials,
            max_n,
            seed,
            bcc,
        } => {
            let limit = if bcc {
                MAX_BCC_ORACLE_NODES
            } else {
                MAX_SCC_ORACLE_NODES
            };
            if max_n == 0 || max_n > limit {
                return Err(Failure::Usage(format!(
                    "--max-n must lie in [1, {limit}] for the {} oracle",
                    if bcc { "BCC" } else { "SCC" }
                )));
            }
            let exec = Execution::default();
            let outcome = if bcc {
                corpus::verify_bcc(trials, max_n, seed, exec)
            } else {
                corpus::verify_scc(trials, max_n, seed, exec)
            };
            match outcome {
                None => {
                    println!("verified {trials} trials");
                    Ok(EXIT_OK)
                }
                Some(cx) => {
                    report_counterexample(&cx);
                    Ok(EXIT_FAILURE)
                }
            }
        }
        Command::Bench {
            suite,
            m_total,
            seed,
            repeats,
            csv,
            medians,
        } => {
            let mut spec = ExperimentSpec::new(suite.into()).with_m_total(m_total);
            spec.seed = seed;
            spec.repeats = repeats;
            spec.validate()?;
            let records = bench::run_suite(&spec)?;
            bench::write_csv(&records, &csv)?;
            let summary = bench::medians(&records);
            for r in &summary {
                println!(
                    "{:<36} n={:<9} m={:<9} {:>8.3} ns/edge",
                    r.algo, r.n, r.m, r.median_ns_per_edge
                );
            }
            for r in records.iter().filter(|r| r.is_diagnostic()) {
                eprintln!("warning: skipped n={} m={}: not enough memory", r.n, r.m);
            }
            if let Some(path) = medians {
                bench::write_medians_csv(&summary, path)?;
            }
            Ok(EXIT_OK)
        }
    }
}

fn report_counterexample(cx: &Counterexample) {
    eprintln!("trial {} failed: {}", cx.trial, cx.reason);
    println!("{} {}", cx.graph.n, cx.graph.m());
    for (u, v) in &cx.graph.edges {
        println!("{u} {v}");
    }
}
