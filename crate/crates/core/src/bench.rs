//! Timing grids over (algorithm x graph shape).
//!
//! For every grid point the graph is generated and converted to CSR once;
//! each algorithm then gets one untimed warmup run followed by `repeats`
//! timed runs. Only the algorithm call is inside the timed span. Runs are
//! strictly sequential on one thread.

use std::collections::HashMap;
use std::fmt;
use std::hint::black_box;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::bcc::{bcc_baseline, bcc_tuned};
use crate::dfs::{recursive_stack_bytes, with_stack, EngineKind};
use crate::error::{Error, Result};
use crate::graph::{random_digraph, random_undirected, StaticDigraph, StaticUndirectedGraph};
use crate::scc::{
    dfs_scan, scc_cmg_baseline, scc_cmg_tuned, scc_kosaraju_sharir_with,
    scc_kosaraju_sharir_with_reverse, scc_tarjan_baseline, scc_tarjan_tuned,
};

/// Desk-scale edge count.
pub const DEFAULT_M_TOTAL: usize = 1 << 20;
pub const DEFAULT_DENSITIES: [usize; 5] = [2, 4, 8, 16, 32];
pub const SIZE_SWEEP_DENSITY: usize = 10;
pub const DEFAULT_REPEATS: usize = 5;
pub const MIN_REPEATS: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    /// Fixed `m`, varying `m / n`.
    DensitySweep,
    /// Fixed `m / n = 10`, varying `n`.
    SizeSweep,
    /// The tuning steps switched on one after the other, for CMG and Tarjan.
    Ablation,
    /// Biconnected components on both grid shapes.
    Bcc,
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "density" => Ok(Suite::DensitySweep),
            "size" => Ok(Suite::SizeSweep),
            "ablation" => Ok(Suite::Ablation),
            "bcc" => Ok(Suite::Bcc),
            _ => Err(format!("unknown suite {s:?}")),
        }
    }
}

/// What a timed call runs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Workload {
    Scan,
    TarjanBaseline(EngineKind),
    CmgBaseline(EngineKind),
    TarjanTuned(EngineKind),
    CmgTuned(EngineKind),
    /// Both passes over a prebuilt reverse graph.
    Ks(EngineKind),
    /// Reverse-graph construction plus both passes.
    KsWithReverse(EngineKind),
    BccBaseline(EngineKind),
    BccTuned(EngineKind),
}

impl Workload {
    fn engine(self) -> Option<EngineKind> {
        use Workload::*;
        match self {
            Scan => None,
            TarjanBaseline(e) | CmgBaseline(e) | TarjanTuned(e) | CmgTuned(e) | Ks(e)
            | KsWithReverse(e) | BccBaseline(e) | BccTuned(e) => Some(e),
        }
    }

    fn is_bcc(self) -> bool {
        matches!(self, Workload::BccBaseline(_) | Workload::BccTuned(_))
    }
}

/// A benchmarked configuration, identified by a stable id used in CSV rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BenchAlgorithm {
    pub id: &'static str,
    workload: Workload,
}

const fn algo(id: &'static str, workload: Workload) -> BenchAlgorithm {
    BenchAlgorithm { id, workload }
}

use EngineKind::{Iterative, Recursive, RecursiveEdgeStack};

/// Every configuration the harness knows.
pub const ALGORITHMS: &[BenchAlgorithm] = &[
    algo("dfs_scan", Workload::Scan),
    algo("tarjan_tuned", Workload::TarjanTuned(Iterative)),
    algo("cmg_tuned", Workload::CmgTuned(Iterative)),
    algo("ks", Workload::Ks(Iterative)),
    algo("ks_with_reverse", Workload::KsWithReverse(Iterative)),
    algo("tarjan_baseline", Workload::TarjanBaseline(Recursive)),
    algo("cmg_baseline", Workload::CmgBaseline(Recursive)),
    algo("cmg_overlay", Workload::CmgTuned(Recursive)),
    algo(
        "cmg_overlay_edgestack",
        Workload::CmgTuned(RecursiveEdgeStack),
    ),
    algo(
        "cmg_overlay_edgestack_iterative",
        Workload::CmgTuned(Iterative),
    ),
    algo("tarjan_overlay", Workload::TarjanTuned(Recursive)),
    algo(
        "tarjan_overlay_edgestack",
        Workload::TarjanTuned(RecursiveEdgeStack),
    ),
    algo(
        "tarjan_overlay_edgestack_iterative",
        Workload::TarjanTuned(Iterative),
    ),
    algo("bcc_baseline", Workload::BccBaseline(Recursive)),
    algo("bcc_overlay", Workload::BccTuned(Recursive)),
    algo(
        "bcc_overlay_edgestack",
        Workload::BccTuned(RecursiveEdgeStack),
    ),
    algo(
        "bcc_overlay_edgestack_iterative",
        Workload::BccTuned(Iterative),
    ),
];

pub fn algorithm(id: &str) -> Option<BenchAlgorithm> {
    ALGORITHMS.iter().copied().find(|a| a.id == id)
}

fn algorithms(ids: &[&str]) -> Vec<BenchAlgorithm> {
    ids.iter()
        .map(|id| algorithm(id).expect("registered id"))
        .collect()
}

impl fmt::Display for BenchAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id)
    }
}

impl Suite {
    pub fn default_algorithms(self) -> Vec<BenchAlgorithm> {
        match self {
            Suite::DensitySweep | Suite::SizeSweep => algorithms(&[
                "dfs_scan",
                "tarjan_tuned",
                "cmg_tuned",
                "ks",
                "ks_with_reverse",
                "tarjan_baseline",
                "cmg_baseline",
            ]),
            Suite::Ablation => algorithms(&[
                "cmg_baseline",
                "cmg_overlay",
                "cmg_overlay_edgestack",
                "cmg_overlay_edgestack_iterative",
                "tarjan_baseline",
                "tarjan_overlay",
                "tarjan_overlay_edgestack",
                "tarjan_overlay_edgestack_iterative",
            ]),
            Suite::Bcc => algorithms(&[
                "bcc_baseline",
                "bcc_overlay",
                "bcc_overlay_edgestack",
                "bcc_overlay_edgestack_iterative",
            ]),
        }
    }
}

/// Node counts for the size sweep: `m_total / 10` and four smaller powers-of-4
/// steps below it.
pub fn default_sizes(m_total: usize) -> Vec<usize> {
    let top = (m_total / SIZE_SWEEP_DENSITY).max(1);
    (0..5)
        .rev()
        .map(|k| (top >> (2 * k)).max(1))
        .collect::<std::collections::BTreeSet<_>>()
        .into_iter()
        .collect()
}

#[derive(Debug, Clone)]
pub struct ExperimentSpec {
    pub suite: Suite,
    pub m_total: usize,
    pub densities: Vec<usize>,
    pub sizes: Vec<usize>,
    pub seed: u64,
    pub repeats: usize,
    pub algorithms: Vec<BenchAlgorithm>,
}

impl ExperimentSpec {
    pub fn new(suite: Suite) -> Self {
        Self {
            suite,
            m_total: DEFAULT_M_TOTAL,
            densities: DEFAULT_DENSITIES.to_vec(),
            sizes: default_sizes(DEFAULT_M_TOTAL),
            seed: 1,
            repeats: DEFAULT_REPEATS,
            algorithms: suite.default_algorithms(),
        }
    }

    /// Sets `m_total` and re-derives the default size list from it.
    pub fn with_m_total(mut self, m_total: usize) -> Self {
        self.m_total = m_total;
        self.sizes = default_sizes(m_total);
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidExperiment(msg));
        if self.repeats < MIN_REPEATS {
            return bad(format!(
                "repeats = {} but a median needs at least {MIN_REPEATS}",
                self.repeats
            ));
        }
        if self.algorithms.is_empty() {
            return bad("no algorithms selected".into());
        }
        if self.grid().is_empty() {
            return bad("empty grid".into());
        }
        for &d in &self.densities {
            if d == 0 || self.m_total / d == 0 {
                return bad(format!(
                    "density {d} leaves no nodes for m = {}",
                    self.m_total
                ));
            }
        }
        if self.sizes.contains(&0) {
            return bad("size 0 in size list".into());
        }
        let bcc_suite = self.suite == Suite::Bcc;
        if let Some(a) = self
            .algorithms
            .iter()
            .find(|a| a.workload.is_bcc() != bcc_suite)
        {
            return bad(format!("algorithm {a} does not belong to this suite"));
        }
        Ok(())
    }

    /// `(n, m)` grid points in measurement order.
    pub fn grid(&self) -> Vec<(usize, usize)> {
        let by_density = || {
            self.densities
                .iter()
                .filter(|&&d| d > 0)
                .map(|&d| (self.m_total / d, self.m_total))
                .collect::<Vec<_>>()
        };
        let by_size = || {
            self.sizes
                .iter()
                .map(|&n| (n, n * SIZE_SWEEP_DENSITY))
                .collect::<Vec<_>>()
        };
        match self.suite {
            Suite::DensitySweep | Suite::Ablation => by_density(),
            Suite::SizeSweep => by_size(),
            Suite::Bcc => {
                let mut g = by_density();
                g.extend(by_size());
                g
            }
        }
    }
}

/// One timed run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BenchRecord {
    pub algo: String,
    pub n: usize,
    pub m: usize,
    pub run: usize,
    pub elapsed_ns: u64,
    pub ns_per_edge: f64,
}

/// Algorithm id of the diagnostic row written when a grid point cannot be
/// allocated. Its timing fields are zero.
pub const SKIPPED_ALGO: &str = "skipped";

impl BenchRecord {
    pub fn new(algo: &str, n: usize, m: usize, run: usize, elapsed_ns: u64) -> Self {
        let elapsed_ns = elapsed_ns.max(1);
        Self {
            algo: algo.to_string(),
            n,
            m,
            run,
            elapsed_ns,
            ns_per_edge: elapsed_ns as f64 / m.max(1) as f64,
        }
    }

    fn skipped(n: usize, m: usize) -> Self {
        Self {
            algo: SKIPPED_ALGO.to_string(),
            n,
            m,
            run: 0,
            elapsed_ns: 0,
            ns_per_edge: 0.0,
        }
    }

    pub fn is_diagnostic(&self) -> bool {
        self.algo == SKIPPED_ALGO
    }
}

enum Prepared {
    Directed {
        graph: StaticDigraph,
        reverse: Option<StaticDigraph>,
    },
    Undirected(StaticUndirectedGraph),
}

/// Rough peak bytes to build and run on a grid point.
fn estimated_bytes(n: usize, m: usize, undirected: bool) -> usize {
    let arcs = if undirected { 2 * m } else { m };
    // edge list + CSR (+ reverse or arc ids) + arc stack + per-node arrays
    8 * m + 2 * 4 * arcs + 8 * arcs + 64 * n
}

fn memory_available(bytes: usize) -> bool {
    let mut probe: Vec<u8> = Vec::new();
    probe.try_reserve_exact(bytes).is_ok()
}

fn prepare(spec: &ExperimentSpec, n: usize, m: usize) -> Result<Prepared> {
    let bcc = spec.suite == Suite::Bcc;
    if bcc {
        let el = random_undirected(n, m, spec.seed)?;
        return Ok(Prepared::Undirected(StaticUndirectedGraph::from_edge_list(
            &el,
        )?));
    }
    let el = random_digraph(n, m, spec.seed)?;
    let graph = StaticDigraph::from_edge_list(&el)?;
    drop(el);
    let needs_reverse = spec
        .algorithms
        .iter()
        .any(|a| matches!(a.workload, Workload::Ks(_)));
    let reverse = needs_reverse.then(|| graph.reverse());
    Ok(Prepared::Directed { graph, reverse })
}

/// Runs one workload once and returns the elapsed nanoseconds.
fn time_once(workload: Workload, prepared: &Prepared) -> u64 {
    macro_rules! timed {
        ($e:expr) => {{
            let start = Instant::now();
            // the result is freed after the clock stops
            let _out = black_box($e);
            start.elapsed().as_nanos() as u64
        }};
    }
    match (workload, prepared) {
        (Workload::Scan, Prepared::Directed { graph, .. }) => timed!(dfs_scan(graph)),
        (Workload::TarjanBaseline(e), Prepared::Directed { graph, .. }) => {
            timed!(scc_tarjan_baseline(graph, e))
        }
        (Workload::CmgBaseline(e), Prepared::Directed { graph, .. }) => {
            timed!(scc_cmg_baseline(graph, e))
        }
        (Workload::TarjanTuned(e), Prepared::Directed { graph, .. }) => {
            timed!(scc_tarjan_tuned(graph, e))
        }
        (Workload::CmgTuned(e), Prepared::Directed { graph, .. }) => {
            timed!(scc_cmg_tuned(graph, e))
        }
        (Workload::Ks(e), Prepared::Directed { graph, reverse }) => {
            let reverse = reverse.as_ref().expect("reverse graph prepared");
            timed!(scc_kosaraju_sharir_with_reverse(graph, reverse, e))
        }
        (Workload::KsWithReverse(e), Prepared::Directed { graph, .. }) => {
            timed!(scc_kosaraju_sharir_with(graph, e))
        }
        (Workload::BccBaseline(e), Prepared::Undirected(g)) => timed!(bcc_baseline(g, e)),
        (Workload::BccTuned(e), Prepared::Undirected(g)) => timed!(bcc_tuned(g, e)),
        _ => unreachable!("suite validation pairs workloads with graph kinds"),
    }
}

/// Runs every grid point of `spec` and returns one record per timed run,
/// plus a diagnostic row for each grid point that could not be allocated.
pub fn run_suite(spec: &ExperimentSpec) -> Result<Vec<BenchRecord>> {
    spec.validate()?;
    let grid = spec.grid();
    let needs_deep_stack = spec
        .algorithms
        .iter()
        .any(|a| a.workload.engine().is_some_and(EngineKind::is_recursive));
    let work = || -> Result<Vec<BenchRecord>> {
        let mut records = Vec::new();
        for &(n, m) in &grid {
            if !memory_available(estimated_bytes(n, m, spec.suite == Suite::Bcc)) {
                records.push(BenchRecord::skipped(n, m));
                continue;
            }
            let prepared = prepare(spec, n, m)?;
            for a in &spec.algorithms {
                time_once(a.workload, &prepared);
            }
            // Round-robin so that machine drift spreads over all algorithms.
            let start = records.len();
            for run in 0..spec.repeats {
                for a in &spec.algorithms {
                    let elapsed = time_once(a.workload, &prepared);
                    records.push(BenchRecord::new(a.id, n, m, run, elapsed));
                }
            }
            records[start..].sort_by_key(|r| spec.algorithms.iter().position(|a| a.id == r.algo));
        }
        Ok(records)
    };
    if needs_deep_stack {
        let max_n = grid.iter().map(|&(n, _)| n).max().unwrap_or(0);
        with_stack(recursive_stack_bytes(max_n), work)
    } else {
        work()
    }
}

/// Convenience for [`Suite::Ablation`] specs.
pub fn ablation_suite(spec: &ExperimentSpec) -> Result<Vec<BenchRecord>> {
    if spec.suite != Suite::Ablation {
        return Err(Error::InvalidExperiment(
            "ablation_suite needs Suite::Ablation".into(),
        ));
    }
    run_suite(spec)
}

pub fn write_csv(records: &[BenchRecord], path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let wrap = |source| Error::Csv {
        path: path.to_path_buf(),
        source,
    };
    let mut w = csv::Writer::from_path(path).map_err(wrap)?;
    if records.is_empty() {
        w.write_record(["algo", "n", "m", "run", "elapsed_ns", "ns_per_edge"])
            .map_err(wrap)?;
    }
    for r in records {
        w.serialize(r).map_err(wrap)?;
    }
    w.flush().map_err(|e| Error::io(path, e))
}

pub fn read_csv(path: impl AsRef<Path>) -> Result<Vec<BenchRecord>> {
    let path = path.as_ref();
    let wrap = |source| Error::Csv {
        path: path.to_path_buf(),
        source,
    };
    let mut r = csv::Reader::from_path(path).map_err(wrap)?;
    r.deserialize().map(|row| row.map_err(wrap)).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MedianRecord {
    pub algo: String,
    pub n: usize,
    pub m: usize,
    pub median_ns_per_edge: f64,
}

pub fn median(values: &mut [f64]) -> Option<f64> {
    if values.is_empty() {
        return None;
    }
    values.sort_by(f64::total_cmp);
    let mid = values.len() / 2;
    Some(if values.len() % 2 == 1 {
        values[mid]
    } else {
        (values[mid - 1] + values[mid]) / 2.0
    })
}

/// Median ns/edge per `(algo, n, m)`, in order of first appearance.
pub fn medians(records: &[BenchRecord]) -> Vec<MedianRecord> {
    let mut order = Vec::new();
    let mut groups: HashMap<(&str, usize, usize), Vec<f64>> = HashMap::new();
    for r in records.iter().filter(|r| !r.is_diagnostic()) {
        let key = (r.algo.as_str(), r.n, r.m);
        groups
            .entry(key)
            .or_insert_with(|| {
                order.push(key);
                Vec::new()
            })
            .push(r.ns_per_edge);
    }
    order
        .into_iter()
        .map(|key| {
            let values = groups.get_mut(&key).expect("grouped");
            MedianRecord {
                algo: key.0.to_string(),
                n: key.1,
                m: key.2,
                median_ns_per_edge: median(values).expect("nonempty group"),
            }
        })
        .collect()
}

/// Median ns/edge of one algorithm at one grid point.
pub fn median_for(records: &[BenchRecord], algo: &str, n: usize, m: usize) -> Option<f64> {
    let mut v: Vec<f64> = records
        .iter()
        .filter(|r| r.algo == algo && r.n == n && r.m == m)
        .map(|r| r.ns_per_edge)
        .collect();
    median(&mut v)
}

pub fn write_medians_csv(medians: &[MedianRecord], path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let wrap = |source| Error::Csv {
        path: path.to_path_buf(),
        source,
    };
    let mut w = csv::Writer::from_path(path).map_err(wrap)?;
    if medians.is_empty() {
        w.write_record(["algo", "n", "m", "median_ns_per_edge"])
            .map_err(wrap)?;
    }
    for r in medians {
        w.serialize(r).map_err(wrap)?;
    }
    w.flush().map_err(|e| Error::io(path, e))
}
