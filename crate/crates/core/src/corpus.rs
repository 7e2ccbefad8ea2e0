//! Randomized verification sweeps over many small graphs.
//!
//! Each trial derives its own seed from the corpus seed and its index, so
//! trials are independent and a sweep gives the same verdict (and the same
//! first counterexample) whether it runs sequentially or on the rayon pool.

use rand::{Rng, SeedableRng};

use crate::bcc::{bcc_baseline, bcc_tuned, edge_partitions_equal};
use crate::dfs::{EngineKind, Transcript};
use crate::graph::{EdgeList, SplitMix64, StaticDigraph, StaticUndirectedGraph};
use crate::oracle::{bcc_oracle, scc_oracle, MAX_BCC_ORACLE_EDGES, MAX_BCC_ORACLE_NODES};
use crate::scc::{
    find_order_violation, partitions_equal, scc_tarjan_baseline, SccAlgorithm, SccLabeling,
};

/// How a sweep distributes its trials.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    /// Uses the rayon pool when the `parallel` feature is enabled, otherwise
    /// falls back to sequential execution.
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// The first failing trial of a sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub trial: usize,
    pub graph: EdgeList,
    pub reason: String,
}

pub type Check = Result<(), String>;

fn trial_rng(seed: u64, trial: usize) -> SplitMix64 {
    // decorrelate neighbouring trial indices before seeding
    let mut mix =
        SplitMix64::seed_from_u64(seed ^ (trial as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    SplitMix64::seed_from_u64(mix.gen())
}

/// Trial `trial` of a directed corpus: `n` uniform in `[1, max_n]`, `m`
/// uniform in `[0, 2n]`, endpoints uniform.
pub fn scc_trial(seed: u64, max_n: usize, trial: usize) -> EdgeList {
    let mut rng = trial_rng(seed, trial);
    let n = rng.gen_range(1..=max_n.max(1));
    let m = rng.gen_range(0..=2 * n);
    random_edges(&mut rng, n, m)
}

/// Trial `trial` of an undirected corpus: `n` uniform in
/// `[1, min(max_n, 10)]`, `m` uniform in `[0, 20]`.
pub fn bcc_trial(seed: u64, max_n: usize, trial: usize) -> EdgeList {
    let mut rng = trial_rng(seed, trial);
    let n = rng.gen_range(1..=max_n.clamp(1, MAX_BCC_ORACLE_NODES));
    let m = rng.gen_range(0..=MAX_BCC_ORACLE_EDGES);
    random_edges(&mut rng, n, m)
}

fn random_edges(rng: &mut SplitMix64, n: usize, m: usize) -> EdgeList {
    let edges = (0..m)
        .map(|_| (rng.gen_range(0..n as u32), rng.gen_range(0..n as u32)))
        .collect();
    EdgeList::new(n, edges)
}

/// Runs `check` on `trials` generated graphs and returns the failing trial
/// with the smallest index, if any.
pub fn sweep<G, C>(trials: usize, exec: Execution, generate: G, check: C) -> Option<Counterexample>
where
    G: Fn(usize) -> EdgeList + Sync,
    C: Fn(&EdgeList) -> Check + Sync,
{
    let run = |trial: usize| {
        let graph = generate(trial);
        check(&graph).err().map(|reason| Counterexample {
            trial,
            graph,
            reason,
        })
    };
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            (0..trials).into_par_iter().find_map_first(run)
        }
        _ => (0..trials).find_map(run),
    }
}

fn digraph(el: &EdgeList) -> StaticDigraph {
    StaticDigraph::from_edge_list(el).expect("corpus graphs are valid")
}

fn every_run(
    g: &StaticDigraph,
) -> impl Iterator<Item = (SccAlgorithm, EngineKind, SccLabeling)> + '_ {
    SccAlgorithm::ALL.into_iter().flat_map(move |algo| {
        EngineKind::ALL
            .into_iter()
            .map(move |engine| (algo, engine, algo.run(g, engine)))
    })
}

/// Every algorithm under every engine yields the oracle's partition.
pub fn check_scc_oracle(el: &EdgeList) -> Check {
    let g = digraph(el);
    let truth = scc_oracle(&g).map_err(|e| e.to_string())?;
    for (algo, engine, lab) in every_run(&g) {
        if !lab.is_well_formed() || lab.scc_count != truth.scc_count {
            return Err(format!(
                "{algo}/{engine}: malformed labeling or wrong count"
            ));
        }
        if !partitions_equal(&lab, &truth).map_err(|e| e.to_string())? {
            return Err(format!("{algo}/{engine}: partition differs from oracle"));
        }
    }
    Ok(())
}

/// The four single-pass variants agree element-wise; Kosaraju-Sharir agrees
/// as a partition.
pub fn check_scc_exact(el: &EdgeList) -> Check {
    let g = digraph(el);
    let reference = scc_tarjan_baseline(&g, EngineKind::Iterative);
    for (algo, engine, lab) in every_run(&g) {
        let agrees = match algo {
            SccAlgorithm::KosarajuSharir => {
                partitions_equal(&lab, &reference).map_err(|e| e.to_string())?
            }
            _ => lab == reference,
        };
        if !agrees {
            return Err(format!("{algo}/{engine}: differs from tarjan baseline"));
        }
    }
    Ok(())
}

/// Component ids follow the edges in the direction each algorithm promises,
/// with equality exactly inside a component.
pub fn check_scc_ordering(el: &EdgeList) -> Check {
    let g = digraph(el);
    let truth = scc_oracle(&g).map_err(|e| e.to_string())?;
    for (algo, engine, lab) in every_run(&g) {
        if let Some((u, v)) = find_order_violation(&g, &lab, &truth, algo.numbering()) {
            return Err(format!(
                "{algo}/{engine}: numbering violated on edge ({u}, {v})"
            ));
        }
    }
    Ok(())
}

pub fn check_scc_all(el: &EdgeList) -> Check {
    check_scc_oracle(el)?;
    check_scc_exact(el)?;
    check_scc_ordering(el)
}

/// Baseline and tuned BCC under every engine match the cycle oracle and
/// each other element-wise.
pub fn check_bcc(el: &EdgeList) -> Check {
    let g = StaticUndirectedGraph::from_edge_list(el).expect("corpus graphs are valid");
    let truth = bcc_oracle(&g).map_err(|e| e.to_string())?;
    let reference = bcc_baseline(&g, EngineKind::Iterative);
    for engine in EngineKind::ALL {
        for (name, lab) in [
            ("baseline", bcc_baseline(&g, engine)),
            ("tuned", bcc_tuned(&g, engine)),
        ] {
            if !lab.is_well_formed() || lab.bcc_count != truth.bcc_count {
                return Err(format!(
                    "bcc {name}/{engine}: malformed labeling or wrong count"
                ));
            }
            if !edge_partitions_equal(&lab, &truth).map_err(|e| e.to_string())? {
                return Err(format!(
                    "bcc {name}/{engine}: partition differs from oracle"
                ));
            }
            if lab != reference {
                return Err(format!(
                    "bcc {name}/{engine}: differs from iterative baseline"
                ));
            }
        }
    }
    Ok(())
}

/// All engines emit the same hook-call sequence.
pub fn check_transcripts(el: &EdgeList) -> Check {
    let g = digraph(el);
    let reference = Transcript::record(&g, EngineKind::Recursive);
    for engine in [EngineKind::RecursiveEdgeStack, EngineKind::Iterative] {
        let t = Transcript::record(&g, engine);
        if t != reference {
            let at = t
                .iter()
                .zip(&reference)
                .position(|(a, b)| a != b)
                .unwrap_or(t.len().min(reference.len()));
            return Err(format!(
                "{engine} transcript diverges from recursive at event {at}"
            ));
        }
    }
    Ok(())
}

/// Directed sweep running all SCC checks.
pub fn verify_scc(
    trials: usize,
    max_n: usize,
    seed: u64,
    exec: Execution,
) -> Option<Counterexample> {
    sweep(trials, exec, |i| scc_trial(seed, max_n, i), check_scc_all)
}

/// Undirected sweep against the cycle oracle.
pub fn verify_bcc(
    trials: usize,
    max_n: usize,
    seed: u64,
    exec: Execution,
) -> Option<Counterexample> {
    sweep(trials, exec, |i| bcc_trial(seed, max_n, i), check_bcc)
}
