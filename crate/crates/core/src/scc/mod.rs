//! Strongly connected components.
//!
//! Five implementations share one output type:
//!
//! | function | bookkeeping |
//! |---|---|
//! | [`scc_tarjan_baseline`] | separate visited / DFS-number / lowpoint / open arrays |
//! | [`scc_cmg_baseline`] | separate arrays, node-valued `roots` stack |
//! | [`scc_tarjan_tuned`] | one overlaid label array, lowpoint returned from each descent |
//! | [`scc_cmg_tuned`] | one overlaid label array, `roots` holds encoded DFS numbers |
//! | [`scc_kosaraju_sharir`] | two passes over the graph and its reverse |
//!
//! The four single-pass variants close components at the same `finish_node`
//! events and therefore produce identical `comp_num` arrays, numbered in
//! reverse topological order. Kosaraju-Sharir numbers in topological order.

mod baseline;
mod kosaraju;
mod tuned;

use std::fmt;
use std::str::FromStr;

pub use baseline::{scc_cmg_baseline, scc_tarjan_baseline, CmgBaselineHooks, TarjanBaselineHooks};
pub use kosaraju::{
    scc_kosaraju_sharir, scc_kosaraju_sharir_with, scc_kosaraju_sharir_with_reverse,
};
pub use tuned::{
    dfs_scan, scc_cmg_tuned, scc_tarjan_tuned, CmgTunedHooks, ScanHooks, TarjanTunedHooks,
};

use crate::dfs::EngineKind;
use crate::error::{Error, Result};
use crate::graph::{NodeId, StaticDigraph};

/// Component id per node plus the number of components.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SccLabeling {
    pub comp_num: Vec<u32>,
    pub scc_count: usize,
}

impl SccLabeling {
    pub fn new(comp_num: Vec<u32>, scc_count: usize) -> Self {
        Self {
            comp_num,
            scc_count,
        }
    }

    pub fn node_count(&self) -> usize {
        self.comp_num.len()
    }

    /// Renumbers components by first occurrence in node order.
    pub fn canonical(&self) -> Vec<u32> {
        canonical_labels(&self.comp_num)
    }

    /// Every label lies in `[0, scc_count)` and every id in that range is used.
    pub fn is_well_formed(&self) -> bool {
        let mut used = vec![false; self.scc_count];
        for &c in &self.comp_num {
            match used.get_mut(c as usize) {
                Some(slot) => *slot = true,
                None => return false,
            }
        }
        used.into_iter().all(|u| u)
    }

    /// Lists the components, each sorted, in component id order.
    pub fn components(&self) -> Vec<Vec<NodeId>> {
        let mut out = vec![Vec::new(); self.scc_count];
        for (v, &c) in self.comp_num.iter().enumerate() {
            out[c as usize].push(v as NodeId);
        }
        out
    }
}

pub(crate) fn canonical_labels(labels: &[u32]) -> Vec<u32> {
    let mut map = std::collections::HashMap::new();
    labels
        .iter()
        .map(|&l| {
            let next = map.len() as u32;
            *map.entry(l).or_insert(next)
        })
        .collect()
}

/// Whether two labelings induce the same partition of the nodes.
pub fn partitions_equal(a: &SccLabeling, b: &SccLabeling) -> Result<bool> {
    labels_partition_equal(&a.comp_num, &b.comp_num)
}

pub(crate) fn labels_partition_equal(a: &[u32], b: &[u32]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    Ok(canonical_labels(a) == canonical_labels(b))
}

/// Direction in which component ids follow the edges.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Numbering {
    /// `comp[u] >= comp[v]` for every edge `(u, v)`: single-pass algorithms.
    ReverseTopological,
    /// `comp[u] <= comp[v]` for every edge `(u, v)`: Kosaraju-Sharir.
    Topological,
}

/// Returns the first edge violating `order`, given the true partition
/// `truth` (equality of labels must hold exactly within a component).
pub fn find_order_violation(
    g: &StaticDigraph,
    lab: &SccLabeling,
    truth: &SccLabeling,
    order: Numbering,
) -> Option<(NodeId, NodeId)> {
    g.edges()
        .find(|&(u, v)| !edge_respects(lab, truth, order, u, v))
}

fn edge_respects(
    lab: &SccLabeling,
    truth: &SccLabeling,
    order: Numbering,
    u: NodeId,
    v: NodeId,
) -> bool {
    let (cu, cv) = (lab.comp_num[u as usize], lab.comp_num[v as usize]);
    let same = truth.comp_num[u as usize] == truth.comp_num[v as usize];
    let ordered = match order {
        Numbering::ReverseTopological => cu >= cv,
        Numbering::Topological => cu <= cv,
    };
    ordered && ((cu == cv) == same)
}

/// Algorithm selector used by the CLI and the benchmark harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SccAlgorithm {
    KosarajuSharir,
    TarjanBaseline,
    CmgBaseline,
    TarjanTuned,
    CmgTuned,
}

impl SccAlgorithm {
    pub const ALL: [SccAlgorithm; 5] = [
        SccAlgorithm::KosarajuSharir,
        SccAlgorithm::TarjanBaseline,
        SccAlgorithm::CmgBaseline,
        SccAlgorithm::TarjanTuned,
        SccAlgorithm::CmgTuned,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SccAlgorithm::KosarajuSharir => "ks",
            SccAlgorithm::TarjanBaseline => "tarjan",
            SccAlgorithm::CmgBaseline => "cmg",
            SccAlgorithm::TarjanTuned => "tarjan-tuned",
            SccAlgorithm::CmgTuned => "cmg-tuned",
        }
    }

    pub fn numbering(self) -> Numbering {
        match self {
            SccAlgorithm::KosarajuSharir => Numbering::Topological,
            _ => Numbering::ReverseTopological,
        }
    }

    pub fn run(self, g: &StaticDigraph, engine: EngineKind) -> SccLabeling {
        match self {
            SccAlgorithm::KosarajuSharir => scc_kosaraju_sharir_with(g, engine),
            SccAlgorithm::TarjanBaseline => scc_tarjan_baseline(g, engine),
            SccAlgorithm::CmgBaseline => scc_cmg_baseline(g, engine),
            SccAlgorithm::TarjanTuned => scc_tarjan_tuned(g, engine),
            SccAlgorithm::CmgTuned => scc_cmg_tuned(g, engine),
        }
    }
}

impl fmt::Display for SccAlgorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SccAlgorithm {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        SccAlgorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| format!("unknown SCC algorithm {s:?}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeList;

    pub(crate) fn digraph(n: usize, edges: &[(u32, u32)]) -> StaticDigraph {
        StaticDigraph::from_edge_list(&EdgeList::new(n, edges.to_vec())).unwrap()
    }

    fn run_all(g: &StaticDigraph) -> Vec<(String, SccLabeling)> {
        let mut out = Vec::new();
        for algo in SccAlgorithm::ALL {
            for engine in EngineKind::ALL {
                out.push((format!("{algo}/{engine}"), algo.run(g, engine)));
            }
        }
        out
    }

    #[test]
    fn three_cycle_is_one_component() {
        let g = digraph(3, &[(0, 1), (1, 2), (2, 0)]);
        for (name, lab) in run_all(&g) {
            assert_eq!(lab.scc_count, 1, "{name}");
            assert_eq!(lab.comp_num, vec![0, 0, 0], "{name}");
        }
    }

    #[test]
    fn edgeless_graph_is_all_singletons() {
        let g = digraph(4, &[]);
        for (name, lab) in run_all(&g) {
            assert_eq!(lab.scc_count, 4, "{name}");
            assert_eq!(lab.canonical(), vec![0, 1, 2, 3], "{name}");
        }
    }

    #[test]
    fn two_components() {
        // closure of this graph: {0,1,2} reach each other and {3,4}; {3,4} do
        // not reach back
        let g = digraph(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 3)]);
        for (name, lab) in run_all(&g) {
            assert_eq!(lab.scc_count, 2, "{name}");
            assert_eq!(lab.canonical(), vec![0, 0, 0, 1, 1], "{name}");
        }
        // single-pass variants close {3,4} first
        assert_eq!(
            scc_cmg_tuned(&g, EngineKind::Iterative).comp_num,
            vec![1, 1, 1, 0, 0]
        );
        assert_eq!(scc_kosaraju_sharir(&g).comp_num, vec![0, 0, 0, 1, 1]);
    }

    #[test]
    fn empty_graph() {
        let g = StaticDigraph::empty(0);
        for (name, lab) in run_all(&g) {
            assert_eq!(lab, SccLabeling::default(), "{name}");
        }
        assert_eq!(dfs_scan(&g), 0);
    }

    #[test]
    fn self_loops_and_parallel_edges() {
        let g = digraph(3, &[(0, 0), (0, 1), (0, 1), (1, 1), (2, 2)]);
        for (name, lab) in run_all(&g) {
            assert_eq!(lab.scc_count, 3, "{name}");
        }
    }

    #[test]
    fn partition_equality() {
        let a = SccLabeling::new(vec![0, 0, 1], 2);
        let b = SccLabeling::new(vec![5, 5, 2], 6);
        assert!(partitions_equal(&a, &b).unwrap());
        let c = SccLabeling::new(vec![0, 1], 2);
        let d = SccLabeling::new(vec![0, 0], 1);
        assert!(!partitions_equal(&c, &d).unwrap());
        assert!(matches!(
            partitions_equal(&a, &c),
            Err(Error::LengthMismatch { left: 3, right: 2 })
        ));
    }

    #[test]
    fn well_formedness() {
        assert!(SccLabeling::new(vec![1, 0, 1], 2).is_well_formed());
        assert!(!SccLabeling::new(vec![2, 0], 2).is_well_formed());
        assert!(!SccLabeling::new(vec![0, 0], 2).is_well_formed());
    }

    #[test]
    fn dfs_scan_counts_nodes() {
        let g = digraph(6, &[(0, 1), (3, 4)]);
        assert_eq!(dfs_scan(&g), 6);
    }

    #[test]
    fn algorithm_names_parse() {
        for a in SccAlgorithm::ALL {
            assert_eq!(a.name().parse::<SccAlgorithm>().unwrap(), a);
        }
    }
}
