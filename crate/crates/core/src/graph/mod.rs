//! Static graphs in adjacency-array (CSR) form.
//!
//! Node ids are 0-based `u32`. Out-edges of node `v` occupy
//! `targets[offsets[v]..offsets[v + 1]]`; the graphs are immutable once built.

mod io;
mod random;

pub use io::{read_edge_list, read_labels, write_edge_list, write_labels};
pub use random::{random_digraph, random_undirected, SplitMix64};

use crate::error::{Error, Result};

pub type NodeId = u32;

/// Largest supported node count. Tuned Tarjan stores `-(n + 1)` in an `i32`.
pub const MAX_NODES: u64 = (1 << 31) - 2;
/// Largest supported edge count.
pub const MAX_EDGES: u64 = (1 << 31) - 1;

/// Interchange form: a node count plus an ordered sequence of edges.
///
/// Duplicates and self-loops are allowed.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EdgeList {
    pub n: usize,
    pub edges: Vec<(NodeId, NodeId)>,
}

impl EdgeList {
    pub fn new(n: usize, edges: Vec<(NodeId, NodeId)>) -> Self {
        Self { n, edges }
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn validate(&self) -> Result<()> {
        check_size(self.n, self.edges.len())?;
        let n = self.n as u64;
        for (index, &(u, v)) in self.edges.iter().enumerate() {
            if u as u64 >= n || v as u64 >= n {
                return Err(Error::EndpointOutOfRange {
                    index,
                    source_node: u as u64,
                    target_node: v as u64,
                    n,
                });
            }
        }
        Ok(())
    }
}

fn check_size(n: usize, m: usize) -> Result<()> {
    if n as u64 > MAX_NODES {
        return Err(Error::TooLarge {
            what: "n",
            value: n as u64,
            limit: MAX_NODES,
        });
    }
    if m as u64 > MAX_EDGES {
        return Err(Error::TooLarge {
            what: "m",
            value: m as u64,
            limit: MAX_EDGES,
        });
    }
    Ok(())
}

/// Stable counting sort of `m` items into `n` buckets.
///
/// `key(i)` names the bucket of item `i`; items keep their relative order
/// inside a bucket. Returns the offset array and, for every output slot, the
/// index of the item placed there.
fn counting_sort(n: usize, m: usize, key: impl Fn(usize) -> usize) -> (Vec<u32>, Vec<u32>) {
    let mut offsets = vec![0u32; n + 1];
    for i in 0..m {
        offsets[key(i) + 1] += 1;
    }
    for v in 0..n {
        offsets[v + 1] += offsets[v];
    }
    let mut cursor = offsets[..n].to_vec();
    let mut order = vec![0u32; m];
    for i in 0..m {
        let slot = &mut cursor[key(i)];
        order[*slot as usize] = i as u32;
        *slot += 1;
    }
    (offsets, order)
}

/// Directed graph as an adjacency array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaticDigraph {
    offsets: Vec<u32>,
    targets: Vec<NodeId>,
}

impl StaticDigraph {
    /// Groups the edges by source with a counting sort. Within each bucket the
    /// targets keep the order in which they appear in `el`.
    pub fn from_edge_list(el: &EdgeList) -> Result<Self> {
        el.validate()?;
        let edges = &el.edges;
        let (offsets, order) = counting_sort(el.n, edges.len(), |i| edges[i].0 as usize);
        let targets = order.iter().map(|&i| edges[i as usize].1).collect();
        Ok(Self { offsets, targets })
    }

    /// Builds directly from CSR arrays, checking every invariant.
    pub fn from_parts(offsets: Vec<u32>, targets: Vec<NodeId>) -> Result<Self> {
        let n = offsets.len().saturating_sub(1);
        check_size(n, targets.len())?;
        let bad = |message: &str| Error::InvalidExperiment(format!("malformed CSR: {message}"));
        if offsets.first() != Some(&0) {
            return Err(bad("offsets must start at 0"));
        }
        if offsets[n] as usize != targets.len() {
            return Err(bad("last offset must equal the edge count"));
        }
        if offsets.windows(2).any(|w| w[0] > w[1]) {
            return Err(bad("offsets must be nondecreasing"));
        }
        if let Some(&t) = targets.iter().find(|&&t| t as usize >= n) {
            return Err(bad(&format!("target {t} out of range")));
        }
        Ok(Self { offsets, targets })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            offsets: vec![0; n + 1],
            targets: Vec::new(),
        }
    }

    #[inline]
    pub fn node_count(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.targets.len()
    }

    pub fn offsets(&self) -> &[u32] {
        &self.offsets
    }

    pub fn targets(&self) -> &[NodeId] {
        &self.targets
    }

    #[inline]
    pub fn out_edges(&self, v: NodeId) -> &[NodeId] {
        let v = v as usize;
        &self.targets[self.offsets[v] as usize..self.offsets[v + 1] as usize]
    }

    pub fn out_degree(&self, v: NodeId) -> usize {
        let v = v as usize;
        (self.offsets[v + 1] - self.offsets[v]) as usize
    }

    /// Iterates `(source, target)` in CSR order.
    pub fn edges(&self) -> impl Iterator<Item = (NodeId, NodeId)> + '_ {
        (0..self.node_count() as NodeId)
            .flat_map(move |u| self.out_edges(u).iter().map(move |&v| (u, v)))
    }

    /// The reverse graph, built by a stable counting sort on the targets:
    /// within each bucket the new targets (old sources) appear in increasing
    /// order of the original CSR position.
    pub fn reverse(&self) -> Self {
        let n = self.node_count();
        let m = self.edge_count();
        let mut sources = vec![0 as NodeId; m];
        for u in 0..n {
            let range = self.offsets[u] as usize..self.offsets[u + 1] as usize;
            sources[range].fill(u as NodeId);
        }
        let targets = &self.targets;
        let (offsets, order) = counting_sort(n, m, |i| targets[i] as usize);
        let targets = order.iter().map(|&i| sources[i as usize]).collect();
        Self { offsets, targets }
    }

    pub fn to_edge_list(&self) -> EdgeList {
        EdgeList::new(self.node_count(), self.edges().collect())
    }
}

/// Undirected graph as an adjacency array of arcs.
///
/// Every undirected edge `i = {u, v}` becomes two arcs, `u -> v` and
/// `v -> u`, both tagged with edge id `i`. A self-loop gives two arcs at the
/// same vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StaticUndirectedGraph {
    offsets: Vec<u32>,
    arc_targets: Vec<NodeId>,
    arc_edge_ids: Vec<u32>,
    edge_count: usize,
}

impl StaticUndirectedGraph {
    pub fn from_edge_list(el: &EdgeList) -> Result<Self> {
        el.validate()?;
        let edges = &el.edges;
        let arc_count = 2 * edges.len();
        // arc 2i runs u -> v, arc 2i + 1 runs v -> u for edge i = (u, v)
        let arc_source = |a: usize| {
            let (u, v) = edges[a / 2];
            if a.is_multiple_of(2) {
                u
            } else {
                v
            }
        };
        let arc_target = |a: usize| {
            let (u, v) = edges[a / 2];
            if a.is_multiple_of(2) {
                v
            } else {
                u
            }
        };
        let (offsets, order) = counting_sort(el.n, arc_count, |a| arc_source(a) as usize);
        let arc_targets = order.iter().map(|&a| arc_target(a as usize)).collect();
        let arc_edge_ids = order.iter().map(|&a| a / 2).collect();
        Ok(Self {
            offsets,
            arc_targets,
            arc_edge_ids,
            edge_count: edges.len(),
        })
    }

    #[inline]
    pub fn node_count(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Number of undirected edges.
    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn arc_count(&self) -> usize {
        self.arc_targets.len()
    }

    pub fn offsets(&self) -> &[u32] {
        &self.offsets
    }

    pub fn arc_targets(&self) -> &[NodeId] {
        &self.arc_targets
    }

    pub fn arc_edge_ids(&self) -> &[u32] {
        &self.arc_edge_ids
    }

    #[inline]
    pub fn arc_range(&self, v: NodeId) -> std::ops::Range<usize> {
        let v = v as usize;
        self.offsets[v] as usize..self.offsets[v + 1] as usize
    }

    /// `(target, edge id)` pairs of the arcs leaving `v`.
    pub fn arcs(&self, v: NodeId) -> impl DoubleEndedIterator<Item = (NodeId, u32)> + '_ {
        let r = self.arc_range(v);
        self.arc_targets[r.clone()]
            .iter()
            .copied()
            .zip(self.arc_edge_ids[r].iter().copied())
    }

    /// Recovers the edge list (edge ids in order, each edge oriented from its
    /// first arc's source).
    pub fn to_edge_list(&self) -> EdgeList {
        let mut edges = vec![None; self.edge_count];
        for u in 0..self.node_count() as NodeId {
            for (v, e) in self.arcs(u) {
                edges[e as usize].get_or_insert((v, u));
            }
        }
        EdgeList::new(
            self.node_count(),
            edges
                .into_iter()
                .map(|e| e.expect("every edge has two arcs"))
                .collect(),
        )
    }
}
