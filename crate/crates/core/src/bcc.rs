//! Biconnected components of undirected graphs.
//!
//! Output is one component id per undirected edge. Bridges form singleton
//! components, each self-loop is its own component, and isolated vertices
//! belong to none. Edges enter a shared edge-id stack when first traversed
//! towards the DFS root (tree edges on descent, back edges from the
//! descendant end); when a child `w` of `v` finishes with a lowpoint not
//! above `v`, everything down to the tree edge `{v, w}` forms a component.
//!
//! The arc leading back to the parent is skipped by edge id, once, so a
//! parallel edge to the parent counts as a back edge.

use std::collections::BTreeSet;

use crate::dfs::{dfs_all, BoundedStack, DfsHooks, EngineKind, UndirectedArc};
use crate::graph::{NodeId, StaticUndirectedGraph};

const UNSET: u32 = u32::MAX;
const NO_EDGE: u32 = u32::MAX;

/// Component id per undirected edge.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BccLabeling {
    pub edge_comp: Vec<u32>,
    pub bcc_count: usize,
}

impl BccLabeling {
    pub fn new(edge_comp: Vec<u32>, bcc_count: usize) -> Self {
        Self {
            edge_comp,
            bcc_count,
        }
    }

    pub fn canonical(&self) -> Vec<u32> {
        crate::scc::canonical_labels(&self.edge_comp)
    }

    pub fn is_well_formed(&self) -> bool {
        let mut used = vec![false; self.bcc_count];
        for &c in &self.edge_comp {
            match used.get_mut(c as usize) {
                Some(slot) => *slot = true,
                None => return false,
            }
        }
        used.into_iter().all(|u| u)
    }
}

/// Whether two labelings induce the same partition of the edges.
pub fn edge_partitions_equal(a: &BccLabeling, b: &BccLabeling) -> crate::Result<bool> {
    crate::scc::labels_partition_equal(&a.edge_comp, &b.edge_comp)
}

/// Per-visit state of the baseline: the edge the node was entered by, until
/// its twin arc has been skipped.
#[derive(Debug, Clone, Copy)]
pub struct ParentEdge(u32);

impl Default for ParentEdge {
    fn default() -> Self {
        ParentEdge(NO_EDGE)
    }
}

/// Hopcroft-Tarjan with separate visited, DFS-number and lowpoint arrays.
#[derive(Debug)]
pub struct BccBaselineHooks {
    visited: Vec<bool>,
    dfs_num: Vec<u32>,
    low: Vec<u32>,
    edges: BoundedStack<u32>,
    edge_comp: Vec<u32>,
    dfs_count: u32,
    bcc_count: u32,
}

impl BccBaselineHooks {
    pub fn new(n: usize, m: usize) -> Self {
        Self {
            visited: vec![false; n],
            dfs_num: vec![0; n],
            low: vec![0; n],
            edges: BoundedStack::new(m),
            edge_comp: vec![UNSET; m],
            dfs_count: 0,
            bcc_count: 0,
        }
    }

    pub fn into_labeling(self) -> BccLabeling {
        debug_assert!(self.edges.is_empty());
        BccLabeling::new(self.edge_comp, self.bcc_count as usize)
    }
}

fn close_component(edges: &mut BoundedStack<u32>, edge_comp: &mut [u32], through: u32, id: u32) {
    loop {
        let e = edges.pop();
        debug_assert_eq!(edge_comp[e as usize], UNSET);
        edge_comp[e as usize] = id;
        if e == through {
            break;
        }
    }
}

fn label_self_loop(edge_comp: &mut [u32], e: u32, count: &mut u32) {
    if edge_comp[e as usize] == UNSET {
        edge_comp[e as usize] = *count;
        *count += 1;
    }
}

impl DfsHooks<StaticUndirectedGraph> for BccBaselineHooks {
    type Frame = ParentEdge;

    #[inline]
    fn is_unvisited(&self, v: NodeId) -> bool {
        !self.visited[v as usize]
    }

    #[inline]
    fn tree_edge(&mut self, v: NodeId, entered_by: Option<UndirectedArc>) -> ParentEdge {
        let i = v as usize;
        self.visited[i] = true;
        self.dfs_num[i] = self.dfs_count;
        self.low[i] = self.dfs_count;
        self.dfs_count += 1;
        match entered_by {
            Some(arc) => {
                self.edges.push(arc.edge);
                ParentEdge(arc.edge)
            }
            None => ParentEdge(NO_EDGE),
        }
    }

    #[inline]
    fn non_tree_edge(&mut self, parent: &mut ParentEdge, u: NodeId, arc: UndirectedArc) {
        if arc.edge == parent.0 {
            parent.0 = NO_EDGE;
            return;
        }
        let w = arc.target;
        if w == u {
            label_self_loop(&mut self.edge_comp, arc.edge, &mut self.bcc_count);
            return;
        }
        let (du, dw) = (self.dfs_num[u as usize], self.dfs_num[w as usize]);
        if dw < du {
            self.edges.push(arc.edge);
            if dw < self.low[u as usize] {
                self.low[u as usize] = dw;
            }
        }
    }

    #[inline]
    fn finish_tree_edge(
        &mut self,
        _: &mut ParentEdge,
        _: ParentEdge,
        v: NodeId,
        arc: UndirectedArc,
    ) {
        let w = arc.target as usize;
        let v = v as usize;
        if self.low[w] >= self.dfs_num[v] {
            close_component(
                &mut self.edges,
                &mut self.edge_comp,
                arc.edge,
                self.bcc_count,
            );
            self.bcc_count += 1;
        }
        if self.low[w] < self.low[v] {
            self.low[v] = self.low[w];
        }
    }

    #[inline]
    fn finish_node(&mut self, _: &mut ParentEdge, _: NodeId) {}
}

/// Per-visit state of the tuned variant.
#[derive(Debug, Clone, Copy)]
pub struct BccFrame {
    dfs_num: i32,
    low_point: i32,
    parent_edge: u32,
}

impl Default for BccFrame {
    fn default() -> Self {
        Self {
            dfs_num: UNVISITED,
            low_point: UNVISITED,
            parent_edge: NO_EDGE,
        }
    }
}

const UNVISITED: i32 = -1;

/// Overlay variant: one `i32` per node (`-1` unvisited, `-(k + 2)` for the
/// `k`-th visited node while it is on the DFS path, its preorder index once
/// finished); the lowpoint travels in the frame and returns to the parent.
/// Encoded values compare inversely to visit order.
#[derive(Debug)]
pub struct BccTunedHooks {
    label: Vec<i32>,
    edges: BoundedStack<u32>,
    edge_comp: Vec<u32>,
    dfs_count: i32,
    bcc_count: u32,
}

impl BccTunedHooks {
    pub fn new(n: usize, m: usize) -> Self {
        Self {
            label: vec![UNVISITED; n],
            edges: BoundedStack::new(m),
            edge_comp: vec![UNSET; m],
            dfs_count: UNVISITED,
            bcc_count: 0,
        }
    }

    pub fn into_labeling(self) -> BccLabeling {
        debug_assert!(self.edges.is_empty());
        BccLabeling::new(self.edge_comp, self.bcc_count as usize)
    }
}

impl DfsHooks<StaticUndirectedGraph> for BccTunedHooks {
    type Frame = BccFrame;

    #[inline]
    fn is_unvisited(&self, v: NodeId) -> bool {
        self.label[v as usize] == UNVISITED
    }

    #[inline]
    fn tree_edge(&mut self, v: NodeId, entered_by: Option<UndirectedArc>) -> BccFrame {
        self.dfs_count -= 1;
        let dfs_num = self.dfs_count;
        self.label[v as usize] = dfs_num;
        let parent_edge = match entered_by {
            Some(arc) => {
                self.edges.push(arc.edge);
                arc.edge
            }
            None => NO_EDGE,
        };
        BccFrame {
            dfs_num,
            low_point: dfs_num,
            parent_edge,
        }
    }

    #[inline]
    fn non_tree_edge(&mut self, frame: &mut BccFrame, u: NodeId, arc: UndirectedArc) {
        if arc.edge == frame.parent_edge {
            frame.parent_edge = NO_EDGE;
            return;
        }
        let d = self.label[arc.target as usize];
        // finished nodes are descendants that already pushed this edge
        if d >= 0 {
            return;
        }
        if arc.target == u {
            label_self_loop(&mut self.edge_comp, arc.edge, &mut self.bcc_count);
            return;
        }
        // any other node still on the path is an ancestor
        self.edges.push(arc.edge);
        if d > frame.low_point {
            frame.low_point = d;
        }
    }

    #[inline]
    fn finish_tree_edge(
        &mut self,
        frame: &mut BccFrame,
        child: BccFrame,
        _: NodeId,
        arc: UndirectedArc,
    ) {
        if child.low_point <= frame.dfs_num {
            close_component(
                &mut self.edges,
                &mut self.edge_comp,
                arc.edge,
                self.bcc_count,
            );
            self.bcc_count += 1;
        }
        if child.low_point > frame.low_point {
            frame.low_point = child.low_point;
        }
    }

    #[inline]
    fn finish_node(&mut self, frame: &mut BccFrame, v: NodeId) {
        self.label[v as usize] = -2 - frame.dfs_num;
    }
}

pub fn bcc_baseline(g: &StaticUndirectedGraph, engine: EngineKind) -> BccLabeling {
    let mut hooks = BccBaselineHooks::new(g.node_count(), g.edge_count());
    dfs_all(g, &mut hooks, engine);
    hooks.into_labeling()
}

pub fn bcc_tuned(g: &StaticUndirectedGraph, engine: EngineKind) -> BccLabeling {
    let mut hooks = BccTunedHooks::new(g.node_count(), g.edge_count());
    dfs_all(g, &mut hooks, engine);
    hooks.into_labeling()
}

/// Nodes incident to edges of at least two distinct components.
pub fn articulation_points(g: &StaticUndirectedGraph, lab: &BccLabeling) -> BTreeSet<NodeId> {
    (0..g.node_count() as NodeId)
        .filter(|&v| {
            let mut ids = g.arc_edge_ids()[g.arc_range(v)]
                .iter()
                .map(|&e| lab.edge_comp[e as usize]);
            match ids.next() {
                Some(first) => ids.any(|c| c != first),
                None => false,
            }
        })
        .collect()
}

/// Algorithm selector for the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BccAlgorithm {
    Baseline,
    Tuned,
}

impl BccAlgorithm {
    pub fn run(self, g: &StaticUndirectedGraph, engine: EngineKind) -> BccLabeling {
        match self {
            BccAlgorithm::Baseline => bcc_baseline(g, engine),
            BccAlgorithm::Tuned => bcc_tuned(g, engine),
        }
    }
}
