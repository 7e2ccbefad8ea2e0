//! Overlaid-label variants.
//!
//! A single `i32` per node carries the whole state. `-1` means unvisited,
//! other negative values mark an open node and encode its DFS number, and a
//! nonnegative value is the component id of a closed node. Both encodings
//! below keep open values away from `-1`:
//!
//! * CMG counts down from `-2`, so `u` precedes `v` iff `label[u] > label[v]`.
//! * Tarjan counts up from `-(n + 1)`, so `u` precedes `v` iff
//!   `label[u] < label[v]`, and closed labels never win a minimum.

use super::SccLabeling;
use crate::dfs::{dfs_all, BoundedStack, DfsHooks, EngineKind};
use crate::graph::{NodeId, StaticDigraph};

const UNVISITED: i32 = -1;

fn into_labeling(label: Vec<i32>, scc_count: i32) -> SccLabeling {
    debug_assert!(label.iter().all(|&l| l >= 0));
    let comp_num = label.into_iter().map(|l| l as u32).collect();
    SccLabeling::new(comp_num, scc_count as usize)
}

#[derive(Debug)]
pub struct CmgTunedHooks {
    label: Vec<i32>,
    roots: BoundedStack<i32>,
    open: BoundedStack<NodeId>,
    dfs_count: i32,
    scc_count: i32,
}

impl CmgTunedHooks {
    pub fn new(n: usize) -> Self {
        Self {
            label: vec![UNVISITED; n],
            roots: BoundedStack::new(n),
            open: BoundedStack::new(n),
            dfs_count: -1,
            scc_count: 0,
        }
    }

    pub fn into_labeling(self) -> SccLabeling {
        into_labeling(self.label, self.scc_count)
    }
}

impl DfsHooks<StaticDigraph> for CmgTunedHooks {
    /// Encoded DFS number of the node being visited.
    type Frame = i32;

    #[inline]
    fn is_unvisited(&self, v: NodeId) -> bool {
        self.label[v as usize] == UNVISITED
    }

    #[inline]
    fn tree_edge(&mut self, v: NodeId, _: Option<NodeId>) -> i32 {
        debug_assert_eq!(self.label[v as usize], UNVISITED);
        self.dfs_count -= 1;
        let dfs_num = self.dfs_count;
        self.label[v as usize] = dfs_num;
        self.roots.push(dfs_num);
        self.open.push(v);
        dfs_num
    }

    #[inline]
    fn non_tree_edge(&mut self, _: &mut i32, _: NodeId, w: NodeId) {
        let d = self.label[w as usize];
        if d >= 0 {
            return;
        }
        while self.roots.top() < d {
            self.roots.pop();
        }
    }

    #[inline]
    fn finish_tree_edge(&mut self, _: &mut i32, _: i32, _: NodeId, _: NodeId) {}

    #[inline]
    fn finish_node(&mut self, dfs_num: &mut i32, v: NodeId) {
        if self.roots.top() == *dfs_num {
            loop {
                let u = self.open.pop();
                debug_assert!(self.label[u as usize] < UNVISITED);
                self.label[u as usize] = self.scc_count;
                if u == v {
                    break;
                }
            }
            self.roots.pop();
            self.scc_count += 1;
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct TarjanFrame {
    dfs_num: i32,
    low_point: i32,
}

#[derive(Debug)]
pub struct TarjanTunedHooks {
    label: Vec<i32>,
    open: BoundedStack<NodeId>,
    dfs_count: i32,
    scc_count: i32,
}

impl TarjanTunedHooks {
    pub fn new(n: usize) -> Self {
        Self {
            label: vec![UNVISITED; n],
            open: BoundedStack::new(n),
            dfs_count: -(n as i32 + 1),
            scc_count: 0,
        }
    }

    pub fn into_labeling(self) -> SccLabeling {
        into_labeling(self.label, self.scc_count)
    }
}

impl DfsHooks<StaticDigraph> for TarjanTunedHooks {
    type Frame = TarjanFrame;

    #[inline]
    fn is_unvisited(&self, v: NodeId) -> bool {
        self.label[v as usize] == UNVISITED
    }

    #[inline]
    fn tree_edge(&mut self, v: NodeId, _: Option<NodeId>) -> TarjanFrame {
        debug_assert_eq!(self.label[v as usize], UNVISITED);
        let dfs_num = self.dfs_count;
        self.dfs_count += 1;
        self.label[v as usize] = dfs_num;
        self.open.push(v);
        TarjanFrame {
            dfs_num,
            low_point: dfs_num,
        }
    }

    #[inline]
    fn non_tree_edge(&mut self, frame: &mut TarjanFrame, _: NodeId, w: NodeId) {
        let d = self.label[w as usize];
        if d < frame.low_point {
            frame.low_point = d;
        }
    }

    #[inline]
    fn finish_tree_edge(
        &mut self,
        frame: &mut TarjanFrame,
        child: TarjanFrame,
        _: NodeId,
        _: NodeId,
    ) {
        if child.low_point < frame.low_point {
            frame.low_point = child.low_point;
        }
    }

    #[inline]
    fn finish_node(&mut self, frame: &mut TarjanFrame, v: NodeId) {
        if frame.dfs_num == frame.low_point {
            loop {
                let u = self.open.pop();
                debug_assert!(self.label[u as usize] < UNVISITED);
                self.label[u as usize] = self.scc_count;
                if u == v {
                    break;
                }
            }
            self.scc_count += 1;
        }
    }
}

pub fn scc_cmg_tuned(g: &StaticDigraph, engine: EngineKind) -> SccLabeling {
    let mut hooks = CmgTunedHooks::new(g.node_count());
    dfs_all(g, &mut hooks, engine);
    hooks.into_labeling()
}

pub fn scc_tarjan_tuned(g: &StaticDigraph, engine: EngineKind) -> SccLabeling {
    let mut hooks = TarjanTunedHooks::new(g.node_count());
    dfs_all(g, &mut hooks, engine);
    hooks.into_labeling()
}

/// Marks nodes visited and nothing else.
#[derive(Debug)]
pub struct ScanHooks {
    label: Vec<i32>,
    visited: usize,
}

impl ScanHooks {
    pub fn new(n: usize) -> Self {
        Self {
            label: vec![UNVISITED; n],
            visited: 0,
        }
    }
}

impl DfsHooks<StaticDigraph> for ScanHooks {
    type Frame = ();

    #[inline]
    fn is_unvisited(&self, v: NodeId) -> bool {
        self.label[v as usize] == UNVISITED
    }

    #[inline]
    fn tree_edge(&mut self, v: NodeId, _: Option<NodeId>) {
        self.label[v as usize] = 0;
        self.visited += 1;
    }

    #[inline]
    fn non_tree_edge(&mut self, _: &mut (), _: NodeId, _: NodeId) {}

    #[inline]
    fn finish_tree_edge(&mut self, _: &mut (), _: (), _: NodeId, _: NodeId) {}

    #[inline]
    fn finish_node(&mut self, _: &mut (), _: NodeId) {}
}

/// A full traversal with the tuned machinery (overlay labels, shared arc
/// stack, iterative engine) that does no other work. Returns the number of
/// nodes visited, i.e. `n`.
pub fn dfs_scan(g: &StaticDigraph) -> usize {
    let mut hooks = ScanHooks::new(g.node_count());
    dfs_all(g, &mut hooks, EngineKind::Iterative);
    hooks.visited
}
