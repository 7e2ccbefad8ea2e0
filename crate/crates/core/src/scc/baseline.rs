//! Textbook instantiations of the DFS template, one array per node property.

use super::SccLabeling;
use crate::dfs::{dfs_all, BoundedStack, DfsHooks, EngineKind};
use crate::graph::{NodeId, StaticDigraph};

/// Tarjan's algorithm with a node-valued lowpoint array.
#[derive(Debug)]
pub struct TarjanBaselineHooks {
    visited: Vec<bool>,
    dfs_num: Vec<u32>,
    low_point: Vec<NodeId>,
    is_open: Vec<bool>,
    open: BoundedStack<NodeId>,
    comp_num: Vec<u32>,
    dfs_count: u32,
    scc_count: u32,
}

impl TarjanBaselineHooks {
    pub fn new(n: usize) -> Self {
        Self {
            visited: vec![false; n],
            dfs_num: vec![0; n],
            low_point: vec![0; n],
            is_open: vec![false; n],
            open: BoundedStack::new(n),
            comp_num: vec![0; n],
            dfs_count: 0,
            scc_count: 0,
        }
    }

    pub fn into_labeling(self) -> SccLabeling {
        SccLabeling::new(self.comp_num, self.scc_count as usize)
    }

    #[inline]
    fn precedes(&self, u: NodeId, v: NodeId) -> bool {
        self.dfs_num[u as usize] < self.dfs_num[v as usize]
    }
}

impl DfsHooks<StaticDigraph> for TarjanBaselineHooks {
    type Frame = ();

    #[inline]
    fn is_unvisited(&self, v: NodeId) -> bool {
        !self.visited[v as usize]
    }

    fn init(&mut self) {
        self.scc_count = 0;
        self.open.clear();
    }

    #[inline]
    fn tree_edge(&mut self, v: NodeId, _: Option<NodeId>) {
        let i = v as usize;
        self.visited[i] = true;
        self.dfs_num[i] = self.dfs_count;
        self.dfs_count += 1;
        self.low_point[i] = v;
        self.open.push(v);
        self.is_open[i] = true;
    }

    #[inline]
    fn non_tree_edge(&mut self, _: &mut (), u: NodeId, v: NodeId) {
        if self.is_open[v as usize] && self.precedes(v, self.low_point[u as usize]) {
            self.low_point[u as usize] = v;
        }
    }

    #[inline]
    fn finish_tree_edge(&mut self, _: &mut (), _: (), u: NodeId, v: NodeId) {
        let (lu, lv) = (self.low_point[u as usize], self.low_point[v as usize]);
        if self.precedes(lv, lu) {
            self.low_point[u as usize] = lv;
        }
    }

    #[inline]
    fn finish_node(&mut self, _: &mut (), v: NodeId) {
        if self.low_point[v as usize] == v {
            loop {
                let u = self.open.pop();
                self.comp_num[u as usize] = self.scc_count;
                self.is_open[u as usize] = false;
                if u == v {
                    break;
                }
            }
            self.scc_count += 1;
        }
    }
}

/// Path-based (CMG) algorithm with node-valued `roots` and `open` stacks.
#[derive(Debug)]
pub struct CmgBaselineHooks {
    visited: Vec<bool>,
    dfs_num: Vec<u32>,
    is_open: Vec<bool>,
    roots: BoundedStack<NodeId>,
    open: BoundedStack<NodeId>,
    comp_num: Vec<u32>,
    dfs_count: u32,
    scc_count: u32,
}

impl CmgBaselineHooks {
    pub fn new(n: usize) -> Self {
        Self {
            visited: vec![false; n],
            dfs_num: vec![0; n],
            is_open: vec![false; n],
            roots: BoundedStack::new(n),
            open: BoundedStack::new(n),
            comp_num: vec![0; n],
            dfs_count: 0,
            scc_count: 0,
        }
    }

    pub fn into_labeling(self) -> SccLabeling {
        SccLabeling::new(self.comp_num, self.scc_count as usize)
    }
}

impl DfsHooks<StaticDigraph> for CmgBaselineHooks {
    type Frame = ();

    #[inline]
    fn is_unvisited(&self, v: NodeId) -> bool {
        !self.visited[v as usize]
    }

    fn init(&mut self) {
        self.scc_count = 0;
        self.roots.clear();
        self.open.clear();
    }

    #[inline]
    fn tree_edge(&mut self, v: NodeId, _: Option<NodeId>) {
        let i = v as usize;
        self.visited[i] = true;
        self.dfs_num[i] = self.dfs_count;
        self.dfs_count += 1;
        self.roots.push(v);
        self.open.push(v);
        self.is_open[i] = true;
    }

    #[inline]
    fn non_tree_edge(&mut self, _: &mut (), _: NodeId, v: NodeId) {
        if self.is_open[v as usize] {
            let d = self.dfs_num[v as usize];
            while d < self.dfs_num[self.roots.top() as usize] {
                self.roots.pop();
            }
        }
    }

    #[inline]
    fn finish_tree_edge(&mut self, _: &mut (), _: (), _: NodeId, _: NodeId) {}

    #[inline]
    fn finish_node(&mut self, _: &mut (), v: NodeId) {
        if self.roots.top() == v {
            self.roots.pop();
            loop {
                let u = self.open.pop();
                self.comp_num[u as usize] = self.scc_count;
                self.is_open[u as usize] = false;
                if u == v {
                    break;
                }
            }
            self.scc_count += 1;
        }
    }
}

pub fn scc_tarjan_baseline(g: &StaticDigraph, engine: EngineKind) -> SccLabeling {
    let mut hooks = TarjanBaselineHooks::new(g.node_count());
    dfs_all(g, &mut hooks, engine);
    hooks.into_labeling()
}

pub fn scc_cmg_baseline(g: &StaticDigraph, engine: EngineKind) -> SccLabeling {
    let mut hooks = CmgBaselineHooks::new(g.node_count());
    dfs_all(g, &mut hooks, engine);
    hooks.into_labeling()
}
