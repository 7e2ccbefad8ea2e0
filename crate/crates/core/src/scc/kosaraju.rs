//! Kosaraju-Sharir with the overlay and arc-stack treatments.
//!
//! Pass one records the finishing order on a stack; pass two runs over the
//! reverse graph, taking roots from the top of that stack. One `i32` label
//! per node serves both passes: `-1` before pass one, `-2` after it, the
//! component id after pass two.

use super::SccLabeling;
use crate::dfs::{dfs_all, traverse, BoundedStack, DfsHooks, EngineKind};
use crate::graph::{NodeId, StaticDigraph};

const UNVISITED: i32 = -1;
const FINISHED_FIRST_PASS: i32 = -2;

struct FinishOrder {
    label: Vec<i32>,
    order: BoundedStack<NodeId>,
}

impl DfsHooks<StaticDigraph> for FinishOrder {
    type Frame = ();

    #[inline]
    fn is_unvisited(&self, v: NodeId) -> bool {
        self.label[v as usize] == UNVISITED
    }

    #[inline]
    fn tree_edge(&mut self, v: NodeId, _: Option<NodeId>) {
        self.label[v as usize] = FINISHED_FIRST_PASS;
    }

    #[inline]
    fn non_tree_edge(&mut self, _: &mut (), _: NodeId, _: NodeId) {}

    #[inline]
    fn finish_tree_edge(&mut self, _: &mut (), _: (), _: NodeId, _: NodeId) {}

    #[inline]
    fn finish_node(&mut self, _: &mut (), v: NodeId) {
        self.order.push(v);
    }
}

struct LabelReverse {
    label: Vec<i32>,
    scc_count: i32,
}

impl DfsHooks<StaticDigraph> for LabelReverse {
    type Frame = ();

    #[inline]
    fn is_unvisited(&self, v: NodeId) -> bool {
        self.label[v as usize] == FINISHED_FIRST_PASS
    }

    #[inline]
    fn tree_edge(&mut self, v: NodeId, entered_by: Option<NodeId>) {
        if entered_by.is_none() {
            self.scc_count += 1;
        }
        self.label[v as usize] = self.scc_count - 1;
    }

    #[inline]
    fn non_tree_edge(&mut self, _: &mut (), _: NodeId, _: NodeId) {}

    #[inline]
    fn finish_tree_edge(&mut self, _: &mut (), _: (), _: NodeId, _: NodeId) {}

    #[inline]
    fn finish_node(&mut self, _: &mut (), _: NodeId) {}
}

/// Both passes, given a prebuilt reverse graph.
pub fn scc_kosaraju_sharir_with_reverse(
    g: &StaticDigraph,
    reverse: &StaticDigraph,
    engine: EngineKind,
) -> SccLabeling {
    let n = g.node_count();
    debug_assert_eq!(reverse.node_count(), n);
    let mut first = FinishOrder {
        label: vec![UNVISITED; n],
        order: BoundedStack::new(n),
    };
    dfs_all(g, &mut first, engine);

    let mut second = LabelReverse {
        label: first.label,
        scc_count: 0,
    };
    let roots = first.order.as_slice().iter().rev().copied();
    traverse(reverse, &mut second, engine, roots);

    let comp_num = second.label.into_iter().map(|l| l as u32).collect();
    SccLabeling::new(comp_num, second.scc_count as usize)
}

pub fn scc_kosaraju_sharir_with(g: &StaticDigraph, engine: EngineKind) -> SccLabeling {
    scc_kosaraju_sharir_with_reverse(g, &g.reverse(), engine)
}

/// Builds the reverse graph and runs both passes with the iterative engine.
pub fn scc_kosaraju_sharir(g: &StaticDigraph) -> SccLabeling {
    scc_kosaraju_sharir_with(g, EngineKind::Iterative)
}
