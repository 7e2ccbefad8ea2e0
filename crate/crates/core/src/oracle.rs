//! Brute-force ground truth for small graphs.
//!
//! Nothing here performs a depth-first search. SCCs come from a transitive
//! closure computed by repeated relaxation over bit rows; biconnected
//! components come from enumerating every simple cycle through every edge.

use crate::bcc::BccLabeling;
use crate::error::{Error, Result};
use crate::graph::{StaticDigraph, StaticUndirectedGraph};
use crate::scc::SccLabeling;

pub const MAX_SCC_ORACLE_NODES: usize = 256;
pub const MAX_BCC_ORACLE_NODES: usize = 10;
pub const MAX_BCC_ORACLE_EDGES: usize = 20;

const WORDS: usize = MAX_SCC_ORACLE_NODES / 64;

/// `reach[u][v]` iff a directed path (possibly empty) leads from `u` to `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReachabilityMatrix {
    n: usize,
    rows: Vec<[u64; WORDS]>,
}

impl ReachabilityMatrix {
    pub fn node_count(&self) -> usize {
        self.n
    }

    pub fn reaches(&self, u: usize, v: usize) -> bool {
        self.rows[u][v / 64] >> (v % 64) & 1 == 1
    }

    /// One Floyd-Warshall style sweep: for every pivot `k`, every row that
    /// reaches `k` absorbs row `k`. Returns whether anything changed.
    fn relax(&mut self) -> bool {
        let mut changed = false;
        for k in 0..self.n {
            let pivot = self.rows[k];
            for u in 0..self.n {
                if self.reaches(u, k) {
                    for (word, p) in self.rows[u].iter_mut().zip(pivot) {
                        let merged = *word | p;
                        changed |= merged != *word;
                        *word = merged;
                    }
                }
            }
        }
        changed
    }

    /// Whether one more relaxation sweep would leave the matrix unchanged.
    pub fn is_closed(&self) -> bool {
        !self.clone().relax()
    }
}

fn check_limit(what: &'static str, value: usize, limit: usize) -> Result<()> {
    if value > limit {
        return Err(Error::OracleLimit { what, value, limit });
    }
    Ok(())
}

pub fn reachability_closure(g: &StaticDigraph) -> Result<ReachabilityMatrix> {
    let n = g.node_count();
    check_limit("n", n, MAX_SCC_ORACLE_NODES)?;
    let mut m = ReachabilityMatrix {
        n,
        rows: vec![[0; WORDS]; n],
    };
    for v in 0..n {
        m.rows[v][v / 64] |= 1 << (v % 64);
    }
    for (u, v) in g.edges() {
        let (u, v) = (u as usize, v as usize);
        m.rows[u][v / 64] |= 1 << (v % 64);
    }
    // a single Warshall sweep already closes the relation; the loop guards
    // against that reasoning being wrong
    while m.relax() {}
    Ok(m)
}

/// Components of mutual reachability, numbered by first occurrence.
pub fn scc_oracle(g: &StaticDigraph) -> Result<SccLabeling> {
    let reach = reachability_closure(g)?;
    let n = reach.node_count();
    let mut comp = vec![u32::MAX; n];
    let mut count = 0;
    for u in 0..n {
        if comp[u] != u32::MAX {
            continue;
        }
        for (v, c) in comp.iter_mut().enumerate().skip(u) {
            if reach.reaches(u, v) && reach.reaches(v, u) {
                *c = count;
            }
        }
        count += 1;
    }
    Ok(SccLabeling::new(comp, count as usize))
}

/// Edge classes of the relation "equal, or on a common simple cycle".
pub fn bcc_oracle(g: &StaticUndirectedGraph) -> Result<BccLabeling> {
    let n = g.node_count();
    let m = g.edge_count();
    check_limit("n", n, MAX_BCC_ORACLE_NODES)?;
    check_limit("m", m, MAX_BCC_ORACLE_EDGES)?;

    let el = g.to_edge_list();
    let mut incident: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (e, &(u, v)) in el.edges.iter().enumerate() {
        incident[u as usize].push((v as usize, e));
        if u != v {
            incident[v as usize].push((u as usize, e));
        }
    }

    // together[e] is a bitmask of the edges sharing a simple cycle with e
    let mut together = vec![0u32; m];
    for (e, &(a, b)) in el.edges.iter().enumerate() {
        together[e] |= 1 << e;
        if a == b {
            // a self-loop is a cycle on its own and lies on no other simple cycle
            continue;
        }
        // every simple b -> a path avoiding e closes a simple cycle with e
        let mut on_path = vec![false; n];
        on_path[b as usize] = true;
        let mut cycles = 0u32;
        simple_paths(
            &incident,
            b as usize,
            a as usize,
            e,
            1 << e,
            &mut on_path,
            &mut |mask| cycles |= mask,
        );
        together[e] |= cycles;
    }

    // symmetry and transitivity must come out of the enumeration unaided
    for e in 0..m {
        for f in 0..m {
            if together[e] >> f & 1 == 1 {
                assert!(together[f] >> e & 1 == 1, "cycle relation not symmetric");
                assert_eq!(together[e], together[f], "cycle relation not transitive");
            }
        }
    }

    let mut edge_comp = vec![u32::MAX; m];
    let mut count = 0u32;
    for e in 0..m {
        if edge_comp[e] == u32::MAX {
            for (f, slot) in edge_comp.iter_mut().enumerate() {
                if together[e] >> f & 1 == 1 {
                    *slot = count;
                }
            }
            count += 1;
        }
    }
    Ok(BccLabeling::new(edge_comp, count as usize))
}

/// Calls `emit(mask)` for each simple path from `at` to `goal` that does not
/// use edge `skip`, with `mask` holding the path's edges plus `used`.
fn simple_paths(
    incident: &[Vec<(usize, usize)>],
    at: usize,
    goal: usize,
    skip: usize,
    used: u32,
    on_path: &mut [bool],
    emit: &mut impl FnMut(u32),
) {
    if at == goal {
        emit(used);
        return;
    }
    for &(next, f) in &incident[at] {
        if f == skip || on_path[next] {
            continue;
        }
        on_path[next] = true;
        simple_paths(incident, next, goal, skip, used | 1 << f, on_path, emit);
        on_path[next] = false;
    }
}
