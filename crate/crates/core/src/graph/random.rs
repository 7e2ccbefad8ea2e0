//! Seeded uniform random graphs.
//!
//! The generator is SplitMix64 (64-bit state) seeded directly with the seed
//! value. For each edge the source is drawn first, then the target, each with
//! `Rng::gen_range(0..n)` from rand 0.8. Equal `(n, m, seed)` give equal edge
//! lists on every platform.

use rand::{Rng, SeedableRng};
pub use rand_xoshiro::SplitMix64;

use super::{check_size, EdgeList, NodeId};
use crate::error::{Error, Result};

/// `m` directed edges with independent uniform endpoints in `[0, n)`.
pub fn random_digraph(n: usize, m: usize, seed: u64) -> Result<EdgeList> {
    check_size(n, m)?;
    if n == 0 {
        if m > 0 {
            return Err(Error::NoNodes { m: m as u64 });
        }
        return Ok(EdgeList::new(0, Vec::new()));
    }
    let mut rng = SplitMix64::seed_from_u64(seed);
    let bound = n as NodeId;
    let mut edges = Vec::new();
    edges.try_reserve_exact(m).map_err(|_| Error::TooLarge {
        what: "edge list bytes",
        value: (m * std::mem::size_of::<(NodeId, NodeId)>()) as u64,
        limit: isize::MAX as u64,
    })?;
    for _ in 0..m {
        let u = rng.gen_range(0..bound);
        let v = rng.gen_range(0..bound);
        edges.push((u, v));
    }
    Ok(EdgeList::new(n, edges))
}

/// Same model as [`random_digraph`]; each pair is read as an undirected edge.
pub fn random_undirected(n: usize, m: usize, seed: u64) -> Result<EdgeList> {
    random_digraph(n, m, seed)
}
