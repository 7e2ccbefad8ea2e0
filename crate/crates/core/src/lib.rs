//! Depth-first search engineered for the memory hierarchy.
//!
//! The crate provides a static adjacency-array graph ([`graph`]), a generic
//! depth-first search driver with interchangeable execution engines
//! ([`dfs`]), strongly connected components in textbook and cache-tuned
//! variants ([`scc`]), biconnected components in the same two flavours
//! ([`bcc`]), brute-force ground truth for small graphs ([`oracle`]), corpus
//! verification sweeps ([`corpus`]) and a timing harness ([`bench`]).

pub mod bcc;
pub mod bench;
pub mod cli;
pub mod corpus;
pub mod dfs;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod scc;

pub use error::{Error, Result};
pub use graph::{EdgeList, NodeId, StaticDigraph, StaticUndirectedGraph};
