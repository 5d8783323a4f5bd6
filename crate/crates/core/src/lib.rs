//! Graph algorithms on partially complemented adjacency lists (pc-lists).
//!
//! A pc-list stores each vertex's neighbor list or, when the vertex is
//! switched, its non-neighbor list. Traversal, contraction, all-pairs
//! reachability and matching then run in time proportional to the number of
//! stored elements `m_tilde` rather than the arc count `m`. Every routine
//! charges its unit steps to a [`WorkLedger`] so those bounds can be tested.

pub mod bipartite;
pub mod bench;
pub mod bits;
pub mod contraction;
pub mod error;
pub mod gen;
pub mod general;
pub mod graph;
pub mod io;
pub mod ledger;
pub mod lists;
pub mod matching;
pub mod oracles;
pub mod pclist;
pub mod reachability;
pub mod traversal;

pub use error::{Error, Result};
pub use graph::{complement, degree_stats, Graph, VertexId};
pub use ledger::{Charge, WorkLedger};
pub use pclist::{Mode, PCList};
pub use traversal::{connected_components, pclist_bfs, pclist_dfs, TraversalResult};
