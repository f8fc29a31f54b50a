//! Enumeration of tight paths in positively weighted digraphs and tight
//! pairs in acyclic vertex-weighted graphs.
//!
//! A path is *tight* at threshold `gamma` when its cost is at most `gamma`
//! while every one-edge extension at either end exceeds it. Four routes are
//! provided:
//!
//! * [`tightpath`]: tree-bookkept edge traversal for arbitrary digraphs,
//!   cycles included.
//! * [`tighten`]: three-phase correspondence tightening over the
//!   reachability order of a vertex-weighted dag.
//! * [`tightpair`]: depth-first search over a vertex-weighted dag, either
//!   carrying distances on the stack or recomputing them from weights.
//! * [`oracle`]: brute-force definitional enumeration used as ground truth.
//!
//! [`closure`] mines closed item sets from a transactional dataset and
//! extracts basic antecedents, both directly on integer supports and through
//! the log-scaled tight-pair reduction.

pub mod bench;
pub mod budget;
pub mod closure;
pub mod error;
pub mod graph;
pub mod oracle;
pub mod synth;
pub mod tighten;
pub mod tightpair;
pub mod tightpath;
pub mod verify;

pub use budget::Budget;
pub use error::{Error, Result};
pub use graph::{Path, VertexId, VertexWeightedDag, WeightedDigraph};
pub use tighten::{Correspondence, Poset};
pub use tightpair::{PairAlgorithm, TightPairSet};
pub use tightpath::{PathTree, TightPathSet};
