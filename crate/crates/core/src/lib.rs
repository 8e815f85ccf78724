//! Core-periphery analysis of peer-to-peer overlay graphs.
//!
//! The crate works on simple undirected graphs ([`Graph`]) read from edge
//! lists and offers:
//!
//! - [`kcore`]: linear-time k-core decomposition and the core/periphery split;
//! - [`correlation`]: mean neighbor degree `K_nn(k)`, degree assortativity,
//!   degree CCDF;
//! - [`superpeer`]: top-degree super-peers, their coverage and neighbor
//!   overlap, per-node super-peer degree, removal robustness;
//! - [`netgen`]: a seeded generator of hub-dominated topologies with planted
//!   super-peers, plus a one-call measurement for calibration;
//! - [`render`] and [`report`]: SVG figures and JSON/CSV reports.
//!
//! ```
//! use p2ptopo::{edgelist::parse_edge_list, kcore::core_numbers};
//!
//! let g = parse_edge_list("a b\nb c\nc a\nc d\n").unwrap().graph;
//! let cores = core_numbers(&g);
//! assert_eq!(cores.k_max, 2);
//! assert_eq!(cores.core_number, vec![2, 2, 2, 1]);
//! ```

pub mod cli;
pub mod correlation;
pub mod edgelist;
pub mod error;
pub mod graph;
pub mod kcore;
pub mod netgen;
pub mod render;
pub mod report;
pub mod stats;
pub mod superpeer;

pub use error::{Error, Result};
pub use graph::{ComponentPartition, EdgeRepairs, Graph, IdMap};
