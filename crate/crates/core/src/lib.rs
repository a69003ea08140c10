//! Bootstrap percolation on undirected graphs.
//!
//! An inactive vertex activates, irrevocably, once at least `r` of its
//! neighbors are active; a seed set whose activation reaches every
//! vertex is contagious. This crate provides the simulation engine,
//! deterministic generators for the graph families where the dense-graph
//! results are tight, constructive seed builders for minimum-degree and
//! Ore graphs, exact brute-force oracles for minimum contagious sets,
//! and a checker per theorem with machine-readable verdicts.

pub mod bitset;
pub mod cli;
pub mod combin;
pub mod constructive;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod percolation;
pub mod rng;
pub mod verify;

pub use bitset::VertexSet;
pub use error::{Error, Result};
pub use graph::{DcPartition, Graph};
pub use percolation::{percolate, percolation_step, percolation_time, PercolationTrace};
