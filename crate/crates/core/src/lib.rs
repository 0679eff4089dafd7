//! Query-model laboratory for quantum graph connectivity.
//!
//! The crate simulates Grover-style searches exactly (sampling from the
//! closed-form rotation dynamics), runs the spanning-tree based connectivity
//! and strong-connectivity algorithms on top of them while counting every
//! oracle probe, generates the lower-bound instance families, and computes
//! unweighted adversary bounds on small relations by enumeration.

pub mod adversary;
pub mod graph;
pub mod harness;
pub mod grover;
pub mod instances;
pub mod ledger;
pub mod qconn;

pub use graph::{DfsResult, Graph, GraphView, ListGraph, MatrixGraph};
pub use ledger::QueryLedger;
