//! Fixtures shared by the criterion benches under `benches/`.

use gqlab_core::harness::{generate_instance, Family};
use gqlab_core::{ListGraph, MatrixGraph};

pub fn one_cycle(n: usize, seed: u64) -> MatrixGraph {
    match generate_instance(Family::OneCycle, n, 0, 0.0, seed).expect("valid cycle size") {
        gqlab_core::Graph::Matrix(g) => g,
        gqlab_core::Graph::List(_) => unreachable!(),
    }
}

/// Positive origin gadget with `p` levels and out-degree `k`.
pub fn gadget(p: usize, k: usize, seed: u64) -> ListGraph {
    match generate_instance(Family::OriginGadgetPositive, p, k, 0.0, seed).expect("valid gadget size") {
        gqlab_core::Graph::List(g) => g,
        gqlab_core::Graph::Matrix(_) => unreachable!(),
    }
}
