use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{spec_err, InstanceError};
use crate::graph::{ListGraph, MatrixGraph};

/// `G(n, p)`: every admissible cell (or unordered pair, when undirected) is
/// present independently with probability `edge_prob`.
pub fn gen_random_matrix(
    n: usize,
    edge_prob: f64,
    directed: bool,
    seed: u64,
) -> Result<MatrixGraph, InstanceError> {
    if !(0.0..=1.0).contains(&edge_prob) {
        return Err(spec_err(format!("edge probability {edge_prob} outside [0,1]")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        let from = if directed { 0 } else { i + 1 };
        for j in from..n {
            if i != j && rng.gen_bool(edge_prob) {
                edges.push((i, j));
            }
        }
    }
    Ok(MatrixGraph::from_edges(n, directed, edges)?)
}

/// Undirected graph with exactly `cells / 2` edges chosen uniformly, i.e.
/// exactly `cells` set matrix cells.
pub fn gen_random_gnm(n: usize, cells: usize, seed: u64) -> Result<MatrixGraph, InstanceError> {
    let pairs = n * n.saturating_sub(1) / 2;
    if !cells.is_multiple_of(2) || cells / 2 > pairs {
        return Err(spec_err(format!(
            "cannot place {cells} symmetric cells on n={n} (even count up to {})",
            2 * pairs
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let all: Vec<(usize, usize)> = (0..n).flat_map(|a| ((a + 1)..n).map(move |b| (a, b))).collect();
    let chosen = sample(&mut rng, pairs, cells / 2);
    Ok(MatrixGraph::from_edges(n, false, chosen.into_iter().map(|i| all[i]))?)
}

/// Out-degree-`k` list graph; each vertex gets `k` distinct neighbors other
/// than itself, uniformly.
pub fn gen_random_list(n: usize, k: usize, seed: u64) -> Result<ListGraph, InstanceError> {
    if k == 0 || k >= n {
        return Err(spec_err(format!("need 1 <= k < n, got n={n} k={k}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut nbr = Vec::with_capacity(n * k);
    for u in 0..n {
        // sample from the n-1 other vertices, then skip over u
        nbr.extend(
            sample(&mut rng, n - 1, k)
                .into_iter()
                .map(|v| if v >= u { v + 1 } else { v }),
        );
    }
    Ok(ListGraph::from_flat(n, k, nbr)?)
}
