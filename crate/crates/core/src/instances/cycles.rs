use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{spec_err, InstanceError};
use crate::graph::{GraphView, MatrixGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycleVariant {
    One,
    Two { len_a: usize, len_b: usize },
}

/// A uniformly relabeled union of one or two cycles on `n` vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CycleSpec {
    pub n: usize,
    pub variant: CycleVariant,
    pub seed: u64,
}

/// Allowed cycle lengths of the two-cycle family: `[ceil(n/3), floor(2n/3)]`,
/// and at least 3 so both cycles are simple.
pub(crate) fn split_range(n: usize) -> (usize, usize) {
    (n.div_ceil(3).max(3), (2 * n / 3).min(n.saturating_sub(3)))
}

impl CycleSpec {
    pub fn one(n: usize, seed: u64) -> Self {
        Self {
            n,
            variant: CycleVariant::One,
            seed,
        }
    }

    /// Two-cycle spec with the length split drawn uniformly from the valid
    /// splits, derived from `seed`.
    pub fn two_random(n: usize, seed: u64) -> Result<Self, InstanceError> {
        let (lo, hi) = split_range(n);
        if n < 6 || lo > hi {
            return Err(spec_err(format!("no valid two-cycle split for n={n}")));
        }
        // separate stream from the one used for the labeling
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x9e37_79b9_7f4a_7c15);
        let len_a = rng.gen_range(lo..=hi);
        Ok(Self {
            n,
            variant: CycleVariant::Two {
                len_a,
                len_b: n - len_a,
            },
            seed,
        })
    }
}

/// Symmetric adjacency matrix of the cycle structure in `spec` under a
/// uniformly random labeling.
pub fn gen_cycle_instance(spec: &CycleSpec) -> Result<MatrixGraph, InstanceError> {
    let n = spec.n;
    let lengths = match spec.variant {
        CycleVariant::One => {
            if n < 3 {
                return Err(spec_err(format!("a simple cycle needs n >= 3, got {n}")));
            }
            vec![n]
        }
        CycleVariant::Two { len_a, len_b } => {
            let (lo, hi) = split_range(n);
            if len_a + len_b != n {
                return Err(spec_err(format!("split {len_a}+{len_b} != {n}")));
            }
            if !(lo..=hi).contains(&len_a) || !(lo..=hi).contains(&len_b) {
                return Err(spec_err(format!(
                    "split ({len_a},{len_b}) outside [{lo},{hi}] for n={n}"
                )));
            }
            vec![len_a, len_b]
        }
    };
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(&mut ChaCha8Rng::seed_from_u64(spec.seed));
    let mut edges = Vec::with_capacity(n);
    let mut offset = 0;
    for len in lengths {
        let cyc = &labels[offset..offset + len];
        edges.extend((0..len).map(|i| (cyc[i], cyc[(i + 1) % len])));
        offset += len;
    }
    Ok(MatrixGraph::from_edges(n, false, edges)?)
}

/// Lengths (ascending) of the cycles of an undirected 2-regular graph.
pub fn cycle_lengths(g: &MatrixGraph) -> Result<Vec<usize>, InstanceError> {
    if g.is_directed() {
        return Err(spec_err("cycle structure needs an undirected graph"));
    }
    let adj = g.adjacency();
    if let Some(v) = adj.iter().position(|a| a.len() != 2) {
        return Err(spec_err(format!("vertex {v} has degree {}", adj[v].len())));
    }
    let mut seen = vec![false; g.n()];
    let mut lengths = Vec::new();
    for start in 0..g.n() {
        if seen[start] {
            continue;
        }
        let (mut prev, mut cur, mut len) = (usize::MAX, start, 0);
        while !seen[cur] {
            seen[cur] = true;
            len += 1;
            let next = if adj[cur][0] != prev { adj[cur][0] } else { adj[cur][1] };
            prev = cur;
            cur = next;
        }
        lengths.push(len);
    }
    lengths.sort_unstable();
    Ok(lengths)
}

/// Replace edges `(a,b)` and `(c,d)` by `(a,c)` and `(b,d)`.
///
/// Requires four distinct vertices, both old edges present and both new
/// edges absent. On a single cycle traversed `a, b, ..., d, c, ...` the
/// result is two cycles, one through `b..d` and one through `c..a`;
/// traversed `a, b, ..., c, d, ...` it stays a single cycle.
pub fn two_swap(
    g: &MatrixGraph,
    a: usize,
    b: usize,
    c: usize,
    d: usize,
) -> Result<MatrixGraph, InstanceError> {
    let pre = |msg: String| InstanceError::SwapPrecondition(msg);
    if g.is_directed() {
        return Err(pre("graph must be undirected".into()));
    }
    let quad = [a, b, c, d];
    if let Some(&v) = quad.iter().find(|&&v| v >= g.n()) {
        return Err(pre(format!("vertex {v} out of range")));
    }
    for i in 0..4 {
        for j in (i + 1)..4 {
            if quad[i] == quad[j] {
                return Err(pre(format!("vertices {quad:?} are not distinct")));
            }
        }
    }
    for (x, y, want) in [(a, b, true), (c, d, true), (a, c, false), (b, d, false)] {
        if g.cell(x, y) != want {
            let state = if want { "missing" } else { "already present" };
            return Err(pre(format!("edge ({x},{y}) {state}")));
        }
    }
    Ok(g.clone()
        .with_cell(a, b, false)
        .with_cell(c, d, false)
        .with_cell(a, c, true)
        .with_cell(b, d, true))
}
