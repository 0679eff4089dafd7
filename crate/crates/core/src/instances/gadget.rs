use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{spec_err, InstanceError};
use crate::graph::ListGraph;

/// Where each level puts its two forward edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SlotAssignment {
    /// `(j0, j1)` drawn uniformly from `[k]^2` per level.
    Random { seed: u64 },
    /// Explicit `(j0, j1)` per level.
    Fixed(Vec<(usize, usize)>),
}

/// An origin-gadget instance: parity bits `x`, out-degree `k >= 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetSpec {
    pub x: Vec<bool>,
    pub k: usize,
    pub slots: SlotAssignment,
}

impl GadgetSpec {
    pub fn random(x: Vec<bool>, k: usize, seed: u64) -> Self {
        Self {
            x,
            k,
            slots: SlotAssignment::Random { seed },
        }
    }

    pub fn resolved_slots(&self) -> Vec<(usize, usize)> {
        match &self.slots {
            SlotAssignment::Fixed(s) => s.clone(),
            SlotAssignment::Random { seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                (0..self.x.len())
                    .map(|_| (rng.gen_range(0..self.k), rng.gen_range(0..self.k)))
                    .collect()
            }
        }
    }
}

/// Build the gadget on vertices `v_0..v_{2p-1}` (indices `0..2p`) and the
/// clique `u_0..u_{k-1}` (indices `2p..2p+k`).
///
/// * clique: `f(u_i, 0) = v_0`, `f(u_i, j) = u_{(i+j) mod k}` for `j >= 1`;
/// * level `i` with bit `b` and slots `(j0, j1)`: forward edges
///   `f(v_{2i}, j0) = v_{2i+2+b}`, `f(v_{2i+1}, j1) = v_{2i+3-b}` (mod `2p`);
/// * every other slot `j` of a level vertex points back to `u_j`.
///
/// Everything reaches `v_0` through the clique, so the graph is strongly
/// connected iff `v_0` reaches `v_1`, i.e. iff `x` has odd parity.
pub fn gadget_graph(x: &[bool], k: usize, slots: &[(usize, usize)]) -> Result<ListGraph, InstanceError> {
    let p = x.len();
    if p == 0 {
        return Err(spec_err("gadget needs p >= 1"));
    }
    if k < 2 {
        return Err(spec_err(format!("gadget needs k >= 2, got {k}")));
    }
    if p == 1 && !x[0] {
        return Err(spec_err("p = 1 with bit 0 would need self-loops"));
    }
    if slots.len() != p {
        return Err(spec_err(format!("{} slot pairs for {p} levels", slots.len())));
    }
    if let Some(&(a, b)) = slots.iter().find(|&&(a, b)| a >= k || b >= k) {
        return Err(spec_err(format!("slot pair ({a},{b}) out of range for k={k}")));
    }
    let levels = 2 * p;
    let n = levels + k;
    let mut nbr = vec![0usize; n * k];
    for (i, (&bit, &(j0, j1))) in x.iter().zip(slots).enumerate() {
        let b = usize::from(bit);
        let top = 2 * i;
        let bottom = 2 * i + 1;
        for j in 0..k {
            nbr[top * k + j] = if j == j0 { (2 * i + 2 + b) % levels } else { levels + j };
            nbr[bottom * k + j] = if j == j1 { (2 * i + 3 - b) % levels } else { levels + j };
        }
    }
    for i in 0..k {
        let u = levels + i;
        nbr[u * k] = 0;
        for j in 1..k {
            nbr[u * k + j] = levels + (i + j) % k;
        }
    }
    Ok(ListGraph::from_flat(n, k, nbr)?)
}

pub fn gen_origin_gadget(spec: &GadgetSpec) -> Result<ListGraph, InstanceError> {
    gadget_graph(&spec.x, spec.k, &spec.resolved_slots())
}
