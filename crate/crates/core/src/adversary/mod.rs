//! Unweighted adversary bounds computed exactly on finite relations.
//!
//! For a relation `R` between positive instances `X` and negative instances
//! `Y` (all strings of one length over an index domain):
//!
//! * `m`  = min over `x` of the number of related `y`,
//! * `m'` = min over `y` of the number of related `x`,
//! * `l_{x,i}` = number of `y` related to `x` with `y_i != x_i`, and `l'_{y,i}`
//!   symmetrically,
//! * `l_max` = max of `l_{x,i} * l'_{y,i}` over related pairs and positions
//!   where the two strings differ,
//!
//! and the query lower bound is `sqrt(m * m' / l_max)`.

mod cycle;
mod gadget;

pub use cycle::{
    all_cycles, cycle_relation_params, cycle_x_profile, materialize_cycle_relation,
    CycleRelationParams, CYCLE_MIN_N,
};
pub use gadget::{
    gadget_relation_params, materialize_gadget_relation, GadgetInstance, GadgetRelationParams,
};

use thiserror::Error;

use crate::instances::InstanceError;

#[derive(Debug, Error)]
pub enum AdversaryError {
    #[error("relation has no related pairs")]
    EmptyRelation,
    #[error("string {index} has length {len}, expected {expected}")]
    LengthMismatch { index: usize, len: usize, expected: usize },
    #[error("related pair ({0},{1}) does not differ anywhere")]
    IdenticalPair(usize, usize),
    #[error("pair index ({0},{1}) out of range")]
    PairOutOfRange(usize, usize),
    #[error("outside enumeration scale: {0}")]
    OutOfScale(String),
    #[error(transparent)]
    Instance(#[from] InstanceError),
}

/// A relation between positive and negative instances, each a string over
/// the same index domain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub positives: Vec<Vec<u32>>,
    pub negatives: Vec<Vec<u32>>,
    /// `(index into positives, index into negatives)`
    pub pairs: Vec<(usize, usize)>,
}

impl Relation {
    /// The same relation with the roles of `X` and `Y` exchanged.
    pub fn transposed(&self) -> Relation {
        Relation {
            positives: self.negatives.clone(),
            negatives: self.positives.clone(),
            pairs: self.pairs.iter().map(|&(x, y)| (y, x)).collect(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AdversaryParams {
    pub m: u64,
    pub m_prime: u64,
    pub l_max: u64,
    pub bound: f64,
}

impl AdversaryParams {
    pub fn new(m: u64, m_prime: u64, l_max: u64) -> Self {
        Self {
            m,
            m_prime,
            l_max,
            bound: ((m * m_prime) as f64 / l_max as f64).sqrt(),
        }
    }
}

fn differing<'a>(a: &'a [u32], b: &'a [u32]) -> impl Iterator<Item = usize> + 'a {
    let b = &b[..a.len()];
    a.iter().zip(b).enumerate().filter(|(_, (p, q))| p != q).map(|(i, _)| i)
}

/// Exact parameters of an explicit relation.
pub fn adversary_bound(rel: &Relation) -> Result<AdversaryParams, AdversaryError> {
    if rel.pairs.is_empty() {
        return Err(AdversaryError::EmptyRelation);
    }
    let len = rel
        .positives
        .first()
        .or(rel.negatives.first())
        .map_or(0, Vec::len);
    for (index, s) in rel.positives.iter().chain(&rel.negatives).enumerate() {
        if s.len() != len {
            return Err(AdversaryError::LengthMismatch { index, len: s.len(), expected: len });
        }
    }
    let (nx, ny) = (rel.positives.len(), rel.negatives.len());
    let mut deg_x = vec![0u64; nx];
    let mut deg_y = vec![0u64; ny];
    let mut l_x = vec![0u64; nx * len];
    let mut l_y = vec![0u64; ny * len];
    for &(x, y) in &rel.pairs {
        if x >= nx || y >= ny {
            return Err(AdversaryError::PairOutOfRange(x, y));
        }
        deg_x[x] += 1;
        deg_y[y] += 1;
        let mut any = false;
        for i in differing(&rel.positives[x], &rel.negatives[y]) {
            l_x[x * len + i] += 1;
            l_y[y * len + i] += 1;
            any = true;
        }
        if !any {
            return Err(AdversaryError::IdenticalPair(x, y));
        }
    }
    // instances outside every pair have degree 0, which would zero the bound
    let m = deg_x.iter().copied().min().unwrap_or(0);
    let m_prime = deg_y.iter().copied().min().unwrap_or(0);
    let mut l_max = 0;
    for &(x, y) in &rel.pairs {
        for i in differing(&rel.positives[x], &rel.negatives[y]) {
            l_max = l_max.max(l_x[x * len + i] * l_y[y * len + i]);
        }
    }
    Ok(AdversaryParams::new(m, m_prime, l_max))
}

/// PARITY on `n` bits: odd-weight strings against even-weight strings at
/// Hamming distance one.
pub fn parity_relation(n: usize) -> Result<Relation, AdversaryError> {
    if n == 0 || n > 20 {
        return Err(AdversaryError::OutOfScale(format!("parity relation needs 1 <= n <= 20, got {n}")));
    }
    let strings = |odd: bool| -> Vec<u32> {
        (0..1u32 << n).filter(|c| (c.count_ones() % 2 == 1) == odd).collect()
    };
    let (pos, neg) = (strings(true), strings(false));
    let neg_index: std::collections::HashMap<u32, usize> =
        neg.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let pairs = pos
        .iter()
        .enumerate()
        .flat_map(|(xi, &x)| (0..n).map(move |bit| (xi, x ^ (1 << bit))))
        .map(|(xi, y)| (xi, neg_index[&y]))
        .collect();
    let expand = |c: u32| (0..n).map(|i| (c >> i) & 1).collect::<Vec<u32>>();
    Ok(Relation {
        positives: pos.into_iter().map(expand).collect(),
        negatives: neg.into_iter().map(expand).collect(),
        pairs,
    })
}
