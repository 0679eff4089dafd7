//! The level-flip relation on origin-gadget list instances.
//!
//! `f R g` iff `g` is `f` with the bit of one level flipped and that level's
//! forward slots moved: `f` uses `(j0, j1)` and `g` uses `(h0, h1)` with
//! `h0 != j0` and `h1 != j1`. The top vertex of `g` then points where the
//! bottom vertex of `f` pointed and vice versa, the vacated slots point back
//! into the clique, and nothing else changes.

use std::collections::{BTreeSet, HashMap};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{AdversaryError, AdversaryParams, Relation};
use crate::instances::{bits_of, gadget_graph};

const MAX_P: usize = 8;
const MAX_K: usize = 6;
/// Positive instances enumerated exhaustively up to this count.
const EXHAUSTIVE_LIMIT: u64 = 20_000;
const SAMPLE: usize = 64;
const SAMPLE_SEED: u64 = 0x5eed;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GadgetInstance {
    pub x: Vec<bool>,
    pub k: usize,
    pub slots: Vec<(usize, usize)>,
}

impl GadgetInstance {
    pub fn is_positive(&self) -> bool {
        self.x.iter().filter(|&&b| b).count() % 2 == 1
    }

    /// Flat `(vertex, slot)` table of the instance.
    pub fn table(&self) -> Vec<usize> {
        gadget_graph(&self.x, self.k, &self.slots)
            .expect("relation instances are valid gadgets")
            .table()
            .to_vec()
    }

    /// Every instance related to this one.
    pub fn flips(&self) -> Vec<GadgetInstance> {
        let k = self.k;
        let mut out = Vec::with_capacity(self.x.len() * (k - 1) * (k - 1));
        for (i, &(j0, j1)) in self.slots.iter().enumerate() {
            for h0 in (0..k).filter(|&h| h != j0) {
                for h1 in (0..k).filter(|&h| h != j1) {
                    let mut g = self.clone();
                    g.x[i] = !g.x[i];
                    g.slots[i] = (h0, h1);
                    out.push(g);
                }
            }
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GadgetRelationParams {
    pub p: usize,
    pub k: usize,
    pub params: AdversaryParams,
    pub min_x_degree: u64,
    pub max_x_degree: u64,
    /// Observed `l_{f,(v,j)}` at level-vertex slots pointing into the clique.
    pub backward_l: BTreeSet<u64>,
    /// Observed `l_{f,(v,j)}` at level-vertex forward slots.
    pub forward_l: BTreeSet<u64>,
    /// Observed `l_{f,(v,j)}` at clique-vertex slots.
    pub clique_l: BTreeSet<u64>,
    /// Smallest and largest number of differing positions over related pairs.
    pub diff_positions: (usize, usize),
    /// Whether every positive instance was examined, rather than a seeded
    /// sample of them together with all their partners.
    pub exhaustive: bool,
    pub instances: usize,
}

fn check_scale(p: usize, k: usize) -> Result<(), AdversaryError> {
    if !(2..=MAX_P).contains(&p) || !(2..=MAX_K).contains(&k) {
        return Err(AdversaryError::OutOfScale(format!(
            "gadget relation needs 2 <= p <= {MAX_P} and 2 <= k <= {MAX_K}, got p={p} k={k}"
        )));
    }
    Ok(())
}

fn positive_count(p: usize, k: usize) -> u64 {
    (1u64 << (p - 1)) * (k as u64).pow(2 * p as u32)
}

fn slots_of(mut code: u64, p: usize, k: usize) -> Vec<(usize, usize)> {
    let k64 = k as u64;
    (0..p)
        .map(|_| {
            let j0 = (code % k64) as usize;
            code /= k64;
            let j1 = (code % k64) as usize;
            code /= k64;
            (j0, j1)
        })
        .collect()
}

/// Every instance of the given parity.
fn enumerate(p: usize, k: usize, positive: bool) -> Vec<GadgetInstance> {
    let assignments = (k as u64).pow(2 * p as u32);
    let mut out = Vec::new();
    for bits in 0..1u64 << p {
        if (bits.count_ones() % 2 == 1) != positive {
            continue;
        }
        for code in 0..assignments {
            out.push(GadgetInstance { x: bits_of(bits, p), k, slots: slots_of(code, p, k) });
        }
    }
    out
}

fn sample(p: usize, k: usize) -> Vec<GadgetInstance> {
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
    (0..SAMPLE)
        .map(|_| {
            let mut x: Vec<bool> = (0..p).map(|_| rng.gen()).collect();
            if x.iter().filter(|&&b| b).count() % 2 == 0 {
                x[0] = !x[0];
            }
            let slots = (0..p).map(|_| (rng.gen_range(0..k), rng.gen_range(0..k))).collect();
            GadgetInstance { x, k, slots }
        })
        .collect()
}

fn l_counts(table: &[usize], partners: &[Vec<usize>]) -> Vec<u64> {
    let mut l = vec![0u64; table.len()];
    for t in partners {
        for (c, (a, b)) in table.iter().zip(t).enumerate() {
            if a != b {
                l[c] += 1;
            }
        }
    }
    l
}

pub fn gadget_relation_params(p: usize, k: usize) -> Result<GadgetRelationParams, AdversaryError> {
    check_scale(p, k)?;
    let exhaustive = positive_count(p, k) <= EXHAUSTIVE_LIMIT;
    let xs = if exhaustive { enumerate(p, k, true) } else { sample(p, k) };
    let levels = 2 * p;

    let mut out = GadgetRelationParams {
        p,
        k,
        params: AdversaryParams::new(0, 0, 1),
        min_x_degree: u64::MAX,
        max_x_degree: 0,
        backward_l: BTreeSet::new(),
        forward_l: BTreeSet::new(),
        clique_l: BTreeSet::new(),
        diff_positions: (usize::MAX, 0),
        exhaustive,
        instances: xs.len(),
    };
    let mut m_prime = u64::MAX;
    let mut l_max = 0;
    for f in &xs {
        let ft = f.table();
        let gs = f.flips();
        let g_tables: Vec<Vec<usize>> = gs.iter().map(GadgetInstance::table).collect();
        let l_f = l_counts(&ft, &g_tables);
        let deg = gs.len() as u64;
        out.min_x_degree = out.min_x_degree.min(deg);
        out.max_x_degree = out.max_x_degree.max(deg);

        for (c, &l) in l_f.iter().enumerate() {
            let set = if c / k >= levels {
                &mut out.clique_l
            } else if ft[c] >= levels {
                &mut out.backward_l
            } else {
                &mut out.forward_l
            };
            set.insert(l);
        }

        for (g, gt) in gs.iter().zip(&g_tables) {
            let back: Vec<Vec<usize>> = g.flips().iter().map(GadgetInstance::table).collect();
            m_prime = m_prime.min(back.len() as u64);
            let l_g = l_counts(gt, &back);
            let mut differing = 0;
            for c in (0..ft.len()).filter(|&c| ft[c] != gt[c]) {
                differing += 1;
                l_max = l_max.max(l_f[c] * l_g[c]);
            }
            let d = &mut out.diff_positions;
            *d = (d.0.min(differing), d.1.max(differing));
        }
    }
    out.params = AdversaryParams::new(out.min_x_degree, m_prime, l_max);
    Ok(out)
}

fn to_string(t: Vec<usize>) -> Vec<u32> {
    t.into_iter().map(|v| v as u32).collect()
}

/// The full relation over every slot assignment, for cross-checking.
pub fn materialize_gadget_relation(p: usize, k: usize) -> Result<Relation, AdversaryError> {
    check_scale(p, k)?;
    if positive_count(p, k) > EXHAUSTIVE_LIMIT {
        return Err(AdversaryError::OutOfScale(format!(
            "p={p} k={k} has more than {EXHAUSTIVE_LIMIT} positive instances"
        )));
    }
    let xs = enumerate(p, k, true);
    let ys = enumerate(p, k, false);
    let y_index: HashMap<&GadgetInstance, usize> = ys.iter().enumerate().map(|(i, y)| (y, i)).collect();
    let mut pairs = Vec::new();
    for (xi, x) in xs.iter().enumerate() {
        for g in x.flips() {
            pairs.push((xi, y_index[&g]));
        }
    }
    Ok(Relation {
        positives: xs.iter().map(|x| to_string(x.table())).collect(),
        negatives: ys.iter().map(|y| to_string(y.table())).collect(),
        pairs,
    })
}
