//! The one-cycle versus two-cycle relation on undirected matrix instances.
//!
//! `x` is a Hamiltonian cycle, `y` a disjoint union of two cycles with both
//! lengths in the allowed split range, and `x R y` iff `y` arises from `x` by
//! one two-swap. Every quantity is invariant under relabeling vertices, and
//! the symmetric group acts transitively on `X`, so the per-`x` values and
//! `l_max` are computed exactly on the canonical cycle `0, 1, ..., n-1`.

use std::collections::HashMap;

use super::{AdversaryError, AdversaryParams, Relation};
use crate::graph::MatrixGraph;
use crate::instances::{split_range, two_swap};

pub const CYCLE_MIN_N: usize = 9;
const CYCLE_MAX_N: usize = 64;
const MATERIALIZE_MAX_N: usize = 10;

#[derive(Debug, Clone, PartialEq)]
pub struct CycleRelationParams {
    pub n: usize,
    pub params: AdversaryParams,
    /// Number of `y` related to any single cycle.
    pub x_degree: u64,
    /// `(a, b, degree)` for each allowed split `a <= b`.
    pub split_degrees: Vec<(usize, usize, u64)>,
    /// Largest `l_{x,i}` over cells that are not edges of `x`.
    pub max_l_nonedge: u64,
    /// Largest `l_{x,i}` over edge cells of `x`.
    pub max_l_edge: u64,
    /// Smallest and largest number of differing cells over related pairs.
    pub diff_cells: (usize, usize),
}

/// Vertex sequences of the cycles of a 2-regular undirected graph, each
/// starting at its smallest vertex.
fn cycles_of(g: &MatrixGraph) -> Vec<Vec<usize>> {
    let adj = crate::graph::GraphView::adjacency(g);
    let mut seen = vec![false; g.n()];
    let mut out = Vec::new();
    for start in 0..g.n() {
        if seen[start] {
            continue;
        }
        let mut cyc = vec![start];
        seen[start] = true;
        let (mut prev, mut cur) = (start, adj[start][0]);
        while cur != start {
            seen[cur] = true;
            cyc.push(cur);
            let next = if adj[cur][0] != prev { adj[cur][0] } else { adj[cur][1] };
            prev = cur;
            cur = next;
        }
        out.push(cyc);
    }
    out
}

fn cycle_graph(n: usize, cycles: &[&[usize]]) -> MatrixGraph {
    let edges = cycles
        .iter()
        .flat_map(|c| (0..c.len()).map(move |i| (c[i], c[(i + 1) % c.len()])));
    MatrixGraph::from_edges(n, false, edges).expect("cycles are simple")
}

/// Every two-cycle graph one two-swap away from the single cycle `x`.
fn split_partners(x: &MatrixGraph) -> Vec<MatrixGraph> {
    let n = x.n();
    let (lo, hi) = split_range(n);
    let o = &cycles_of(x)[0];
    let mut out = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let d = j - i;
            if !(lo..=hi).contains(&d) || !(lo..=hi).contains(&(n - d)) {
                continue;
            }
            // cut (o[i], o[i+1]) and (o[j], o[j+1]); o[i+1..=j] closes up
            let (a, b, c, dd) = (o[i], o[i + 1], o[(j + 1) % n], o[j]);
            out.push(two_swap(x, a, b, c, dd).expect("swap preconditions hold on a cycle"));
        }
    }
    out
}

/// Every single cycle one two-swap away from the two-cycle graph `y`.
fn merge_partners(y: &MatrixGraph) -> Vec<MatrixGraph> {
    let cyc = cycles_of(y);
    let (c1, c2) = (&cyc[0], &cyc[1]);
    let mut out = Vec::with_capacity(2 * c1.len() * c2.len());
    for i in 0..c1.len() {
        let (p, q) = (c1[i], c1[(i + 1) % c1.len()]);
        for j in 0..c2.len() {
            let (r, s) = (c2[j], c2[(j + 1) % c2.len()]);
            for (c, d) in [(r, s), (s, r)] {
                out.push(two_swap(y, p, q, c, d).expect("cross edges are absent"));
            }
        }
    }
    out
}

fn diff_cells(a: &MatrixGraph, b: &MatrixGraph) -> Vec<usize> {
    a.cells()
        .iter()
        .zip(b.cells())
        .enumerate()
        .filter(|(_, (p, q))| p != q)
        .map(|(i, _)| i)
        .collect()
}

/// Per-cell counts `l_{g,i}` over the partners of `g`.
fn l_counts(g: &MatrixGraph, partners: &[MatrixGraph]) -> Vec<u64> {
    let mut l = vec![0u64; g.cells().len()];
    for h in partners {
        for c in diff_cells(g, h) {
            l[c] += 1;
        }
    }
    l
}

/// Relation degree and sorted `l` values of an arbitrary single cycle.
pub fn cycle_x_profile(x: &MatrixGraph) -> Result<(u64, Vec<u64>), AdversaryError> {
    check_n(x.n(), CYCLE_MAX_N)?;
    if x.is_directed() || cycles_of_checked(x)?.len() != 1 {
        return Err(AdversaryError::OutOfScale("input is not a single undirected cycle".into()));
    }
    let ys = split_partners(x);
    let mut l = l_counts(x, &ys);
    l.sort_unstable();
    Ok((ys.len() as u64, l))
}

fn cycles_of_checked(g: &MatrixGraph) -> Result<Vec<Vec<usize>>, AdversaryError> {
    crate::instances::cycle_lengths(g)?;
    Ok(cycles_of(g))
}

fn check_n(n: usize, max: usize) -> Result<(), AdversaryError> {
    if n < CYCLE_MIN_N {
        return Err(AdversaryError::OutOfScale(format!(
            "cycle relation needs n >= {CYCLE_MIN_N}, got {n}"
        )));
    }
    if n > max {
        return Err(AdversaryError::OutOfScale(format!("cycle relation limited to n <= {max}, got {n}")));
    }
    Ok(())
}

pub fn cycle_relation_params(n: usize) -> Result<CycleRelationParams, AdversaryError> {
    check_n(n, CYCLE_MAX_N)?;
    let ring: Vec<usize> = (0..n).collect();
    let x0 = cycle_graph(n, &[&ring]);
    let ys = split_partners(&x0);
    let l_x = l_counts(&x0, &ys);

    let mut l_max = 0;
    let mut diff_range = (usize::MAX, 0);
    for y in &ys {
        let l_y = l_counts(y, &merge_partners(y));
        let diff = diff_cells(&x0, y);
        diff_range = (diff_range.0.min(diff.len()), diff_range.1.max(diff.len()));
        for c in diff {
            l_max = l_max.max(l_x[c] * l_y[c]);
        }
    }

    // every y is a relabeling of the canonical two-cycle with its split
    let (lo, hi) = split_range(n);
    let split_degrees: Vec<(usize, usize, u64)> = (lo..=hi.min(n / 2))
        .filter(|a| (lo..=hi).contains(&(n - a)))
        .map(|a| {
            let y = cycle_graph(n, &[&ring[..a], &ring[a..]]);
            (a, n - a, merge_partners(&y).len() as u64)
        })
        .collect();
    let m_prime = split_degrees.iter().map(|s| s.2).min().unwrap_or(0);

    let (mut max_l_edge, mut max_l_nonedge) = (0, 0);
    for (c, &l) in l_x.iter().enumerate() {
        if x0.cells()[c] {
            max_l_edge = max_l_edge.max(l);
        } else {
            max_l_nonedge = max_l_nonedge.max(l);
        }
    }
    let m = ys.len() as u64;
    Ok(CycleRelationParams {
        n,
        params: AdversaryParams::new(m, m_prime, l_max),
        x_degree: m,
        split_degrees,
        max_l_nonedge,
        max_l_edge,
        diff_cells: diff_range,
    })
}

/// All Hamiltonian cycles on `vertices`, one sequence per cycle: the first
/// vertex is fixed and the direction is chosen with `seq[1] < seq[last]`.
pub fn all_cycles(vertices: &[usize]) -> Vec<Vec<usize>> {
    let len = vertices.len();
    if len < 3 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut seq = vec![vertices[0]];
    let mut used = vec![false; len];
    used[0] = true;
    fn extend(
        vertices: &[usize],
        seq: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Vec<usize>>,
    ) {
        if seq.len() == vertices.len() {
            if seq[1] < seq[seq.len() - 1] {
                out.push(seq.clone());
            }
            return;
        }
        for i in 1..vertices.len() {
            if !used[i] {
                used[i] = true;
                seq.push(vertices[i]);
                extend(vertices, seq, used, out);
                seq.pop();
                used[i] = false;
            }
        }
    }
    extend(vertices, &mut seq, &mut used, &mut out);
    out
}

fn to_string(g: &MatrixGraph) -> Vec<u32> {
    g.cells().iter().map(|&b| u32::from(b)).collect()
}

/// The full relation over every labeled instance, for cross-checking.
pub fn materialize_cycle_relation(n: usize) -> Result<Relation, AdversaryError> {
    check_n(n, MATERIALIZE_MAX_N)?;
    let all: Vec<usize> = (0..n).collect();
    let xs: Vec<MatrixGraph> = all_cycles(&all).iter().map(|c| cycle_graph(n, &[c])).collect();

    let (lo, hi) = split_range(n);
    let mut ys = Vec::new();
    for a in lo..=hi.min(n / 2) {
        if !(lo..=hi).contains(&(n - a)) {
            continue;
        }
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != a || (2 * a == n && mask & 1 == 0) {
                continue;
            }
            let (side_a, side_b): (Vec<usize>, Vec<usize>) =
                all.iter().partition(|&&v| mask >> v & 1 == 1);
            for ca in all_cycles(&side_a) {
                for cb in all_cycles(&side_b) {
                    ys.push(cycle_graph(n, &[&ca, &cb]));
                }
            }
        }
    }
    let y_index: HashMap<&[bool], usize> =
        ys.iter().enumerate().map(|(i, y)| (y.cells(), i)).collect();

    let mut pairs = Vec::new();
    for (xi, x) in xs.iter().enumerate() {
        for y in split_partners(x) {
            let yi = *y_index
                .get(y.cells())
                .ok_or_else(|| AdversaryError::OutOfScale("partner outside Y".into()))?;
            pairs.push((xi, yi));
        }
    }
    Ok(Relation {
        positives: xs.iter().map(to_string).collect(),
        negatives: ys.iter().map(to_string).collect(),
        pairs,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::adversary::adversary_bound;
    use crate::instances::{gen_cycle_instance, CycleSpec};

    #[test]
    fn cycle_counts() {
        assert_eq!(all_cycles(&[0, 1, 2]).len(), 1);
        assert_eq!(all_cycles(&[0, 1, 2, 3, 4]).len(), 12);
        assert_eq!(all_cycles(&(0..9).collect::<Vec<_>>()).len(), 20160);
    }

    #[test]
    fn nine_vertex_degree() {
        // 9 starting edges, partner at distance 3 or 4 (5 and 6 repeat them)
        let p = cycle_relation_params(9).unwrap();
        assert_eq!(p.x_degree, 18);
        assert_eq!(p.split_degrees, vec![(3, 6, 36), (4, 5, 40)]);
        assert_eq!(p.params.m_prime, 36);
        assert_eq!(p.diff_cells, (8, 8));
        assert!(p.max_l_nonedge <= 4);
    }

    #[test]
    fn below_minimum() {
        assert!(cycle_relation_params(8).is_err());
        assert!(materialize_cycle_relation(11).is_err());
    }

    #[test]
    fn profile_is_label_invariant() {
        for n in [9, 13, 20] {
            let ring: Vec<usize> = (0..n).collect();
            let canon = cycle_x_profile(&cycle_graph(n, &[&ring])).unwrap();
            for seed in 0..5 {
                let x = gen_cycle_instance(&CycleSpec::one(n, seed)).unwrap();
                assert_eq!(cycle_x_profile(&x).unwrap(), canon, "n={n} seed={seed}");
            }
        }
    }

    #[test]
    fn merges_invert_splits() {
        let ring: Vec<usize> = (0..12).collect();
        let x0 = cycle_graph(12, &[&ring]);
        for y in split_partners(&x0) {
            let lens = crate::instances::cycle_lengths(&y).unwrap();
            assert!(lens.iter().all(|&l| (4..=8).contains(&l)), "{lens:?}");
            assert!(merge_partners(&y).contains(&x0));
        }
    }

    #[test]
    fn shortcut_matches_full_enumeration() {
        let rel = materialize_cycle_relation(9).unwrap();
        assert_eq!(rel.positives.len(), 20160);
        // C(9,3) * 1 * 60 + C(9,4) * 3 * 12
        assert_eq!(rel.negatives.len(), 5040 + 4536);
        let generic = adversary_bound(&rel).unwrap();
        let fast = cycle_relation_params(9).unwrap().params;
        assert_eq!(generic, fast);
    }

    #[test]
    fn frozen_bounds() {
        // (n, m, m', l_max) from an independent edge-set enumeration
        let oracle = [
            (9, 18, 36, 16),
            (12, 30, 64, 24),
            (15, 45, 100, 32),
            (18, 63, 144, 40),
            (24, 108, 256, 56),
            (30, 165, 400, 72),
        ];
        for (n, m, mp, l) in oracle {
            let p = cycle_relation_params(n).unwrap().params;
            assert_eq!((p.m, p.m_prime, p.l_max), (m, mp, l), "n={n}");
        }
        assert!((cycle_relation_params(30).unwrap().params.bound - 30.276503540974915).abs() < 1e-12);
    }
}
