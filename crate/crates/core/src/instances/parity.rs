use super::{spec_err, InstanceError};
use crate::graph::ListGraph;

/// A parity instance `x in {0,1}^p`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParitySpec {
    pub x: Vec<bool>,
}

pub fn parity(x: &[bool]) -> bool {
    x.iter().filter(|&&b| b).count() % 2 == 1
}

/// Two-level permutation graph on `2p` vertices with out-degree 1.
///
/// Column `i` with bit `b` maps `v_{2i} -> v_{2i+2+b}` and
/// `v_{2i+1} -> v_{2i+3-b}` (indices mod `2p`): parallel edges for `b = 0`,
/// crossing edges for `b = 1`. The result is one cycle when `x` has odd
/// parity and two cycles (the two levels) otherwise.
///
/// `x = "0"` is rejected: with a single column the parallel edges would be
/// self-loops.
pub fn gen_parity_graph(spec: &ParitySpec) -> Result<ListGraph, InstanceError> {
    let p = spec.x.len();
    if p == 0 {
        return Err(spec_err("parity instance needs p >= 1"));
    }
    if p == 1 && !spec.x[0] {
        return Err(spec_err("p = 1 with bit 0 would need self-loops"));
    }
    let n = 2 * p;
    let mut nbr = vec![0; n];
    for (i, &bit) in spec.x.iter().enumerate() {
        let b = usize::from(bit);
        nbr[2 * i] = (2 * i + 2 + b) % n;
        nbr[2 * i + 1] = (2 * i + 3 - b) % n;
    }
    Ok(ListGraph::from_flat(n, 1, nbr)?)
}

/// Number of cycles of an out-degree-1 graph that is a permutation.
pub fn count_cycles(g: &ListGraph) -> Result<usize, InstanceError> {
    if g.k() != 1 {
        return Err(InstanceError::NotPermutation(format!("out-degree {} != 1", g.k())));
    }
    let n = g.n();
    let mut indeg = vec![0usize; n];
    for u in 0..n {
        indeg[g.neighbor(u, 0)] += 1;
    }
    if let Some(v) = indeg.iter().position(|&d| d != 1) {
        return Err(InstanceError::NotPermutation(format!(
            "vertex {v} has in-degree {}",
            indeg[v]
        )));
    }
    let mut seen = vec![false; n];
    let mut cycles = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            v = g.neighbor(v, 0);
        }
    }
    Ok(cycles)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances::{bits_of, parse_bits};

    fn graph(bits: &str) -> ListGraph {
        gen_parity_graph(&ParitySpec { x: parse_bits(bits).unwrap() }).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(count_cycles(&graph("0000")).unwrap(), 2);
        let single = graph("1");
        assert_eq!(single.row(0), &[1]);
        assert_eq!(single.row(1), &[0]);
        assert_eq!(count_cycles(&single).unwrap(), 1);
        assert!(gen_parity_graph(&ParitySpec { x: vec![false] }).is_err());
        assert!(gen_parity_graph(&ParitySpec { x: vec![] }).is_err());
    }

    #[test]
    fn all_zero_cycles_are_the_levels() {
        let g = graph("000");
        assert_eq!(g.table(), &[2, 3, 4, 5, 0, 1]);
    }

    #[test]
    fn cycle_count_tracks_parity_exhaustively() {
        for p in 1..=10 {
            for code in 0..(1u64 << p) {
                let x = bits_of(code, p);
                let Ok(g) = gen_parity_graph(&ParitySpec { x: x.clone() }) else {
                    assert_eq!((p, code), (1, 0));
                    continue;
                };
                assert_eq!(count_cycles(&g).unwrap(), 2 - usize::from(parity(&x)));
            }
        }
    }

    #[test]
    fn count_cycles_examples() {
        let swaps = ListGraph::new(4, 1, vec![vec![1], vec![0], vec![3], vec![2]]).unwrap();
        assert_eq!(count_cycles(&swaps).unwrap(), 2);
        let ring = ListGraph::new(5, 1, (0..5).map(|u| vec![(u + 1) % 5]).collect()).unwrap();
        assert_eq!(count_cycles(&ring).unwrap(), 1);
        let merge = ListGraph::new(3, 1, vec![vec![1], vec![0], vec![0]]).unwrap();
        assert!(matches!(count_cycles(&merge), Err(InstanceError::NotPermutation(_))));
        let wide = ListGraph::new(3, 2, vec![vec![1, 2], vec![2, 0], vec![0, 1]]).unwrap();
        assert!(count_cycles(&wide).is_err());
    }
}
