use std::collections::VecDeque;

use super::{GraphView, ListGraph, MatrixGraph};
use crate::ledger::QueryLedger;

/// Counted oracle access used by the classical baselines. One unit per
/// matrix cell or list slot read.
pub trait ProbeGraph: GraphView {
    /// Read every oracle entry describing the out-neighbors of `u`.
    fn probe_out(&self, u: usize, ledger: &mut QueryLedger) -> Vec<usize>;

    /// Read the whole oracle once and return the reversed adjacency.
    fn probe_reverse(&self, ledger: &mut QueryLedger) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut rev = vec![Vec::new(); n];
        for u in 0..n {
            for v in self.probe_out(u, ledger) {
                rev[v].push(u);
            }
        }
        rev
    }
}

impl ProbeGraph for MatrixGraph {
    fn probe_out(&self, u: usize, ledger: &mut QueryLedger) -> Vec<usize> {
        ledger.charge_many(self.n() as u64);
        self.out_neighbors(u)
    }
}

impl ProbeGraph for ListGraph {
    fn probe_out(&self, u: usize, ledger: &mut QueryLedger) -> Vec<usize> {
        ledger.charge_many(self.k() as u64);
        self.row(u).to_vec()
    }
}

fn bfs(n: usize, root: usize, mut next: impl FnMut(usize) -> Vec<usize>) -> Vec<bool> {
    let mut seen = vec![false; n];
    if n == 0 {
        return seen;
    }
    let mut queue = VecDeque::from([root]);
    seen[root] = true;
    while let Some(u) = queue.pop_front() {
        for v in next(u) {
            if !seen[v] {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    seen
}

/// Uncounted reachability set from `root` over an adjacency list.
pub fn reachable_from(adj: &[Vec<usize>], root: usize) -> Vec<bool> {
    bfs(adj.len(), root, |u| adj[u].clone())
}

/// Uncounted strong connectivity of an adjacency list: everything reaches
/// vertex 0 and vertex 0 reaches everything.
pub fn strongly_connected_adj(adj: &[Vec<usize>]) -> bool {
    let n = adj.len();
    if n <= 1 {
        return true;
    }
    if !reachable_from(adj, 0).into_iter().all(|s| s) {
        return false;
    }
    let mut rev = vec![Vec::new(); n];
    for (u, out) in adj.iter().enumerate() {
        for &v in out {
            rev[v].push(u);
        }
    }
    reachable_from(&rev, 0).into_iter().all(|s| s)
}

/// BFS connectivity of an undirected matrix graph. Each dequeued vertex
/// reads its full row, so the charge is at most `n^2`.
pub fn classical_connected(g: &MatrixGraph, ledger: &mut QueryLedger) -> bool {
    let n = g.n();
    if n <= 1 {
        return true;
    }
    bfs(n, 0, |u| g.probe_out(u, ledger)).into_iter().all(|s| s)
}

/// Strong connectivity via the two-condition definition at `v_0`: forward
/// BFS over counted row reads, then one full counted table read for the
/// reverse direction.
pub fn classical_strongly_connected<G: ProbeGraph + ?Sized>(
    g: &G,
    ledger: &mut QueryLedger,
) -> bool {
    let n = g.vertex_count();
    if n <= 1 {
        return true;
    }
    if !bfs(n, 0, |u| g.probe_out(u, ledger)).into_iter().all(|s| s) {
        return false;
    }
    let rev = g.probe_reverse(ledger);
    reachable_from(&rev, 0).into_iter().all(|s| s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use petgraph::algo::tarjan_scc;
    use petgraph::graph::DiGraph;
    use proptest::prelude::*;

    fn path(n: usize) -> MatrixGraph {
        MatrixGraph::from_edges(n, false, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn connectivity_examples() {
        let mut ledger = QueryLedger::new();
        assert!(classical_connected(&MatrixGraph::empty(1, false), &mut ledger));
        assert!(classical_connected(&path(4), &mut ledger));
        let split = MatrixGraph::from_edges(4, false, [(0, 1), (2, 3)]).unwrap();
        assert!(!classical_connected(&split, &mut ledger));
    }

    #[test]
    fn connectivity_charge_bounded_by_cells() {
        let mut ledger = QueryLedger::new();
        classical_connected(&path(10), &mut ledger);
        assert_eq!(ledger.count(), 100);
        ledger.reset();
        let split = MatrixGraph::from_edges(10, false, [(0, 1)]).unwrap();
        classical_connected(&split, &mut ledger);
        assert_eq!(ledger.count(), 20);
    }

    #[test]
    fn strong_connectivity_examples() {
        let mut ledger = QueryLedger::new();
        let two_cycle = MatrixGraph::from_edges(2, true, [(0, 1), (1, 0)]).unwrap();
        assert!(classical_strongly_connected(&two_cycle, &mut ledger));
        let single = MatrixGraph::from_edges(2, true, [(0, 1)]).unwrap();
        assert!(!classical_strongly_connected(&single, &mut ledger));
        let list = ListGraph::new(3, 1, vec![vec![1], vec![2], vec![0]]).unwrap();
        ledger.reset();
        assert!(classical_strongly_connected(&list, &mut ledger));
        assert_eq!(ledger.count(), 6);
    }

    fn tarjan_sc(adj: &[Vec<usize>]) -> bool {
        let mut g = DiGraph::<(), ()>::new();
        let nodes: Vec<_> = (0..adj.len()).map(|_| g.add_node(())).collect();
        for (u, out) in adj.iter().enumerate() {
            for &v in out {
                g.add_edge(nodes[u], nodes[v], ());
            }
        }
        tarjan_scc(&g).len() <= 1
    }

    proptest! {
        #[test]
        fn agrees_with_tarjan(n in 1usize..12, bits in proptest::collection::vec(prop::bool::weighted(0.2), 144)) {
            let cells: Vec<bool> = (0..n * n).map(|c| bits[c] && c / n != c % n).collect();
            let g = MatrixGraph::new(n, cells, true).unwrap();
            let mut ledger = QueryLedger::new();
            let adj = g.adjacency();
            prop_assert_eq!(classical_strongly_connected(&g, &mut ledger), tarjan_sc(&adj));
            prop_assert_eq!(strongly_connected_adj(&adj), tarjan_sc(&adj));
        }
    }
}
