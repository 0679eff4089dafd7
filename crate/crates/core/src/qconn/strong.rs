use rand::Rng;

use super::{q_spanning_tree, AlgoReport, QconnError};
use crate::graph::{reachable_from, strongly_connected_adj, transpose, DfsResult, GraphView, ListGraph, MatrixGraph};
use crate::grover::{find_min_value, GroverConfig};
use crate::ledger::QueryLedger;

/// One out-edge per vertex, pointing to the neighbor that came earliest in
/// the marking order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BackwardEdges {
    target: Vec<Option<usize>>,
}

impl BackwardEdges {
    pub fn target(&self, v: usize) -> Option<usize> {
        self.target[v]
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.target
            .iter()
            .enumerate()
            .filter_map(|(u, t)| t.map(|v| (u, v)))
    }
}

/// Exact backward edges: for every vertex, the out-neighbor with the
/// smallest marking rank (uncounted). `tree` must mark every vertex.
pub fn exact_backward_edges<G: GraphView + ?Sized>(g: &G, tree: &DfsResult) -> BackwardEdges {
    let target = (0..g.vertex_count())
        .map(|u| {
            g.out_neighbors(u)
                .into_iter()
                .filter_map(|v| tree.rank(v).map(|r| (r, v)))
                .min()
                .map(|(_, v)| v)
        })
        .collect();
    BackwardEdges { target }
}

fn union_adjacency(n: usize, tree: &DfsResult, back: &BackwardEdges) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in &tree.tree {
        adj[u].push(v);
    }
    for (u, v) in back.edges() {
        adj[u].push(v);
    }
    adj
}

/// Compare strong connectivity of `g` with that of its subgraph made of
/// the tree edges plus `back`. Returns `None` when `tree` does not mark
/// exactly the vertices reachable from its root, which a complete DFS
/// always does.
pub fn reduction_lemma_check<G: GraphView + ?Sized>(
    g: &G,
    tree: &DfsResult,
    back: &BackwardEdges,
) -> Option<bool> {
    let reach = reachable_from(&g.adjacency(), tree.root);
    if reach != tree.marked {
        return None;
    }
    let full = strongly_connected_adj(&g.adjacency());
    let reduced = strongly_connected_adj(&union_adjacency(g.vertex_count(), tree, back));
    Some(full == reduced)
}

/// Strong connectivity in the matrix model: a spanning tree from `v_0` in
/// `g`, then one in its transpose. Stops after the first stage that fails
/// to mark every vertex.
pub fn q_strongly_connected_matrix<R: Rng + ?Sized>(
    g: &MatrixGraph,
    cfg: &GroverConfig,
    rng: &mut R,
) -> Result<AlgoReport, QconnError> {
    cfg.validate()?;
    let mut ledger = QueryLedger::new();
    let forward = q_spanning_tree(g, 0, cfg, rng, &mut ledger)?;
    let mut searches = forward.searches;
    let mut answer = forward.tree.spans_all();
    if answer {
        // reading the transpose is reading the original oracle with swapped indices
        let backward = q_spanning_tree(&transpose(g), 0, cfg, rng, &mut ledger)?;
        searches += backward.searches;
        answer = backward.tree.spans_all();
    }
    Ok(AlgoReport {
        answer,
        queries: ledger.count(),
        tree: Some(forward.tree),
        searches,
        correct: None,
    })
}

/// Strong connectivity in the list model.
///
/// Stage 1 builds a spanning tree `A` from `v_0`; if it misses a vertex the
/// answer is no. Stage 2 finds, for every vertex, the slot whose neighbor has
/// the smallest marking rank (boosted minimum finding over the `k` slots,
/// keeping the best of `r` runs). The decision is strong connectivity of
/// `A` plus those backward edges, computed without further probes.
pub fn q_strongly_connected_list<R: Rng + ?Sized>(
    g: &ListGraph,
    cfg: &GroverConfig,
    rng: &mut R,
) -> Result<AlgoReport, QconnError> {
    cfg.validate()?;
    let n = g.n();
    let mut ledger = QueryLedger::new();
    let stage1 = q_spanning_tree(g, 0, cfg, rng, &mut ledger)?;
    let tree = stage1.tree;
    if !tree.spans_all() {
        return Ok(AlgoReport {
            answer: false,
            queries: ledger.count(),
            tree: Some(tree),
            searches: stage1.searches,
            correct: None,
        });
    }

    let reps = cfg.boost.reps(n);
    let mut target = Vec::with_capacity(n);
    for u in 0..n {
        let keys: Vec<usize> = g
            .row(u)
            .iter()
            .map(|&v| tree.rank(v).expect("stage 1 marked every vertex"))
            .collect();
        let mut best: Option<usize> = None;
        for _ in 0..reps {
            let out = find_min_value(&keys, rng, cfg, &mut ledger)?;
            if best.is_none_or(|b| keys[out.index] < keys[b]) {
                best = Some(out.index);
            }
        }
        target.push(best.map(|slot| g.neighbor(u, slot)));
    }
    let back = BackwardEdges { target };
    let answer = strongly_connected_adj(&union_adjacency(n, &tree, &back));
    Ok(AlgoReport {
        answer,
        queries: ledger.count(),
        tree: Some(tree),
        searches: stage1.searches,
        correct: None,
    })
}
