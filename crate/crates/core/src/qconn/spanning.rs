use rand::Rng;

use super::QconnError;
use crate::graph::{DfsResult, GraphView, ListGraph, MatrixGraph};
use crate::grover::{boosted, grover_unknown_count, GroverConfig, SearchSpace};
use crate::ledger::QueryLedger;

/// How a graph model exposes the neighbor search of the spanning-tree
/// algorithm: a per-vertex search space of `slot_count()` indices, where an
/// index is marked iff it names an out-neighbor that is not yet marked.
pub trait NeighborOracle: GraphView {
    fn slot_count(&self) -> usize;

    /// Vertex named by `slot` of `u`, if that slot is an edge (uncounted).
    fn slot_target(&self, u: usize, slot: usize) -> Option<usize>;

    /// All `(slot, target)` pairs of `u` that are edges (uncounted).
    fn edge_slots(&self, u: usize) -> Vec<(usize, usize)>;
}

/// Matrix model: the search runs over all `n` vertices, predicate
/// `M[u][v] = 1 and v not marked`.
impl NeighborOracle for MatrixGraph {
    fn slot_count(&self) -> usize {
        self.n()
    }

    fn slot_target(&self, u: usize, slot: usize) -> Option<usize> {
        self.cell(u, slot).then_some(slot)
    }

    fn edge_slots(&self, u: usize) -> Vec<(usize, usize)> {
        self.out_neighbors(u).into_iter().map(|v| (v, v)).collect()
    }
}

/// List model: the search runs over the `k` slots, predicate
/// `nbr[u][i] not marked`.
impl NeighborOracle for ListGraph {
    fn slot_count(&self) -> usize {
        self.k()
    }

    fn slot_target(&self, u: usize, slot: usize) -> Option<usize> {
        Some(self.neighbor(u, slot))
    }

    fn edge_slots(&self, u: usize) -> Vec<(usize, usize)> {
        self.row(u).iter().copied().enumerate().collect()
    }
}

/// Spanning tree built by [`q_spanning_tree`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningRun {
    pub tree: DfsResult,
    /// Boosted searches, i.e. push plus pop events. At most `2n`.
    pub searches: usize,
    pub queries: u64,
}

/// Depth-first spanning tree with Grover neighbor search.
///
/// Keeps a stack `T = [root]` and marked set `S = {root}`. For the top vertex
/// `u` a boosted unknown-count search looks for a slot naming an unmarked
/// neighbor; a verified hit marks and pushes it, a miss pops `u`. Only edges
/// that pass a verification probe enter the tree, so unreachable vertices are
/// never marked.
pub fn q_spanning_tree<G, R>(
    g: &G,
    root: usize,
    cfg: &GroverConfig,
    rng: &mut R,
    ledger: &mut QueryLedger,
) -> Result<SpanningRun, QconnError>
where
    G: NeighborOracle + ?Sized,
    R: Rng + ?Sized,
{
    let n = g.vertex_count();
    if root >= n {
        return Err(QconnError::BadRoot { root, n });
    }
    let start = ledger.count();
    let reps = cfg.boost.reps(n);
    let width = g.slot_count();
    // simulator-side view of the oracle, used only to sample outcomes
    let slots: Vec<Vec<(usize, usize)>> = (0..n).map(|u| g.edge_slots(u)).collect();

    let mut tree = DfsResult::start(n, root);
    let mut stack = vec![root];
    let mut searches = 0;
    while let Some(&u) = stack.last() {
        let space = SearchSpace::from_marked(
            width,
            slots[u]
                .iter()
                .filter(|&&(_, v)| !tree.marked[v])
                .map(|&(slot, _)| slot),
        );
        searches += 1;
        let hit = boosted(reps, rng, ledger, |r, l| grover_unknown_count(&space, r, cfg, l));
        match hit.found_index().and_then(|slot| g.slot_target(u, slot)) {
            Some(v) => {
                tree.mark(u, v);
                stack.push(v);
            }
            None => {
                stack.pop();
            }
        }
    }
    Ok(SpanningRun {
        tree,
        searches,
        queries: ledger.since(start),
    })
}
