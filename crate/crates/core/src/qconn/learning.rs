use rand::Rng;

use super::{AlgoReport, QconnError};
use crate::graph::{reachable_from, MatrixGraph};
use crate::grover::{grover_known_count, GroverConfig, SearchSpace};
use crate::ledger::QueryLedger;

/// Known-count attempts allowed per remaining-edge count before giving up.
pub const LEARNING_RETRY_CAP: usize = 10;

/// Connectivity by learning every set cell of the adjacency matrix.
///
/// `m` is the promised number of set cells (an undirected edge occupies two
/// cells). For `t = m` down to `1`, a known-count search over the `n^2` cells
/// finds a cell with `M = 1` that has not been learned yet; each `t` gets at
/// most [`LEARNING_RETRY_CAP`] attempts. Connectivity is then decided from
/// the learned edge list without further probes.
pub fn q_connected_learning<R: Rng + ?Sized>(
    g: &MatrixGraph,
    m: usize,
    cfg: &GroverConfig,
    rng: &mut R,
) -> Result<AlgoReport, QconnError> {
    cfg.validate()?;
    if g.is_directed() {
        return Err(QconnError::NeedsUndirected("q_connected_learning"));
    }
    let n = g.n();
    let actual = g.cell_count();
    if m != actual {
        return Err(QconnError::EdgeCountMismatch { claimed: m, actual });
    }
    let mut ledger = QueryLedger::new();
    let mut remaining: Vec<usize> = (0..n * n).filter(|&c| g.cells()[c]).collect();
    let mut learned = Vec::with_capacity(m);

    for t in (1..=m).rev() {
        let space = SearchSpace::from_marked(n * n, remaining.iter().copied());
        let mut hit = None;
        for _ in 0..LEARNING_RETRY_CAP {
            let out = grover_known_count(&space, t, rng, &mut ledger)?;
            if out.found {
                hit = Some(out.index);
                break;
            }
        }
        let Some(cell) = hit else {
            return Err(QconnError::RetryCapExceeded {
                t,
                attempts: LEARNING_RETRY_CAP,
                queries: ledger.count(),
            });
        };
        remaining.retain(|&c| c != cell);
        learned.push((cell / n, cell % n));
    }

    let mut adj = vec![Vec::new(); n];
    for &(i, j) in &learned {
        adj[i].push(j);
        adj[j].push(i);
    }
    let answer = n <= 1 || reachable_from(&adj, 0).into_iter().all(|s| s);
    Ok(AlgoReport {
        answer,
        queries: ledger.count(),
        tree: None,
        searches: m,
        correct: None,
    })
}
