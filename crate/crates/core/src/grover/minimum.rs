use rand::Rng;

use super::search::bbht_search;
use super::{GroverConfig, GroverError, SearchOutcome, SearchSpace};
use crate::ledger::QueryLedger;

/// Threshold-descent minimum finding over a key table.
///
/// Start from a uniformly random index `y` (one counted read of its key),
/// then repeatedly run an unknown-count search for an index whose key is
/// strictly below `key[y]`, moving `y` whenever one is found. Stops once the
/// total charge reaches `ceil(c1 * sqrt(N))`. Returns `(y, queries)`.
fn descend<K: Ord + Copy, R: Rng + ?Sized>(
    keys: &[K],
    rng: &mut R,
    cfg: &GroverConfig,
    ledger: &mut QueryLedger,
) -> (usize, u64) {
    let n = keys.len();
    let start = ledger.count();
    let budget = cfg.dh_budget(n).max(1);
    let round_cap = cfg.bbht_budget(n);
    let mut best = rng.gen_range(0..n);
    ledger.charge();
    loop {
        let spent = ledger.since(start);
        if spent >= budget {
            break;
        }
        let threshold = keys[best];
        let space = SearchSpace::from_predicate(n, |i| keys[i] < threshold);
        let out = bbht_search(&space, rng, cfg, round_cap.min(budget - spent), ledger);
        if out.found {
            best = out.index;
        }
        if ledger.since(start) == spent {
            break;
        }
    }
    (best, ledger.since(start))
}

/// Index of a minimum key, correct with constant probability, charging one
/// unit per key read and `O(sqrt(N))` in total.
pub fn find_min_value<K: Ord + Copy, R: Rng + ?Sized>(
    values: &[K],
    rng: &mut R,
    cfg: &GroverConfig,
    ledger: &mut QueryLedger,
) -> Result<SearchOutcome, GroverError> {
    if values.is_empty() {
        return Err(GroverError::EmptySpace);
    }
    let (index, queries) = descend(values, rng, cfg, ledger);
    Ok(SearchOutcome {
        found: true,
        index,
        queries,
    })
}

/// Smallest marked index, correct with constant probability.
///
/// Runs the threshold descent on the keys `i` (marked) / `N + i` (unmarked),
/// so the global minimum is the smallest marked index whenever one exists,
/// then verifies the result with one probe. An empty marked set always
/// yields `found = false`.
pub fn find_min_index<R: Rng + ?Sized>(
    space: &SearchSpace,
    rng: &mut R,
    cfg: &GroverConfig,
    ledger: &mut QueryLedger,
) -> Result<SearchOutcome, GroverError> {
    let n = space.size();
    if n == 0 {
        return Err(GroverError::EmptySpace);
    }
    let start = ledger.count();
    let keys: Vec<usize> = (0..n)
        .map(|i| if space.is_marked(i) { i } else { n + i })
        .collect();
    let (index, _) = descend(&keys, rng, cfg, ledger);
    let found = space.probe(index, ledger);
    Ok(SearchOutcome {
        found,
        index,
        queries: ledger.since(start),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn single_value() {
        let cfg = GroverConfig::default();
        let mut ledger = QueryLedger::new();
        let out = find_min_value(&[5], &mut ChaCha8Rng::seed_from_u64(0), &cfg, &mut ledger).unwrap();
        assert_eq!(out.index, 0);
        assert!(out.queries <= cfg.dh_budget(1));
    }

    #[test]
    fn all_equal_values() {
        let cfg = GroverConfig::default();
        let mut r = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..100 {
            let out = find_min_value(&[3, 3, 3], &mut r, &cfg, &mut QueryLedger::new()).unwrap();
            assert!(out.index < 3);
        }
    }

    #[test]
    fn empty_values_rejected() {
        let cfg = GroverConfig::default();
        let empty: [u32; 0] = [];
        assert_eq!(
            find_min_value(&empty, &mut ChaCha8Rng::seed_from_u64(0), &cfg, &mut QueryLedger::new()),
            Err(GroverError::EmptySpace)
        );
    }

    #[test]
    fn unique_marked_is_returned_when_found() {
        let cfg = GroverConfig::default();
        let s = SearchSpace::from_marked(8, [7]);
        let mut r = ChaCha8Rng::seed_from_u64(2);
        let mut hits = 0;
        for _ in 0..1000 {
            let out = find_min_index(&s, &mut r, &cfg, &mut QueryLedger::new()).unwrap();
            if out.found {
                assert_eq!(out.index, 7);
                hits += 1;
            }
        }
        assert!(hits >= 500);
    }

    #[test]
    fn all_marked_minimum_is_zero() {
        let cfg = GroverConfig::default();
        let s = SearchSpace::from_predicate(16, |_| true);
        let mut r = ChaCha8Rng::seed_from_u64(3);
        let hits = (0..2000)
            .filter(|_| {
                let out = find_min_index(&s, &mut r, &cfg, &mut QueryLedger::new()).unwrap();
                out.found && out.index == 0
            })
            .count();
        assert!(hits >= 1000, "{hits}");
    }

    #[test]
    fn no_marked_is_not_found() {
        let cfg = GroverConfig::default();
        let s = SearchSpace::from_marked(32, []);
        let mut r = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..200 {
            let mut ledger = QueryLedger::new();
            let out = find_min_index(&s, &mut r, &cfg, &mut ledger).unwrap();
            assert!(!out.found);
            assert!(out.queries <= cfg.dh_budget(32) + 1);
        }
    }

    #[test]
    fn random_marked_sets_success_rate() {
        let cfg = GroverConfig::default();
        let mut r = ChaCha8Rng::seed_from_u64(5);
        let trials = 10_000;
        let mut hits = 0;
        let mut nonempty = 0;
        for _ in 0..trials {
            let s = SearchSpace::from_predicate(128, |_| false);
            let marked: Vec<usize> = (0..128).filter(|_| r.gen_bool(0.1)).collect();
            let s = SearchSpace::from_marked(s.size(), marked);
            let Some(&min) = s.marked().first() else { continue };
            nonempty += 1;
            let out = find_min_index(&s, &mut r, &cfg, &mut QueryLedger::new()).unwrap();
            if out.found && out.index == min {
                hits += 1;
            }
        }
        let rate = hits as f64 / nonempty as f64;
        let band = 2.576 * (0.25 / nonempty as f64).sqrt();
        assert!(rate >= 0.5 - band, "rate {rate}");
    }

    #[test]
    fn permutation_minimum_rate() {
        let cfg = GroverConfig::default();
        let mut r = ChaCha8Rng::seed_from_u64(6);
        let mut values: Vec<u32> = (0..64).collect();
        let trials = 10_000;
        let mut hits = 0;
        for _ in 0..trials {
            values.shuffle(&mut r);
            let out = find_min_value(&values, &mut r, &cfg, &mut QueryLedger::new()).unwrap();
            assert!(out.queries <= cfg.dh_budget(64));
            if values[out.index] == 0 {
                hits += 1;
            }
        }
        assert!(hits as f64 / trials as f64 >= 0.5 - 2.576 * 0.005, "{hits}");
    }
}
