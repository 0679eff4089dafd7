use std::f64::consts::FRAC_PI_4;

use rand::Rng;

use super::{GroverConfig, GroverError, SearchSpace};
use crate::ledger::QueryLedger;

/// Result of a simulated search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOutcome {
    /// The reported index passed its verification probe.
    pub found: bool,
    /// Last measured (or, for minimum finding, best) index. Meaningless when
    /// no measurement took place.
    pub index: usize,
    /// Ledger units charged by this search.
    pub queries: u64,
}

impl SearchOutcome {
    pub fn found_index(&self) -> Option<usize> {
        self.found.then_some(self.index)
    }
}

/// Probability that `j` Grover iterations on `t` of `n` marked elements,
/// started from the uniform state, measure a marked element.
pub fn success_prob_known_t(n: usize, t: usize, j: u64) -> Result<f64, GroverError> {
    if t == 0 {
        return Err(GroverError::NoMarked);
    }
    if t > n {
        return Err(GroverError::CountTooLarge { t, n });
    }
    Ok(rotation_prob(n, t, j))
}

fn rotation_prob(n: usize, t: usize, j: u64) -> f64 {
    let theta = (t as f64 / n as f64).sqrt().asin();
    let s = ((2 * j + 1) as f64 * theta).sin();
    (s * s).clamp(0.0, 1.0)
}

/// Iteration count `floor(pi/4 * sqrt(n/t))` used when `t` is known.
pub fn known_count_iterations(n: usize, t: usize) -> u64 {
    (FRAC_PI_4 * (n as f64 / t as f64).sqrt()).floor() as u64
}

/// Charge `j` iterations and sample the measured index from the exact
/// two-level distribution. Does not verify.
fn run_iterations<R: Rng + ?Sized>(
    space: &SearchSpace,
    j: u64,
    rng: &mut R,
    ledger: &mut QueryLedger,
) -> usize {
    ledger.charge_many(j);
    let t = space.marked_count();
    if t == 0 {
        return space.sample_unmarked(rng);
    }
    if rng.gen::<f64>() < rotation_prob(space.size(), t, j) {
        space.sample_marked(rng)
    } else {
        space.sample_unmarked(rng)
    }
}

/// Grover search with the true marked count `t` supplied by the caller.
///
/// Charges `floor(pi/4 * sqrt(N/t))` iterations plus one verification probe.
pub fn grover_known_count<R: Rng + ?Sized>(
    space: &SearchSpace,
    t: usize,
    rng: &mut R,
    ledger: &mut QueryLedger,
) -> Result<SearchOutcome, GroverError> {
    if space.size() == 0 {
        return Err(GroverError::EmptySpace);
    }
    if t == 0 {
        return Err(GroverError::NoMarked);
    }
    if t != space.marked_count() {
        return Err(GroverError::CountMismatch {
            claimed: t,
            actual: space.marked_count(),
        });
    }
    let start = ledger.count();
    let j = known_count_iterations(space.size(), t);
    let index = run_iterations(space, j, rng, ledger);
    let found = space.probe(index, ledger);
    Ok(SearchOutcome {
        found,
        index,
        queries: ledger.since(start),
    })
}

/// Search with an unknown number of solutions using the exponentially
/// growing random schedule, charging at most `budget` units.
pub(crate) fn bbht_search<R: Rng + ?Sized>(
    space: &SearchSpace,
    rng: &mut R,
    cfg: &GroverConfig,
    budget: u64,
    ledger: &mut QueryLedger,
) -> SearchOutcome {
    let start = ledger.count();
    let mut outcome = SearchOutcome {
        found: false,
        index: 0,
        queries: 0,
    };
    if space.size() == 0 {
        return outcome;
    }
    let ceiling = (space.size() as f64).sqrt();
    let mut m = 1.0_f64;
    let mut spent = 0u64;
    loop {
        let j = rng.gen_range(0..m.ceil() as u64);
        if spent + j + 1 > budget {
            break;
        }
        outcome.index = run_iterations(space, j, rng, ledger);
        spent += j + 1;
        if space.probe(outcome.index, ledger) {
            outcome.found = true;
            break;
        }
        m = (cfg.bbht_lambda * m).min(ceiling);
    }
    outcome.queries = ledger.since(start);
    outcome
}

/// Search with an unknown (possibly zero) number of solutions.
///
/// Each round draws `j` uniformly below the current bound `m`, charges
/// `j + 1` units and grows `m <- min(lambda * m, sqrt(N))`. The search claims
/// "no solution" rather than start a round that would push the charge past
/// `ceil(c0 * sqrt(N))`.
pub fn grover_unknown_count<R: Rng + ?Sized>(
    space: &SearchSpace,
    rng: &mut R,
    cfg: &GroverConfig,
    ledger: &mut QueryLedger,
) -> SearchOutcome {
    bbht_search(space, rng, cfg, cfg.bbht_budget(space.size()), ledger)
}

/// Run `search` up to `reps` times, stopping at the first verified success.
pub fn boosted<R, F>(reps: usize, rng: &mut R, ledger: &mut QueryLedger, mut search: F) -> SearchOutcome
where
    R: Rng + ?Sized,
    F: FnMut(&mut R, &mut QueryLedger) -> SearchOutcome,
{
    let start = ledger.count();
    let mut last = SearchOutcome {
        found: false,
        index: 0,
        queries: 0,
    };
    for _ in 0..reps.max(1) {
        last = search(rng, ledger);
        if last.found {
            break;
        }
    }
    last.queries = ledger.since(start);
    last
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grover::statevector_success_prob;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn rng(seed: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(seed)
    }

    #[test]
    fn closed_form_examples() {
        assert!((success_prob_known_t(4, 1, 1).unwrap() - 1.0).abs() < 1e-12);
        assert!((success_prob_known_t(7, 7, 0).unwrap() - 1.0).abs() < 1e-12);
        // frozen from an independent numpy statevector run
        assert!((success_prob_known_t(64, 1, 6).unwrap() - 0.996585680786799).abs() < 1e-12);
        assert_eq!(success_prob_known_t(4, 0, 1), Err(GroverError::NoMarked));
        assert!(success_prob_known_t(4, 5, 1).is_err());
    }

    #[test]
    fn closed_form_matches_statevector_small() {
        for n in 1..=16 {
            for t in 1..=n {
                let marked: Vec<usize> = (0..t).map(|i| (i * 7) % n).collect();
                if marked.iter().collect::<std::collections::BTreeSet<_>>().len() != t {
                    continue;
                }
                for j in 0..=10 {
                    let a = success_prob_known_t(n, t, j).unwrap();
                    let b = statevector_success_prob(n, &marked, j).unwrap();
                    assert!((a - b).abs() < 1e-9, "n={n} t={t} j={j}: {a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn known_count_examples() {
        let mut ledger = QueryLedger::new();
        let one = SearchSpace::from_marked(1, [0]);
        let out = grover_known_count(&one, 1, &mut rng(1), &mut ledger).unwrap();
        assert_eq!((out.found, out.index, out.queries), (true, 0, 1));

        let four = SearchSpace::from_marked(4, [2]);
        let mut r = rng(2);
        for _ in 0..1000 {
            let out = grover_known_count(&four, 1, &mut r, &mut ledger).unwrap();
            assert_eq!((out.found, out.index, out.queries), (true, 2, 2));
        }

        let all = SearchSpace::from_predicate(64, |_| true);
        let out = grover_known_count(&all, 64, &mut r, &mut ledger).unwrap();
        assert!(out.found);
        assert_eq!(out.queries, 1);
    }

    #[test]
    fn known_count_errors() {
        let mut ledger = QueryLedger::new();
        let s = SearchSpace::from_marked(8, [1, 2]);
        assert_eq!(
            grover_known_count(&s, 0, &mut rng(0), &mut ledger),
            Err(GroverError::NoMarked)
        );
        assert_eq!(
            grover_known_count(&s, 3, &mut rng(0), &mut ledger),
            Err(GroverError::CountMismatch { claimed: 3, actual: 2 })
        );
        assert_eq!(ledger.count(), 0);
    }

    #[test]
    fn known_count_charge_is_deterministic() {
        let mut r = rng(3);
        for (n, t) in [(100, 1), (100, 7), (1000, 3), (37, 37), (4096, 1)] {
            let s = SearchSpace::from_marked(n, 0..t);
            let expected = (FRAC_PI_4 * (n as f64 / t as f64).sqrt()).floor() as u64 + 1;
            for _ in 0..20 {
                let mut ledger = QueryLedger::new();
                let out = grover_known_count(&s, t, &mut r, &mut ledger).unwrap();
                assert_eq!(out.queries, expected);
                assert_eq!(ledger.count(), expected);
                if out.found {
                    assert!(s.is_marked(out.index));
                } else {
                    assert!(!s.is_marked(out.index));
                }
            }
        }
    }

    #[test]
    fn unknown_count_empty_space_hits_cutoff() {
        let cfg = GroverConfig::default();
        let s = SearchSpace::from_marked(100, []);
        let mut r = rng(4);
        for _ in 0..500 {
            let mut ledger = QueryLedger::new();
            let out = grover_unknown_count(&s, &mut r, &cfg, &mut ledger);
            assert!(!out.found);
            assert!(out.queries <= 30, "{}", out.queries);
            assert_eq!(out.queries, ledger.count());
        }
    }

    #[test]
    fn unknown_count_single_element() {
        let cfg = GroverConfig::default();
        let s = SearchSpace::from_marked(1, [0]);
        let mut ledger = QueryLedger::new();
        let out = grover_unknown_count(&s, &mut rng(5), &cfg, &mut ledger);
        assert!(out.found);
        assert_eq!(out.index, 0);
        assert_eq!(out.queries, 1);
    }

    #[test]
    fn unknown_count_mean_queries_quarter_marked() {
        // N=256, t=64: sqrt(N/t) = 2, so the mean charge stays within a
        // small multiple of 4 * sqrt(N/t) = 8.
        let cfg = GroverConfig::default();
        let s = SearchSpace::from_marked(256, (0..256).step_by(4));
        let mut r = rng(6);
        let trials = 10_000;
        let mut total = 0u64;
        let mut found = 0;
        for _ in 0..trials {
            let mut ledger = QueryLedger::new();
            let out = grover_unknown_count(&s, &mut r, &cfg, &mut ledger);
            total += out.queries;
            if out.found {
                assert!(s.is_marked(out.index));
                found += 1;
            }
        }
        let mean = total as f64 / trials as f64;
        assert!(mean <= 8.0, "mean {mean}");
        assert_eq!(found, trials);
    }

    #[test]
    fn unknown_count_false_negative_rate() {
        let cfg = GroverConfig::default();
        let mut r = rng(7);
        for n in [4usize, 16, 64, 256, 1024] {
            let s = SearchSpace::from_marked(n, [n / 3]);
            let trials = 4000;
            let misses = (0..trials)
                .filter(|_| !grover_unknown_count(&s, &mut r, &cfg, &mut QueryLedger::new()).found)
                .count();
            let rate = misses as f64 / trials as f64;
            assert!(rate <= 0.25, "n={n}: false-negative rate {rate}");
        }
    }

    #[test]
    fn boosting() {
        let cfg = GroverConfig::default();
        let empty = SearchSpace::from_marked(64, []);
        let mut ledger = QueryLedger::new();
        let out = boosted(5, &mut rng(8), &mut ledger, |r, l| grover_unknown_count(&empty, r, &cfg, l));
        assert!(!out.found);
        assert_eq!(out.queries, ledger.count());

        // r = 1 is the inner search itself
        let s = SearchSpace::from_marked(64, [9]);
        let a = boosted(1, &mut rng(9), &mut QueryLedger::new(), |r, l| grover_unknown_count(&s, r, &cfg, l));
        let b = grover_unknown_count(&s, &mut rng(9), &cfg, &mut QueryLedger::new());
        assert_eq!(a, b);
    }

    #[test]
    fn boosting_failure_rate_is_power_of_inner() {
        // A single known-count run on N=8, t=3 fails with probability
        // 1 - sin^2(3 theta); two independent runs fail with its square.
        let s = SearchSpace::from_marked(8, [0, 1, 2]);
        let q = 1.0 - success_prob_known_t(8, 3, known_count_iterations(8, 3)).unwrap();
        let mut r = rng(10);
        let trials = 40_000;
        let fails = (0..trials)
            .filter(|_| {
                !boosted(2, &mut r, &mut QueryLedger::new(), |r, l| {
                    grover_known_count(&s, 3, r, l).unwrap()
                })
                .found
            })
            .count();
        let rate = fails as f64 / trials as f64;
        let sd = (q * q * (1.0 - q * q) / trials as f64).sqrt();
        assert!((rate - q * q).abs() < 4.0 * sd + 1e-3, "rate {rate} vs {}", q * q);
    }

    #[test]
    fn same_seed_same_outcome() {
        let cfg = GroverConfig::default();
        let s = SearchSpace::from_marked(500, [3, 77, 400]);
        let a = grover_unknown_count(&s, &mut rng(11), &cfg, &mut QueryLedger::new());
        let b = grover_unknown_count(&s, &mut rng(11), &cfg, &mut QueryLedger::new());
        assert_eq!(a, b);
    }
}
