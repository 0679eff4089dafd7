use rand::Rng;

use crate::ledger::QueryLedger;

/// A search space `[0, N)` with a marked subset.
///
/// The simulator keeps the marked set in sorted form so it can sample
/// measurement outcomes; that enumeration is privileged and never charged.
/// Algorithms see the predicate only through [`SearchSpace::probe`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchSpace {
    size: usize,
    marked: Vec<usize>,
}

impl SearchSpace {
    /// Marked indices may arrive in any order; duplicates and out-of-range
    /// entries are dropped.
    pub fn from_marked(size: usize, marked: impl IntoIterator<Item = usize>) -> Self {
        let mut marked: Vec<usize> = marked.into_iter().filter(|&i| i < size).collect();
        marked.sort_unstable();
        marked.dedup();
        Self { size, marked }
    }

    /// Enumerate `pred` over the whole space (uncounted).
    pub fn from_predicate(size: usize, pred: impl Fn(usize) -> bool) -> Self {
        Self {
            size,
            marked: (0..size).filter(|&i| pred(i)).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of marked elements `t` (privileged).
    pub fn marked_count(&self) -> usize {
        self.marked.len()
    }

    /// The marked set in increasing order (privileged).
    pub fn marked(&self) -> &[usize] {
        &self.marked
    }

    /// Uncounted membership test.
    pub fn is_marked(&self, i: usize) -> bool {
        self.marked.binary_search(&i).is_ok()
    }

    /// Counted predicate evaluation.
    pub fn probe(&self, i: usize, ledger: &mut QueryLedger) -> bool {
        ledger.charge();
        self.is_marked(i)
    }

    /// Restriction to marked indices strictly below `bound`.
    pub fn below(&self, bound: usize) -> Self {
        let cut = self.marked.partition_point(|&i| i < bound);
        Self {
            size: self.size,
            marked: self.marked[..cut].to_vec(),
        }
    }

    pub(crate) fn sample_marked<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        self.marked[rng.gen_range(0..self.marked.len())]
    }

    /// Uniform unmarked index; falls back to a marked one when everything is
    /// marked.
    pub(crate) fn sample_unmarked<R: Rng + ?Sized>(&self, rng: &mut R) -> usize {
        let free = self.size - self.marked.len();
        if free == 0 {
            return self.sample_marked(rng);
        }
        // r-th unmarked index: skip over every marked index at or below it
        let mut idx = rng.gen_range(0..free);
        for &m in &self.marked {
            if m <= idx {
                idx += 1;
            } else {
                break;
            }
        }
        idx
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn construction_and_probe() {
        let s = SearchSpace::from_marked(8, [5, 1, 5, 9]);
        assert_eq!(s.marked(), &[1, 5]);
        assert_eq!(s, SearchSpace::from_predicate(8, |i| i == 1 || i == 5));
        let mut ledger = QueryLedger::new();
        assert!(s.probe(5, &mut ledger));
        assert!(!s.probe(4, &mut ledger));
        assert_eq!(ledger.count(), 2);
        assert_eq!(s.below(5).marked(), &[1]);
    }

    #[test]
    fn unmarked_sampling_is_uniform_over_complement() {
        let s = SearchSpace::from_marked(6, [0, 2, 3]);
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut hits = [0usize; 6];
        for _ in 0..30_000 {
            hits[s.sample_unmarked(&mut rng)] += 1;
        }
        for i in [0, 2, 3] {
            assert_eq!(hits[i], 0);
        }
        for i in [1, 4, 5] {
            assert!((9_000..11_000).contains(&hits[i]), "{hits:?}");
        }
    }
}
