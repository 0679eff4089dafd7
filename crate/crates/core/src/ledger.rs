//! Oracle probe accounting.

/// Monotone counter of oracle probes made during one trial.
///
/// Every read of an adjacency-matrix cell, a list slot, a search predicate
/// or a Grover iteration costs one unit. A ledger is owned by exactly one
/// trial and is never shared between concurrently running trials.
#[derive(Debug, Default, Clone, PartialEq, Eq)]
pub struct QueryLedger {
    count: u64,
}

impl QueryLedger {
    pub fn new() -> Self {
        Self::default()
    }

    /// Charge a single probe.
    #[inline]
    pub fn charge(&mut self) {
        self.count += 1;
    }

    /// Charge `units` probes at once.
    #[inline]
    pub fn charge_many(&mut self, units: u64) {
        self.count += units;
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    /// Probes charged since `mark`, where `mark` is an earlier `count()`.
    pub fn since(&self, mark: u64) -> u64 {
        self.count - mark
    }

    /// Start a new trial.
    pub fn reset(&mut self) {
        self.count = 0;
    }
}
