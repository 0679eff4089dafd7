use super::GroverError;

/// How many independent repetitions a bounded-error search gets inside the
/// connectivity algorithms, as a function of the graph size `n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoostPolicy {
    /// `max(1, ceil(log2 n))`
    Log2,
    /// `max(1, ceil(sqrt(log2 n)))`
    SqrtLog2,
    Fixed(usize),
}

impl BoostPolicy {
    pub fn reps(self, n: usize) -> usize {
        let log = if n <= 1 { 0.0 } else { (n as f64).log2() };
        let r = match self {
            BoostPolicy::Log2 => log.ceil() as usize,
            BoostPolicy::SqrtLog2 => log.sqrt().ceil() as usize,
            BoostPolicy::Fixed(r) => r,
        };
        r.max(1)
    }
}

impl std::str::FromStr for BoostPolicy {
    type Err = GroverError;

    /// `log2`, `sqrtlog2`, or a positive integer.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "log2" => Ok(BoostPolicy::Log2),
            "sqrtlog2" => Ok(BoostPolicy::SqrtLog2),
            other => match other.parse::<usize>() {
                Ok(r) if r >= 1 => Ok(BoostPolicy::Fixed(r)),
                _ => Err(GroverError::Config(format!("unknown boost policy {other:?}"))),
            },
        }
    }
}

impl std::fmt::Display for BoostPolicy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BoostPolicy::Log2 => write!(f, "log2"),
            BoostPolicy::SqrtLog2 => write!(f, "sqrtlog2"),
            BoostPolicy::Fixed(r) => write!(f, "{r}"),
        }
    }
}

/// Schedule constants for the unknown-count and minimum-finding searches.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GroverConfig {
    /// Growth factor of the iteration bound between unknown-count rounds.
    pub bbht_lambda: f64,
    /// An unknown-count search claims "no solution" after this many
    /// multiples of `sqrt(N)` charged queries.
    pub bbht_cutoff_factor: f64,
    /// Total query budget of minimum finding, in multiples of `sqrt(N)`.
    pub dh_budget_factor: f64,
    pub boost: BoostPolicy,
    pub rng_seed: u64,
}

impl Default for GroverConfig {
    fn default() -> Self {
        Self {
            bbht_lambda: 8.0 / 7.0,
            bbht_cutoff_factor: 3.0,
            dh_budget_factor: 10.0,
            boost: BoostPolicy::Log2,
            rng_seed: 0,
        }
    }
}

impl GroverConfig {
    pub fn validate(&self) -> Result<(), GroverError> {
        if !(self.bbht_lambda > 1.0 && self.bbht_lambda <= 4.0 / 3.0) {
            return Err(GroverError::Config(format!(
                "bbht_lambda must lie in (1, 4/3], got {}",
                self.bbht_lambda
            )));
        }
        if self.bbht_cutoff_factor.is_nan() || self.bbht_cutoff_factor <= 0.0 {
            return Err(GroverError::Config("bbht_cutoff_factor must be positive".into()));
        }
        if self.dh_budget_factor.is_nan() || self.dh_budget_factor <= 0.0 {
            return Err(GroverError::Config("dh_budget_factor must be positive".into()));
        }
        if self.boost == BoostPolicy::Fixed(0) {
            return Err(GroverError::Config("boost repetitions must be at least 1".into()));
        }
        Ok(())
    }

    /// Charged-query cutoff of an unknown-count search over `size` elements.
    pub fn bbht_budget(&self, size: usize) -> u64 {
        (self.bbht_cutoff_factor * (size as f64).sqrt()).ceil() as u64
    }

    /// Total charged-query budget of minimum finding over `size` elements.
    pub fn dh_budget(&self, size: usize) -> u64 {
        (self.dh_budget_factor * (size as f64).sqrt()).ceil() as u64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn boost_reps() {
        assert_eq!(BoostPolicy::Log2.reps(1), 1);
        assert_eq!(BoostPolicy::Log2.reps(2), 1);
        assert_eq!(BoostPolicy::Log2.reps(128), 7);
        assert_eq!(BoostPolicy::Log2.reps(129), 8);
        assert_eq!(BoostPolicy::SqrtLog2.reps(1024), 4);
        assert_eq!(BoostPolicy::SqrtLog2.reps(256), 3);
        assert_eq!(BoostPolicy::Fixed(3).reps(1 << 20), 3);
        assert_eq!("sqrtlog2".parse::<BoostPolicy>().unwrap(), BoostPolicy::SqrtLog2);
        assert_eq!("5".parse::<BoostPolicy>().unwrap(), BoostPolicy::Fixed(5));
        assert!("0".parse::<BoostPolicy>().is_err());
    }

    #[test]
    fn config_validation() {
        assert!(GroverConfig::default().validate().is_ok());
        let bad = GroverConfig { bbht_lambda: 1.5, ..Default::default() };
        assert!(bad.validate().is_err());
        let bad = GroverConfig { bbht_lambda: 1.0, ..Default::default() };
        assert!(bad.validate().is_err());
        let bad = GroverConfig { bbht_cutoff_factor: 0.0, ..Default::default() };
        assert!(bad.validate().is_err());
        let bad = GroverConfig { boost: BoostPolicy::Fixed(0), ..Default::default() };
        assert!(bad.validate().is_err());
        assert_eq!(GroverConfig::default().bbht_budget(100), 30);
    }
}
