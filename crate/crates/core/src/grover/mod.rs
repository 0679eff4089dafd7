//! Exact classical simulation of Grover search and its variants.
//!
//! A standard Grover run from the uniform state never leaves the
//! two-dimensional subspace spanned by the uniform superpositions over marked
//! and unmarked indices. After `j` iterations the marked mass is
//! `sin^2((2j + 1) * theta)` with `theta = asin(sqrt(t / N))`, and within each
//! half the amplitudes stay uniform. The simulator therefore samples a
//! measurement outcome in O(1) instead of evolving a statevector;
//! [`statevector_success_prob`] is the explicit reference it is checked
//! against.
//!
//! Accounting: every Grover iteration is one oracle call and every measured
//! index is verified with one further probe before it is reported.

mod config;
mod minimum;
mod search;
mod space;
mod statevector;

pub use config::{BoostPolicy, GroverConfig};
pub use minimum::{find_min_index, find_min_value};
pub use search::{
    boosted, grover_known_count, grover_unknown_count, known_count_iterations,
    success_prob_known_t, SearchOutcome,
};
pub use space::SearchSpace;
pub use statevector::{statevector_success_prob, STATEVECTOR_MAX_DIM};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GroverError {
    #[error("search needs at least one marked element (t = 0)")]
    NoMarked,
    #[error("marked count {t} exceeds search space size {n}")]
    CountTooLarge { t: usize, n: usize },
    #[error("claimed marked count {claimed} but the space holds {actual}")]
    CountMismatch { claimed: usize, actual: usize },
    #[error("search space must be non-empty")]
    EmptySpace,
    #[error("statevector dimension {0} exceeds the cap of {STATEVECTOR_MAX_DIM}")]
    DimensionTooLarge(usize),
    #[error("invalid configuration: {0}")]
    Config(String),
}
