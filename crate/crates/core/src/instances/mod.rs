//! Generators for the lower-bound families and random test corpora.
//!
//! Every generator is a pure function of its spec (and seed) and emits a
//! validated graph whose ground truth is known by construction.

mod cycles;
mod gadget;
mod parity;
mod random;

pub use cycles::{cycle_lengths, gen_cycle_instance, two_swap, CycleSpec, CycleVariant};
pub(crate) use cycles::split_range;
pub use gadget::{gadget_graph, gen_origin_gadget, GadgetSpec, SlotAssignment};
pub use parity::{count_cycles, gen_parity_graph, parity, ParitySpec};
pub use random::{gen_random_gnm, gen_random_list, gen_random_matrix};

use thiserror::Error;

use crate::graph::GraphError;

#[derive(Debug, Error)]
pub enum InstanceError {
    #[error("invalid instance spec: {0}")]
    InvalidSpec(String),
    #[error("two-swap precondition violated: {0}")]
    SwapPrecondition(String),
    #[error("not a permutation graph: {0}")]
    NotPermutation(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub(crate) fn spec_err(msg: impl Into<String>) -> InstanceError {
    InstanceError::InvalidSpec(msg.into())
}

/// Parse a bit string such as `"0110"`.
pub fn parse_bits(s: &str) -> Result<Vec<bool>, InstanceError> {
    s.chars()
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(spec_err(format!("invalid bit {c:?}"))),
        })
        .collect()
}

/// Bit string of length `p` spelled by the low bits of `code`, bit `i` first.
pub fn bits_of(code: u64, p: usize) -> Vec<bool> {
    (0..p).map(|i| (code >> i) & 1 == 1).collect()
}
