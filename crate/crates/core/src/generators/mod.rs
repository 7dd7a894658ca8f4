//! Random network generators: temporal preferential attachment (TPA) plus the
//! Barabási–Albert and Watts–Strogatz baselines.
//!
//! Every generator draws from a [`ModelRng`] seeded with a 64-bit integer.
//! ChaCha8 is platform independent, so a seed reproduces the same graph
//! everywhere.

mod ba;
mod schedule;
mod timediff;
mod tpa;
mod ws;

use rand_chacha::ChaCha8Rng;
use thiserror::Error;

pub use ba::generate_ba;
pub use schedule::{growth_sequence, linear_sequence, GrowthSchedule, ScheduleKind, LINEAR_BATCH};
pub use timediff::TimeDiffFunction;
pub use tpa::{generate_tpa, GeneratorParams, DEFAULT_RETRY_CAP};
pub use ws::generate_ws;

pub type ModelRng = ChaCha8Rng;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("no {kind} schedule sums to {target} vertices")]
    UnreachableTarget { kind: ScheduleKind, target: usize },
}

pub(crate) fn invalid(msg: impl Into<String>) -> GenError {
    GenError::InvalidParams(msg.into())
}
