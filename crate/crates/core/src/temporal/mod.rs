//! User-join curves (UJCs), growth categories and edge join-time differences.

mod category;
mod timediff;
mod ujc;

use thiserror::Error;

pub use category::{
    categorize_ujc, normalized_area, Category, FitKind, GrowthCategory, FIT_THRESHOLD,
};
pub use timediff::{
    edge_time_differences, link_probability_estimate, write_timediff_csv, TimeDiffBin,
    TimeDiffDistribution, MIN_NONZERO_BINS,
};
pub use ujc::{
    build_ujc, join_events_from_graph, read_join_events, write_category_report, write_ujc_csv,
    JoinEvent, UjCurve, SAMPLE_SPACING_WEEKS, SECONDS_PER_WEEK,
};

#[derive(Debug, Error)]
pub enum TemporalError {
    #[error("degenerate span: {0}")]
    DegenerateSpan(String),
    #[error("insufficient data: {0}")]
    InsufficientData(String),
    #[error(transparent)]
    Fit(#[from] crate::fitting::FitError),
    #[error("line {line}: {message}")]
    Parse { line: u64, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
