//! Topological features of reply graphs and evaluation metrics of generated
//! networks.
//!
//! Clustering, triangles, components and shortest paths are computed on the
//! undirected projection with self-loops removed. Density and the degree
//! features use the directed edge set.

mod basic;
mod clustering;
mod features;
mod paths;
mod powerlaw;

use thiserror::Error;

pub use basic::{
    component_features, days, degree_features, density, ComponentFeatures, DegreeFeatures,
    SECONDS_PER_DAY,
};
pub use clustering::{avg_clustering, local_clustering, triangle_count, triangles_per_vertex};
pub use features::{feature_record, format_sig, write_feature_csv, FeatureRecord, FEATURE_HEADER};
pub use paths::{avg_shortest_path, PathOptions, EXACT_PATH_LIMIT};
pub use powerlaw::{fit_power_law_exponent, hurwitz_zeta, PowerLawFit};

use crate::graph::{SimpleGraph, Topology};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MetricError {
    #[error("degenerate graph: {0}")]
    DegenerateGraph(String),
    #[error("insufficient data: {0}")]
    InsufficientData(String),
}

/// Metrics reported for generated networks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalMetrics {
    pub cc: f64,
    /// maximum total degree
    pub d_max: usize,
    pub avg_sp: f64,
    /// `None` when the degree sequence could not be fitted
    pub gamma: Option<f64>,
}

/// CC, maximum degree, average shortest path and power-law exponent of an
/// undirected graph.
pub fn eval_metrics(g: &SimpleGraph, paths: &PathOptions) -> Result<EvalMetrics, MetricError> {
    let degrees: Vec<u64> = (0..g.vertex_count())
        .map(|v| g.degree(v) as u64)
        .filter(|&d| d > 0)
        .collect();
    let gamma = match fit_power_law_exponent(&degrees) {
        Ok(fit) if !fit.degenerate => Some(fit.gamma),
        Ok(_) => None,
        Err(e) => {
            log::warn!("power-law fit skipped: {e}");
            None
        }
    };
    Ok(EvalMetrics {
        cc: avg_clustering(g),
        d_max: g.max_degree(),
        avg_sp: avg_shortest_path(g, paths)?,
        gamma,
    })
}
