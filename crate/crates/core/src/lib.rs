//! Temporal network toolkit.
//!
//! - [`graph`], [`components`], [`edge_list`]: containers, weakly connected
//!   components and the edge-list file format.
//! - [`generators`]: temporal preferential attachment plus BA / WS baselines.
//! - [`metrics`]: topological features and evaluation metrics.
//! - [`fitting`]: polynomial, MMF and exponential curve fits, correlation and
//!   cross-validated linear regression.
//! - [`temporal`]: user-join curves, growth categories and join-time
//!   difference distributions.
//! - [`ingest`]: comment-log parsing, cleaning, community selection and
//!   reply-graph construction.

pub mod components;
pub mod edge_list;
pub mod fitting;
pub mod generators;
pub mod graph;
pub mod ingest;
pub mod metrics;
pub mod temporal;
pub mod union_find;

pub use components::{weakly_connected_components, ComponentPartition};
pub use graph::{
    undirected_projection, GraphError, SimpleGraph, TimeGroupedGraph, TimeStampedGraph, Topology,
    VertexId,
};
