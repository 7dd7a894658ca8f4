//! Graph containers shared by the generators, metrics and ingestion code.
//!
//! Three containers exist:
//!
//! - [`TimeStampedGraph`]: directed (or undirected) simple graph whose
//!   vertices carry a first-activity timestamp. Self-loops are allowed since
//!   reply graphs contain them.
//! - [`TimeGroupedGraph`]: undirected simple graph whose vertices carry the
//!   integer time group they were inserted in. Self-loops are rejected.
//! - [`SimpleGraph`]: immutable undirected projection with sorted adjacency
//!   lists, the input of every structural metric.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

/// Dense, 0-based vertex identifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(u32);

impl VertexId {
    pub fn new(index: usize) -> Self {
        VertexId(u32::try_from(index).expect("vertex index exceeds u32 range"))
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {0} is not registered in the graph")]
    UnknownVertex(VertexId),
    #[error("self-loop on vertex {0} is not allowed in this graph")]
    SelfLoop(VertexId),
}

/// Read access to vertex and edge sets, regardless of container.
pub trait Topology {
    fn vertex_count(&self) -> usize;

    fn edge_count(&self) -> usize;

    /// Every stored edge exactly once. For undirected containers the order of
    /// the pair is unspecified.
    fn edge_pairs(&self) -> Box<dyn Iterator<Item = (VertexId, VertexId)> + '_>;
}

#[inline]
fn undirected_key(u: VertexId, v: VertexId) -> (u32, u32) {
    if u.0 <= v.0 {
        (u.0, v.0)
    } else {
        (v.0, u.0)
    }
}

/// Graph whose vertices carry a first-activity timestamp (seconds since epoch).
///
/// For directed graphs `out_adj[u]` holds the heads of `u`'s edges and
/// `in_adj[v]` the tails pointing at `v`. A self-loop `(v, v)` appears once in
/// each list, so it contributes one to both the in- and out-degree of `v`.
/// For undirected graphs only `out_adj` is populated and holds both endpoints.
#[derive(Debug, Clone, Default)]
pub struct TimeStampedGraph {
    directed: bool,
    join_time: Vec<i64>,
    edges: Vec<(VertexId, VertexId)>,
    edge_set: HashSet<(u32, u32)>,
    out_adj: Vec<Vec<VertexId>>,
    in_adj: Vec<Vec<VertexId>>,
}

impl TimeStampedGraph {
    pub fn new(directed: bool) -> Self {
        TimeStampedGraph {
            directed,
            ..Default::default()
        }
    }

    pub fn is_directed(&self) -> bool {
        self.directed
    }

    pub fn add_vertex(&mut self, join_time: i64) -> VertexId {
        let id = VertexId::new(self.join_time.len());
        self.join_time.push(join_time);
        self.out_adj.push(Vec::new());
        if self.directed {
            self.in_adj.push(Vec::new());
        }
        id
    }

    fn check(&self, v: VertexId) -> Result<(), GraphError> {
        if v.index() < self.join_time.len() {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex(v))
        }
    }

    fn key(&self, u: VertexId, v: VertexId) -> (u32, u32) {
        if self.directed {
            (u.0, v.0)
        } else {
            undirected_key(u, v)
        }
    }

    /// Inserts `(u, v)`. Returns `Ok(false)` when the edge is already present.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<bool, GraphError> {
        self.check(u)?;
        self.check(v)?;
        if !self.edge_set.insert(self.key(u, v)) {
            return Ok(false);
        }
        self.edges.push((u, v));
        if self.directed {
            self.out_adj[u.index()].push(v);
            self.in_adj[v.index()].push(u);
        } else {
            self.out_adj[u.index()].push(v);
            if u != v {
                self.out_adj[v.index()].push(u);
            }
        }
        Ok(true)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_set.contains(&self.key(u, v))
    }

    pub fn join_time(&self, v: VertexId) -> i64 {
        self.join_time[v.index()]
    }

    pub fn join_times(&self) -> &[i64] {
        &self.join_time
    }

    /// Edges in insertion order.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        (0..self.join_time.len()).map(VertexId::new)
    }

    pub fn self_loop_count(&self) -> usize {
        self.edges.iter().filter(|(u, v)| u == v).count()
    }

    /// `|{u : (u, v) in E}|`. Equals the plain degree for undirected graphs.
    pub fn in_degree(&self, v: VertexId) -> usize {
        if self.directed {
            self.in_adj[v.index()].len()
        } else {
            self.out_adj[v.index()].len()
        }
    }

    /// `|{u : (v, u) in E}|`. Equals the plain degree for undirected graphs.
    pub fn out_degree(&self, v: VertexId) -> usize {
        self.out_adj[v.index()].len()
    }

    /// Number of distinct neighbours in either direction, `v` itself included
    /// when it carries a self-loop.
    pub fn total_degree(&self, v: VertexId) -> usize {
        if !self.directed {
            return self.out_adj[v.index()].len();
        }
        let mut seen: Vec<VertexId> = self.out_adj[v.index()]
            .iter()
            .chain(self.in_adj[v.index()].iter())
            .copied()
            .collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }
}

impl PartialEq for TimeStampedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.directed == other.directed
            && self.join_time == other.join_time
            && self.edge_set == other.edge_set
    }
}

impl Eq for TimeStampedGraph {}

impl Topology for TimeStampedGraph {
    fn vertex_count(&self) -> usize {
        self.join_time.len()
    }

    fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn edge_pairs(&self) -> Box<dyn Iterator<Item = (VertexId, VertexId)> + '_> {
        Box::new(self.edges.iter().copied())
    }
}

/// Undirected simple graph whose vertices carry the iteration (time group)
/// in which they were inserted.
#[derive(Debug, Clone, Default)]
pub struct TimeGroupedGraph {
    time_group: Vec<u32>,
    adj: Vec<Vec<VertexId>>,
    edges: Vec<(VertexId, VertexId)>,
    edge_set: HashSet<(u32, u32)>,
}

impl TimeGroupedGraph {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_capacity(vertices: usize, edges: usize) -> Self {
        TimeGroupedGraph {
            time_group: Vec::with_capacity(vertices),
            adj: Vec::with_capacity(vertices),
            edges: Vec::with_capacity(edges),
            edge_set: HashSet::with_capacity(edges),
        }
    }

    pub fn add_vertex(&mut self, time_group: u32) -> VertexId {
        let id = VertexId::new(self.time_group.len());
        self.time_group.push(time_group);
        self.adj.push(Vec::new());
        id
    }

    /// Inserts the undirected edge `{u, v}`. Returns `Ok(false)` when present.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<bool, GraphError> {
        for w in [u, v] {
            if w.index() >= self.time_group.len() {
                return Err(GraphError::UnknownVertex(w));
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if !self.edge_set.insert(undirected_key(u, v)) {
            return Ok(false);
        }
        self.edges.push((u, v));
        self.adj[u.index()].push(v);
        self.adj[v.index()].push(u);
        Ok(true)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_set.contains(&undirected_key(u, v))
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v.index()].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn time_group(&self, v: VertexId) -> u32 {
        self.time_group[v.index()]
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v.index()]
    }

    /// Edges in insertion order, oriented as they were added.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    /// Converts into an undirected [`TimeStampedGraph`] whose timestamps are
    /// the time groups. This is the form written to edge-list files.
    pub fn to_time_stamped(&self) -> TimeStampedGraph {
        let mut g = TimeStampedGraph::new(false);
        for &group in &self.time_group {
            g.add_vertex(i64::from(group));
        }
        for &(u, v) in &self.edges {
            g.add_edge(u, v).expect("endpoints registered");
        }
        g
    }

    /// Rebuilds a grouped graph from an undirected time-stamped one. Fails on
    /// self-loops; timestamps outside the `u32` range are rejected as well.
    pub fn from_time_stamped(g: &TimeStampedGraph) -> Result<Self, GraphError> {
        let mut out = TimeGroupedGraph::with_capacity(g.vertex_count(), g.edge_count());
        for v in g.vertices() {
            let group = u32::try_from(g.join_time(v)).map_err(|_| GraphError::UnknownVertex(v))?;
            out.add_vertex(group);
        }
        for &(u, v) in g.edges() {
            out.add_edge(u, v)?;
        }
        Ok(out)
    }
}

impl Topology for TimeGroupedGraph {
    fn vertex_count(&self) -> usize {
        self.time_group.len()
    }

    fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn edge_pairs(&self) -> Box<dyn Iterator<Item = (VertexId, VertexId)> + '_> {
        Box::new(self.edges.iter().copied())
    }
}

/// Immutable undirected simple graph: no self-loops, no parallel edges,
/// adjacency lists sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SimpleGraph {
    adj: Vec<Vec<u32>>,
    edge_count: usize,
}

impl SimpleGraph {
    /// Builds from arbitrary pairs; loops are dropped and duplicates (in either
    /// orientation) collapse.
    pub fn from_pairs<I>(vertex_count: usize, pairs: I) -> Self
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let mut adj = vec![Vec::new(); vertex_count];
        for (u, v) in pairs {
            if u == v {
                continue;
            }
            adj[u.index()].push(v.0);
            adj[v.index()].push(u.0);
        }
        let mut twice = 0;
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
            twice += list.len();
        }
        SimpleGraph {
            adj,
            edge_count: twice / 2,
        }
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }
}

impl Topology for SimpleGraph {
    fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    fn edge_count(&self) -> usize {
        self.edge_count
    }

    fn edge_pairs(&self) -> Box<dyn Iterator<Item = (VertexId, VertexId)> + '_> {
        Box::new(self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .filter(move |&&v| (v as usize) > u)
                .map(move |&v| (VertexId::new(u), VertexId(v)))
        }))
    }
}

/// Drops self-loops and collapses `(u, v)` / `(v, u)` into one undirected edge.
pub fn undirected_projection<G: Topology + ?Sized>(g: &G) -> SimpleGraph {
    SimpleGraph::from_pairs(g.vertex_count(), g.edge_pairs())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(i: usize) -> VertexId {
        VertexId::new(i)
    }

    #[test]
    fn add_vertices_without_edges() {
        let mut g = TimeStampedGraph::new(true);
        for t in 0..3 {
            g.add_vertex(t);
        }
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn duplicate_edge_is_rejected() {
        let mut g = TimeStampedGraph::new(true);
        let a = g.add_vertex(0);
        let b = g.add_vertex(0);
        assert_eq!(g.add_edge(a, b), Ok(true));
        assert_eq!(g.add_edge(a, b), Ok(false));
        assert_eq!(g.edge_count(), 1);
        // the reverse direction is a distinct edge in a digraph
        assert_eq!(g.add_edge(b, a), Ok(true));
    }

    #[test]
    fn undirected_time_stamped_dedupes_both_orientations() {
        let mut g = TimeStampedGraph::new(false);
        let a = g.add_vertex(0);
        let b = g.add_vertex(0);
        assert_eq!(g.add_edge(a, b), Ok(true));
        assert_eq!(g.add_edge(b, a), Ok(false));
    }

    #[test]
    fn self_loops_in_time_stamped_graph() {
        let mut g = TimeStampedGraph::new(true);
        let a = g.add_vertex(0);
        assert_eq!(g.add_edge(a, a), Ok(true));
        assert_eq!(g.self_loop_count(), 1);
        assert_eq!(g.in_degree(a), 1);
        assert_eq!(g.out_degree(a), 1);
        assert_eq!(g.total_degree(a), 1);
    }

    #[test]
    fn self_loop_rejected_in_grouped_graph() {
        let mut g = TimeGroupedGraph::new();
        let a = g.add_vertex(0);
        assert_eq!(g.add_edge(a, a), Err(GraphError::SelfLoop(a)));
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn unknown_vertex_rejected() {
        let mut g = TimeStampedGraph::new(true);
        let a = g.add_vertex(0);
        assert_eq!(g.add_edge(a, v(7)), Err(GraphError::UnknownVertex(v(7))));
        let mut h = TimeGroupedGraph::new();
        h.add_vertex(0);
        assert!(matches!(
            h.add_edge(v(0), v(1)),
            Err(GraphError::UnknownVertex(_))
        ));
    }

    #[test]
    fn grouped_degrees_sum_to_twice_edges() {
        let mut g = TimeGroupedGraph::new();
        for _ in 0..4 {
            g.add_vertex(0);
        }
        g.add_edge(v(0), v(1)).unwrap();
        g.add_edge(v(1), v(2)).unwrap();
        g.add_edge(v(2), v(0)).unwrap();
        assert_eq!(g.add_edge(v(0), v(2)), Ok(false));
        assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.edge_count());
        assert_eq!(g.degree(v(3)), 0);
    }

    #[test]
    fn projection_collapses_reciprocal_edges_and_loops() {
        let mut g = TimeStampedGraph::new(true);
        let a = g.add_vertex(0);
        let b = g.add_vertex(0);
        g.add_edge(a, b).unwrap();
        g.add_edge(b, a).unwrap();
        g.add_edge(a, a).unwrap();
        let p = undirected_projection(&g);
        assert_eq!(p.edge_count(), 1);
        assert_eq!(p.neighbors(0), &[1]);
    }

    #[test]
    fn projection_of_empty_graph() {
        let g = TimeStampedGraph::new(true);
        let p = undirected_projection(&g);
        assert_eq!(p.vertex_count(), 0);
        assert_eq!(p.edge_count(), 0);
    }

    #[test]
    fn directed_cycle_projects_to_triangle() {
        let mut g = TimeStampedGraph::new(true);
        for _ in 0..3 {
            g.add_vertex(0);
        }
        g.add_edge(v(0), v(1)).unwrap();
        g.add_edge(v(1), v(2)).unwrap();
        g.add_edge(v(2), v(0)).unwrap();
        let p = undirected_projection(&g);
        assert_eq!(p.edge_count(), 3);
        for i in 0..3 {
            assert_eq!(p.degree(i), 2);
        }
        assert_eq!(undirected_projection(&p), p);
    }

    #[test]
    fn grouped_round_trips_through_time_stamped() {
        let mut g = TimeGroupedGraph::new();
        g.add_vertex(0);
        g.add_vertex(1);
        g.add_vertex(1);
        g.add_edge(v(2), v(0)).unwrap();
        let ts = g.to_time_stamped();
        assert!(!ts.is_directed());
        let back = TimeGroupedGraph::from_time_stamped(&ts).unwrap();
        assert_eq!(back.edges(), g.edges());
        assert_eq!(back.time_group(v(2)), 1);
    }
}
