use super::MetricError;
use crate::components::{weakly_connected_components, ComponentPartition};
use crate::graph::{TimeStampedGraph, Topology};

pub const SECONDS_PER_DAY: f64 = 86_400.0;

/// `|E| / (|V| (|V| - 1))` with self-loops left out of `|E|`.
pub fn density(g: &TimeStampedGraph) -> Result<f64, MetricError> {
    let n = g.vertex_count();
    if n < 2 {
        return Err(MetricError::DegenerateGraph(format!(
            "density needs at least 2 vertices, got {n}"
        )));
    }
    let edges = (g.edge_count() - g.self_loop_count()) as f64;
    Ok(edges / (n as f64 * (n as f64 - 1.0)))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DegreeFeatures {
    pub avg_deg: f64,
    pub avg_in_deg: f64,
    pub max_in_deg: usize,
    pub max_out_deg: usize,
}

/// Degree features from neighbour-set degrees: `d_in(v)` counts distinct
/// tails pointing at `v`, `d_out(v)` distinct heads, `d_tot(v)` distinct
/// neighbours in either direction.
pub fn degree_features(g: &TimeStampedGraph) -> Result<DegreeFeatures, MetricError> {
    let n = g.vertex_count();
    if n == 0 {
        return Err(MetricError::DegenerateGraph("graph has no vertices".into()));
    }
    let (mut tot, mut tot_in) = (0usize, 0usize);
    let (mut max_in, mut max_out) = (0usize, 0usize);
    for v in g.vertices() {
        let din = g.in_degree(v);
        tot += g.total_degree(v);
        tot_in += din;
        max_in = max_in.max(din);
        max_out = max_out.max(g.out_degree(v));
    }
    Ok(DegreeFeatures {
        avg_deg: tot as f64 / n as f64,
        avg_in_deg: tot_in as f64 / n as f64,
        max_in_deg: max_in,
        max_out_deg: max_out,
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComponentFeatures {
    pub wcc: usize,
    pub v_lc: usize,
    pub e_lc: usize,
    pub lc_ratio: f64,
    pub single: usize,
}

pub fn component_features(g: &TimeStampedGraph) -> Result<ComponentFeatures, MetricError> {
    let partition = weakly_connected_components(g);
    component_features_from(g, &partition)
}

pub(crate) fn component_features_from(
    g: &TimeStampedGraph,
    partition: &ComponentPartition,
) -> Result<ComponentFeatures, MetricError> {
    let largest = partition
        .largest()
        .ok_or_else(|| MetricError::DegenerateGraph("graph has no vertices".into()))?;
    let lc_index = partition.component_of(largest[0]);
    let e_lc = g
        .edges()
        .iter()
        .filter(|(u, _)| partition.component_of(*u) == lc_index)
        .count();
    Ok(ComponentFeatures {
        wcc: partition.len(),
        v_lc: largest.len(),
        e_lc,
        lc_ratio: largest.len() as f64 / g.vertex_count() as f64,
        single: partition.singleton_count(),
    })
}

/// Span between the earliest and latest join time, in fractional days.
pub fn days(g: &TimeStampedGraph) -> Result<f64, MetricError> {
    let times = g.join_times();
    let (Some(min), Some(max)) = (times.iter().min(), times.iter().max()) else {
        return Err(MetricError::DegenerateGraph("graph has no vertices".into()));
    };
    Ok((max - min) as f64 / SECONDS_PER_DAY)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexId;

    fn digraph(n: usize, edges: &[(usize, usize)]) -> TimeStampedGraph {
        let mut g = TimeStampedGraph::new(true);
        for i in 0..n {
            g.add_vertex(i as i64);
        }
        for &(u, v) in edges {
            g.add_edge(VertexId::new(u), VertexId::new(v)).unwrap();
        }
        g
    }

    #[test]
    fn density_examples() {
        assert_eq!(density(&digraph(2, &[(0, 1)])).unwrap(), 0.5);
        let complete = digraph(3, &[(0, 1), (1, 0), (0, 2), (2, 0), (1, 2), (2, 1)]);
        assert_eq!(density(&complete).unwrap(), 1.0);
        let cycle: Vec<(usize, usize)> = (0..10).map(|i| (i, (i + 1) % 10)).collect();
        assert!((density(&digraph(10, &cycle)).unwrap() - 10.0 / 90.0).abs() < 1e-15);
        assert!(density(&digraph(1, &[])).is_err());
    }

    #[test]
    fn density_ignores_loops() {
        let g = digraph(2, &[(0, 0), (1, 1), (0, 1), (1, 0)]);
        assert_eq!(density(&g).unwrap(), 1.0);
    }

    #[test]
    fn density_scales_with_edges() {
        let g1 = digraph(10, &[(0, 1), (2, 3)]);
        let g2 = digraph(10, &[(0, 1), (2, 3), (4, 5), (6, 7)]);
        assert!((density(&g2).unwrap() - 2.0 * density(&g1).unwrap()).abs() < 1e-15);
    }

    #[test]
    fn degree_examples() {
        let f = degree_features(&digraph(2, &[(0, 1)])).unwrap();
        assert_eq!(f.avg_in_deg, 0.5);
        assert_eq!((f.max_in_deg, f.max_out_deg), (1, 1));

        let f = degree_features(&digraph(3, &[(0, 1), (1, 2), (2, 0)])).unwrap();
        assert_eq!(f.avg_deg, 2.0);
        assert_eq!(f.avg_in_deg, 1.0);

        let f = degree_features(&digraph(4, &[])).unwrap();
        assert_eq!(
            f,
            DegreeFeatures {
                avg_deg: 0.0,
                avg_in_deg: 0.0,
                max_in_deg: 0,
                max_out_deg: 0
            }
        );
    }

    #[test]
    fn reciprocal_pair_counts_one_neighbour() {
        let f = degree_features(&digraph(2, &[(0, 1), (1, 0)])).unwrap();
        assert_eq!(f.avg_deg, 1.0);
        assert_eq!(f.avg_in_deg, 1.0);
    }

    #[test]
    fn component_examples() {
        let f = component_features(&digraph(4, &[(0, 1), (1, 2)])).unwrap();
        assert_eq!((f.wcc, f.v_lc, f.e_lc, f.single), (2, 3, 2, 1));
        assert_eq!(f.lc_ratio, 0.75);

        let f = component_features(&digraph(3, &[(0, 1), (2, 1)])).unwrap();
        assert_eq!((f.lc_ratio, f.single), (1.0, 0));

        let f = component_features(&digraph(5, &[])).unwrap();
        assert_eq!((f.wcc, f.v_lc, f.e_lc, f.single), (5, 1, 0, 5));
        assert_eq!(f.lc_ratio, 0.2);
    }

    #[test]
    fn days_examples() {
        let mut g = TimeStampedGraph::new(true);
        g.add_vertex(1_000);
        assert_eq!(days(&g).unwrap(), 0.0);
        g.add_vertex(1_000 + 86_400);
        assert_eq!(days(&g).unwrap(), 1.0);
        assert!(days(&TimeStampedGraph::new(true)).is_err());
    }
}
