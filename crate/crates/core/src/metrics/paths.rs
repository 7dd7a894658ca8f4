use rand::SeedableRng;
use rayon::prelude::*;

use super::MetricError;
use crate::components::weakly_connected_components;
use crate::generators::ModelRng;
use crate::graph::{SimpleGraph, Topology};

/// Largest component size for which every vertex is used as a BFS source.
pub const EXACT_PATH_LIMIT: usize = 20_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PathOptions {
    pub exact_limit: usize,
    /// sources drawn when the largest component exceeds `exact_limit`
    pub sample_size: usize,
    pub seed: u64,
}

impl Default for PathOptions {
    fn default() -> Self {
        PathOptions {
            exact_limit: EXACT_PATH_LIMIT,
            sample_size: 1000,
            seed: 0,
        }
    }
}

/// Sum of hop distances from `source` to every vertex it reaches.
fn bfs_distance_sum(g: &SimpleGraph, source: usize, dist: &mut [u32], queue: &mut Vec<u32>) -> u64 {
    dist.fill(u32::MAX);
    queue.clear();
    dist[source] = 0;
    queue.push(source as u32);
    let mut head = 0;
    let mut total = 0u64;
    while head < queue.len() {
        let u = queue[head] as usize;
        head += 1;
        let du = dist[u];
        total += u64::from(du);
        for &w in g.neighbors(u) {
            if dist[w as usize] == u32::MAX {
                dist[w as usize] = du + 1;
                queue.push(w);
            }
        }
    }
    total
}

/// Mean hop distance over ordered vertex pairs of the largest connected
/// component. Exact when the component has at most `exact_limit` vertices,
/// otherwise averaged over `sample_size` sources drawn without replacement.
pub fn avg_shortest_path(g: &SimpleGraph, opts: &PathOptions) -> Result<f64, MetricError> {
    let partition = weakly_connected_components(g);
    let lc: Vec<usize> = partition
        .largest()
        .map(|c| c.iter().map(|v| v.index()).collect())
        .unwrap_or_default();
    let k = lc.len();
    if k < 2 {
        return Err(MetricError::DegenerateGraph(
            "largest component has fewer than 2 vertices".into(),
        ));
    }

    let sources: Vec<usize> = if k <= opts.exact_limit {
        lc
    } else {
        let mut rng = ModelRng::seed_from_u64(opts.seed);
        let mut picked: Vec<usize> = rand::seq::index::sample(&mut rng, k, opts.sample_size.min(k))
            .into_iter()
            .map(|i| lc[i])
            .collect();
        picked.sort_unstable();
        picked
    };

    let n = g.vertex_count();
    let total: u64 = sources
        .par_iter()
        .map_init(
            || (vec![u32::MAX; n], Vec::with_capacity(n)),
            |(dist, queue), &s| bfs_distance_sum(g, s, dist, queue),
        )
        .sum();
    Ok(total as f64 / (sources.len() as f64 * (k as f64 - 1.0)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::VertexId;

    fn simple(n: usize, edges: &[(usize, usize)]) -> SimpleGraph {
        SimpleGraph::from_pairs(
            n,
            edges
                .iter()
                .map(|&(u, v)| (VertexId::new(u), VertexId::new(v))),
        )
    }

    #[test]
    fn path_of_three() {
        let g = simple(3, &[(0, 1), (1, 2)]);
        let sp = avg_shortest_path(&g, &PathOptions::default()).unwrap();
        assert!((sp - 4.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn complete_graph_is_one() {
        let mut edges = Vec::new();
        for u in 0..6 {
            for v in u + 1..6 {
                edges.push((u, v));
            }
        }
        let sp = avg_shortest_path(&simple(6, &edges), &PathOptions::default()).unwrap();
        assert_eq!(sp, 1.0);
    }

    #[test]
    fn restricted_to_largest_component() {
        let g = simple(6, &[(0, 1), (1, 2), (4, 5)]);
        let sp = avg_shortest_path(&g, &PathOptions::default()).unwrap();
        assert!((sp - 4.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn degenerate_inputs() {
        assert!(avg_shortest_path(&simple(3, &[]), &PathOptions::default()).is_err());
        assert!(avg_shortest_path(&SimpleGraph::default(), &PathOptions::default()).is_err());
    }

    #[test]
    fn sampled_mode_on_a_cycle_is_exact() {
        // every source of a cycle sees the same distance profile
        let n = 101;
        let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        let g = simple(n, &edges);
        let exact = avg_shortest_path(&g, &PathOptions::default()).unwrap();
        let sampled = avg_shortest_path(
            &g,
            &PathOptions {
                exact_limit: 10,
                sample_size: 7,
                seed: 3,
            },
        )
        .unwrap();
        assert!((exact - sampled).abs() < 1e-12);
    }
}
