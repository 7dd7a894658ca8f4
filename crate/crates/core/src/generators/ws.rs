use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};

use super::{invalid, GenError, ModelRng};
use crate::graph::{TimeGroupedGraph, VertexId};

/// Watts–Strogatz small-world graph.
///
/// Builds a ring lattice where each vertex links to its `k/2` nearest
/// neighbours on either side, then visits lattice edges `(u, u + j)` for
/// `j = 1..=k/2` and, with probability `p`, replaces the far endpoint with a
/// uniformly drawn vertex that is neither `u` nor already adjacent to it. The
/// edge count stays at `n * k / 2`. All vertices are in time group 0.
pub fn generate_ws(n: usize, k: usize, p: f64, seed: u64) -> Result<TimeGroupedGraph, GenError> {
    if k < 2 || !k.is_multiple_of(2) || n <= k {
        return Err(invalid(format!(
            "WS needs even k >= 2 and n > k (got n={n}, k={k})"
        )));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(invalid(format!("rewiring probability {p} outside [0, 1]")));
    }
    let mut rng = ModelRng::seed_from_u64(seed);
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    let half = k / 2;
    for j in 1..=half {
        for u in 0..n {
            let v = (u + j) % n;
            adj[u].insert(v);
            adj[v].insert(u);
        }
    }

    for j in 1..=half {
        for u in 0..n {
            let v = (u + j) % n;
            if rng.random::<f64>() >= p {
                continue;
            }
            if adj[u].len() >= n - 1 {
                continue;
            }
            let mut w = rng.random_range(0..n);
            while w == u || adj[u].contains(&w) {
                w = rng.random_range(0..n);
            }
            // (u, v) may already have been rewired away from an earlier pass
            if adj[u].remove(&v) {
                adj[v].remove(&u);
                adj[u].insert(w);
                adj[w].insert(u);
            }
        }
    }

    let mut graph = TimeGroupedGraph::with_capacity(n, n * half);
    for _ in 0..n {
        graph.add_vertex(0);
    }
    for (u, list) in adj.iter().enumerate() {
        for &v in list.range(u + 1..) {
            graph
                .add_edge(VertexId::new(u), VertexId::new(v))
                .expect("simple by construction");
        }
    }
    Ok(graph)
}
