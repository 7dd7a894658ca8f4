use rand::{Rng, SeedableRng};

use super::{invalid, GenError, ModelRng};
use crate::graph::{TimeGroupedGraph, VertexId};

/// Barabási–Albert graph on `n` vertices.
///
/// Starts from `m` isolated vertices; the first arriving vertex links to all
/// of them and every later vertex links to `m` distinct existing vertices
/// drawn with probability proportional to degree. The result has exactly
/// `(n - m) * m` edges. Vertex `v`'s time group is its arrival step
/// (0 for the seed vertices).
pub fn generate_ba(n: usize, m: usize, seed: u64) -> Result<TimeGroupedGraph, GenError> {
    if m == 0 || n <= m {
        return Err(invalid(format!("BA needs n > m >= 1 (got n={n}, m={m})")));
    }
    let mut rng = ModelRng::seed_from_u64(seed);
    let mut graph = TimeGroupedGraph::with_capacity(n, (n - m) * m);
    for _ in 0..m {
        graph.add_vertex(0);
    }

    let mut targets: Vec<VertexId> = (0..m).map(VertexId::new).collect();
    // each vertex appears once per incident edge
    let mut repeated: Vec<VertexId> = Vec::with_capacity(2 * (n - m) * m);
    for source in m..n {
        let group = u32::try_from(source - m + 1).map_err(|_| invalid("n too large"))?;
        let v = graph.add_vertex(group);
        for &t in &targets {
            graph.add_edge(v, t).expect("fresh vertex has no edges");
        }
        repeated.extend_from_slice(&targets);
        repeated.extend(std::iter::repeat_n(v, m));

        targets.clear();
        while targets.len() < m {
            let pick = repeated[rng.random_range(0..repeated.len())];
            if !targets.contains(&pick) {
                targets.push(pick);
            }
        }
    }
    Ok(graph)
}
