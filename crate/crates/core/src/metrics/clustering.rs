use crate::graph::{SimpleGraph, Topology};

/// Number of triangles through each vertex.
///
/// Edges are oriented from lower to higher (degree, id) rank, so every
/// triangle is found exactly once, at its lowest-ranked corner, by merging
/// two forward lists.
pub fn triangles_per_vertex(g: &SimpleGraph) -> Vec<u64> {
    let n = g.vertex_count();
    let rank_lt = |a: usize, b: usize| (g.degree(a), a) < (g.degree(b), b);
    let forward: Vec<Vec<u32>> = (0..n)
        .map(|u| {
            g.neighbors(u)
                .iter()
                .copied()
                .filter(|&w| rank_lt(u, w as usize))
                .collect()
        })
        .collect();

    let mut counts = vec![0u64; n];
    for u in 0..n {
        let fu = &forward[u];
        for &v in fu {
            let fv = &forward[v as usize];
            let (mut i, mut j) = (0, 0);
            while i < fu.len() && j < fv.len() {
                match fu[i].cmp(&fv[j]) {
                    std::cmp::Ordering::Less => i += 1,
                    std::cmp::Ordering::Greater => j += 1,
                    std::cmp::Ordering::Equal => {
                        counts[u] += 1;
                        counts[v as usize] += 1;
                        counts[fu[i] as usize] += 1;
                        i += 1;
                        j += 1;
                    }
                }
            }
        }
    }
    counts
}

pub fn triangle_count(g: &SimpleGraph) -> u64 {
    triangles_per_vertex(g).iter().sum::<u64>() / 3
}

/// Local clustering coefficient of every vertex; 0 for degree below 2.
pub fn local_clustering(g: &SimpleGraph) -> Vec<f64> {
    triangles_per_vertex(g)
        .into_iter()
        .enumerate()
        .map(|(v, t)| {
            let d = g.degree(v) as f64;
            if d < 2.0 {
                0.0
            } else {
                2.0 * t as f64 / (d * (d - 1.0))
            }
        })
        .collect()
}

/// Mean local clustering over all vertices; 0 for the empty graph.
pub fn avg_clustering(g: &SimpleGraph) -> f64 {
    let n = g.vertex_count();
    if n == 0 {
        return 0.0;
    }
    local_clustering(g).iter().sum::<f64>() / n as f64
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
    fn complete_graph_k4() {
        let g = simple(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
        assert_eq!(triangle_count(&g), 4);
        assert_eq!(avg_clustering(&g), 1.0);
    }

    #[test]
    fn trees_have_no_triangles() {
        let g = simple(7, &[(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]);
        assert_eq!(triangle_count(&g), 0);
        assert_eq!(avg_clustering(&g), 0.0);
    }

    #[test]
    fn triangle_and_star() {
        let tri = simple(3, &[(0, 1), (1, 2), (2, 0)]);
        assert_eq!(avg_clustering(&tri), 1.0);
        let star = simple(6, &[(0, 1), (0, 2), (0, 3), (0, 4), (0, 5)]);
        assert_eq!(avg_clustering(&star), 0.0);
    }

    #[test]
    fn empty_graph_has_zero_clustering() {
        assert_eq!(avg_clustering(&SimpleGraph::default()), 0.0);
    }

    #[test]
    fn ring_lattice_closed_form() {
        // k = 6 ring: local CC = 3(k-2) / (4(k-1)) = 0.6
        let n = 30;
        let mut edges = Vec::new();
        for u in 0..n {
            for j in 1..=3 {
                edges.push((u, (u + j) % n));
            }
        }
        let g = simple(n, &edges);
        for c in local_clustering(&g) {
            assert!((c - 0.6).abs() < 1e-12);
        }
    }
}
