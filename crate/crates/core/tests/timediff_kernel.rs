use rand::{Rng, SeedableRng};
use rand_distr::{Distribution, Exp};
use tempnet::generators::ModelRng;
use tempnet::temporal::{edge_time_differences, link_probability_estimate};
use tempnet::{TimeStampedGraph, VertexId};

const RATE: f64 = 0.0019;
const DAY: f64 = 86_400.0;

/// Pairs of vertices whose join-time gap is exponential with `RATE` per day.
fn kernel_graph(edges: usize, seed: u64) -> TimeStampedGraph {
    let mut rng = ModelRng::seed_from_u64(seed);
    let exp = Exp::new(RATE).unwrap();
    let mut g = TimeStampedGraph::new(true);
    for _ in 0..edges {
        let start = 1_000_000_000 + rng.random_range(0..(3000.0 * DAY) as i64);
        let gap = (exp.sample(&mut rng) * DAY).round() as i64;
        let u = g.add_vertex(start);
        let v = g.add_vertex(start + gap);
        g.add_edge(v, u).unwrap();
    }
    g
}

#[test]
fn fitted_rate_matches_kernel() {
    let g = kernel_graph(50_000, 5);
    let dist = edge_time_differences(&g, 10.0).unwrap();
    let fit = link_probability_estimate(&dist).unwrap();
    assert!((fit.b / RATE - 1.0).abs() < 0.05, "b = {}", fit.b);
    // bin mass at the first midpoint is about width * rate
    assert!((fit.a / (10.0 * RATE) - 1.0).abs() < 0.1, "a = {}", fit.a);
}

#[test]
fn tail_fractions_follow_survival_function() {
    let n = 20_000;
    let g = kernel_graph(n, 9);
    let dist = edge_time_differences(&g, 10.0).unwrap();
    for days in [100.0, 365.0, 1460.0] {
        let p = (-RATE * days).exp();
        let sigma = (p * (1.0 - p) / n as f64).sqrt();
        let observed = dist.tail_fraction(days);
        assert!(
            (observed - p).abs() < 3.0 * sigma,
            "{days}: {observed} vs {p}"
        );
    }
    let median = std::f64::consts::LN_2 / RATE;
    assert!((dist.median() / median - 1.0).abs() < 0.05);
}

#[test]
fn single_edge_distribution() {
    let mut g = TimeStampedGraph::new(true);
    g.add_vertex(0);
    g.add_vertex(3 * DAY as i64);
    g.add_edge(VertexId::new(0), VertexId::new(1)).unwrap();
    let dist = edge_time_differences(&g, 1.0).unwrap();
    assert_eq!(dist.median(), 3.0);
    assert!(link_probability_estimate(&dist).is_err());
}
