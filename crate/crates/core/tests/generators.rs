use tempnet::generators::{
    generate_ba, generate_tpa, generate_ws, GeneratorParams, GrowthSchedule, TimeDiffFunction,
};
use tempnet::{weakly_connected_components, Topology};

fn tpa(schedule: &str, f: &str, seed: u64) -> tempnet::TimeGroupedGraph {
    let params = GeneratorParams::new(3, schedule.parse().unwrap(), f.parse().unwrap(), seed);
    generate_tpa(&params).unwrap()
}

#[test]
fn same_seed_same_graph() {
    assert_eq!(
        tpa("poly:700", "exp2:1", 4).edges(),
        tpa("poly:700", "exp2:1", 4).edges()
    );
    assert_ne!(
        tpa("poly:700", "exp2:1", 4).edges(),
        tpa("poly:700", "exp2:1", 5).edges()
    );
    assert_eq!(
        generate_ba(700, 3, 2).unwrap().edges(),
        generate_ba(700, 3, 2).unwrap().edges()
    );
    assert_eq!(
        generate_ws(700, 6, 0.1, 2).unwrap().edges(),
        generate_ws(700, 6, 0.1, 2).unwrap().edges()
    );
}

#[test]
fn polynomial_700_edge_count() {
    let mean: f64 = (0..10)
        .map(|s| tpa("poly:700", "exp2:1", s).edge_count() as f64)
        .sum::<f64>()
        / 10.0;
    assert!((2080.0..=2100.0).contains(&mean), "{mean}");
}

#[test]
fn time_groups_follow_schedule() {
    let schedule: GrowthSchedule = "explicit:100,200,400".parse().unwrap();
    let params = GeneratorParams::new(3, schedule, TimeDiffFunction::exp2(1.0).unwrap(), 0);
    let g = generate_tpa(&params).unwrap();
    let mut sizes = [0usize; 3];
    for v in 0..g.vertex_count() {
        sizes[g.time_group(tempnet::VertexId::new(v)) as usize] += 1;
    }
    assert_eq!(sizes, [100, 200, 400]);
}

#[test]
fn generated_graphs_are_simple() {
    for g in [
        tpa("sig:700", "geo:0.8:0.2", 1),
        generate_ba(700, 3, 1).unwrap(),
        generate_ws(700, 6, 0.3, 1).unwrap(),
    ] {
        assert!(g.edges().iter().all(|(u, v)| u != v));
        let mut pairs: Vec<_> = g
            .edges()
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        pairs.sort_unstable();
        pairs.dedup();
        assert_eq!(pairs.len(), g.edge_count());
        assert!(!weakly_connected_components(&g).is_empty());
    }
}
