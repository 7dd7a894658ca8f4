//! Temporal preferential attachment.
//!
//! Vertices arrive in batches. Batch `i` is registered in full as time group
//! `i` before any of its vertices is wired. Each new vertex then tries to
//! place `m` edges; one attempt
//!
//! 1. picks an existing time group `r` with probability
//!    `f(|i - r|) / Σ_g f(|i - g|)` (the vertex's own group has difference 0),
//! 2. among the members of `r` that are neither the new vertex nor already
//!    adjacent to it, picks `u` with probability proportional to its degree,
//!    or uniformly when all of them have degree 0.
//!
//! An attempt fails only when group `r` has no such member. After
//! `retry_cap` failed attempts the edge slot is abandoned.

use rand::{Rng, SeedableRng};

use super::{invalid, GenError, GrowthSchedule, ModelRng, TimeDiffFunction};
use crate::graph::{TimeGroupedGraph, Topology, VertexId};

pub const DEFAULT_RETRY_CAP: usize = 50;

#[derive(Debug, Clone, PartialEq)]
pub struct GeneratorParams {
    pub m: usize,
    pub schedule: GrowthSchedule,
    pub f: TimeDiffFunction,
    pub seed: u64,
    pub retry_cap: usize,
}

impl GeneratorParams {
    pub fn new(m: usize, schedule: GrowthSchedule, f: TimeDiffFunction, seed: u64) -> Self {
        GeneratorParams {
            m,
            schedule,
            f,
            seed,
            retry_cap: DEFAULT_RETRY_CAP,
        }
    }

    pub fn validate(&self) -> Result<(), GenError> {
        if self.m == 0 {
            return Err(invalid("m must be at least 1"));
        }
        if self.retry_cap == 0 {
            return Err(invalid("retry_cap must be at least 1"));
        }
        if self.f.eval(0).partial_cmp(&0.0) != Some(std::cmp::Ordering::Greater) {
            return Err(invalid("time-difference function must be positive at 0"));
        }
        Ok(())
    }
}

/// Cumulative selection weights over the groups that exist while one batch
/// is being wired.
#[derive(Debug, Clone)]
pub(crate) struct GroupSampler {
    cumulative: Vec<f64>,
}

impl GroupSampler {
    pub(crate) fn new(current: u32, labels: &[u32], f: &TimeDiffFunction) -> Self {
        let mut acc = 0.0;
        let cumulative = labels
            .iter()
            .map(|&g| {
                acc += f.eval(current.abs_diff(g));
                acc
            })
            .collect();
        GroupSampler { cumulative }
    }

    /// Index into the label slice the sampler was built from.
    pub(crate) fn sample<R: Rng>(&self, rng: &mut R) -> usize {
        let total = *self.cumulative.last().expect("at least one group");
        let x = rng.random::<f64>() * total;
        let idx = self.cumulative.partition_point(|&c| c <= x);
        idx.min(self.cumulative.len() - 1)
    }
}

/// Members of one time group plus a degree-weighted urn: every vertex
/// appears in `tokens` once per incident edge, so a uniform token draw has
/// probability `degree / Σ degree`.
#[derive(Debug, Clone, Default)]
pub(crate) struct GroupPool {
    members: Vec<VertexId>,
    tokens: Vec<VertexId>,
}

/// Rejection draws tried before falling back to an explicit scan.
const FAST_DRAWS: usize = 32;

impl GroupPool {
    pub(crate) fn add_member(&mut self, v: VertexId) {
        self.members.push(v);
    }

    pub(crate) fn add_token(&mut self, v: VertexId) {
        self.tokens.push(v);
    }

    /// Draws a vertex accepted by `valid`, with probability proportional to
    /// degree among the valid members, or uniformly if every valid member
    /// has degree 0. Returns `None` when no member is valid.
    pub(crate) fn draw<R, F>(
        &self,
        rng: &mut R,
        degree: impl Fn(VertexId) -> usize,
        valid: F,
    ) -> Option<VertexId>
    where
        R: Rng,
        F: Fn(VertexId) -> bool,
    {
        // Rejection from the urn has the same conditional law as the scan.
        if !self.tokens.is_empty() {
            for _ in 0..FAST_DRAWS {
                let u = self.tokens[rng.random_range(0..self.tokens.len())];
                if valid(u) {
                    return Some(u);
                }
            }
        }
        let candidates: Vec<VertexId> =
            self.members.iter().copied().filter(|&u| valid(u)).collect();
        if candidates.is_empty() {
            return None;
        }
        let total: usize = candidates.iter().map(|&u| degree(u)).sum();
        if total == 0 {
            return Some(candidates[rng.random_range(0..candidates.len())]);
        }
        let mut x = rng.random_range(0..total);
        for &u in &candidates {
            let d = degree(u);
            if x < d {
                return Some(u);
            }
            x -= d;
        }
        unreachable!("draw below total weight")
    }
}

pub fn generate_tpa(params: &GeneratorParams) -> Result<TimeGroupedGraph, GenError> {
    params.validate()?;
    let batches = params.schedule.batches();
    let n = params.schedule.total_vertices();
    let mut rng = ModelRng::seed_from_u64(params.seed);
    let mut graph = TimeGroupedGraph::with_capacity(n, n * params.m);

    let mut labels: Vec<u32> = Vec::new();
    let mut pools: Vec<GroupPool> = Vec::new();
    // position in `labels`/`pools` of each vertex's group
    let mut slot_of: Vec<usize> = Vec::with_capacity(n);

    for (i, &size) in batches.iter().enumerate() {
        if size == 0 {
            continue;
        }
        let group = u32::try_from(i).map_err(|_| invalid("too many iterations"))?;
        let slot = labels.len();
        labels.push(group);
        let mut pool = GroupPool::default();
        let first = graph.vertex_count();
        for _ in 0..size {
            pool.add_member(graph.add_vertex(group));
            slot_of.push(slot);
        }
        pools.push(pool);

        let sampler = GroupSampler::new(group, &labels, &params.f);
        for v in (first..first + size).map(VertexId::new) {
            for _ in 0..params.m {
                for _ in 0..params.retry_cap {
                    let r = sampler.sample(&mut rng);
                    let picked = pools[r].draw(
                        &mut rng,
                        |u| graph.degree(u),
                        |u| u != v && !graph.has_edge(v, u),
                    );
                    if let Some(u) = picked {
                        graph.add_edge(v, u).expect("validated endpoints");
                        pools[slot_of[v.index()]].add_token(v);
                        pools[slot_of[u.index()]].add_token(u);
                        break;
                    }
                }
            }
        }
    }
    Ok(graph)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{growth_sequence, ScheduleKind};

    fn worked_example(seed: u64) -> GeneratorParams {
        GeneratorParams::new(
            3,
            GrowthSchedule::explicit(vec![100, 200, 400]).unwrap(),
            TimeDiffFunction::exp2(1.0).unwrap(),
            seed,
        )
    }

    #[test]
    fn worked_example_sizes() {
        let g = generate_tpa(&worked_example(7)).unwrap();
        assert_eq!(g.vertex_count(), 700);
        assert!(g.edge_count() <= 2100);
        assert!(g.edge_count() >= 2095, "{}", g.edge_count());
    }

    #[test]
    fn time_groups_follow_batches() {
        let g = generate_tpa(&worked_example(1)).unwrap();
        for v in 0..700 {
            let expected = match v {
                0..=99 => 0,
                100..=299 => 1,
                _ => 2,
            };
            assert_eq!(g.time_group(VertexId::new(v)), expected);
        }
    }

    #[test]
    fn single_group_degenerate_case() {
        let params = GeneratorParams::new(
            3,
            GrowthSchedule::explicit(vec![10]).unwrap(),
            TimeDiffFunction::exp2(1.0).unwrap(),
            3,
        );
        let g = generate_tpa(&params).unwrap();
        assert_eq!(g.vertex_count(), 10);
        assert!(g.edge_count() <= 30);
        for &(u, v) in g.edges() {
            assert_ne!(u, v);
            assert_eq!(g.time_group(u), 0);
        }
    }

    #[test]
    fn reproducible_under_seed() {
        let params = GeneratorParams::new(
            3,
            growth_sequence(ScheduleKind::Sigmoidal, 700).unwrap(),
            "geo:0.8:0.2".parse().unwrap(),
            99,
        );
        let a = generate_tpa(&params).unwrap();
        let b = generate_tpa(&params).unwrap();
        assert_eq!(a.edges(), b.edges());
        let c = generate_tpa(&GeneratorParams {
            seed: 100,
            ..params
        })
        .unwrap();
        assert_ne!(a.edges(), c.edges());
    }

    #[test]
    fn edge_bound_and_simplicity() {
        let params = GeneratorParams::new(
            4,
            growth_sequence(ScheduleKind::Polynomial, 700).unwrap(),
            TimeDiffFunction::exp2(1.0).unwrap(),
            5,
        );
        let g = generate_tpa(&params).unwrap();
        assert!(g.edge_count() <= 4 * 700);
        let degrees = g.degrees();
        assert_eq!(degrees.iter().sum::<usize>(), 2 * g.edge_count());
    }

    #[test]
    fn invalid_params() {
        let mut p = worked_example(0);
        p.m = 0;
        assert!(matches!(generate_tpa(&p), Err(GenError::InvalidParams(_))));
        let mut p = worked_example(0);
        p.retry_cap = 0;
        assert!(generate_tpa(&p).is_err());
    }

    #[test]
    fn saturated_group_abandons_slots() {
        // a 3-vertex single group can hold only a triangle
        let mut p = GeneratorParams::new(
            3,
            GrowthSchedule::explicit(vec![3]).unwrap(),
            TimeDiffFunction::exp2(1.0).unwrap(),
            4,
        );
        p.retry_cap = 1;
        let g = generate_tpa(&p).unwrap();
        assert_eq!(g.edge_count(), 3);
    }

    // Frequencies against the analytic selection probabilities; 3σ binomial
    // bound per category.
    fn assert_frequencies(counts: &[usize], probs: &[f64], draws: usize) {
        for (c, p) in counts.iter().zip(probs) {
            let expected = p * draws as f64;
            let sigma = (draws as f64 * p * (1.0 - p)).sqrt();
            assert!(
                (*c as f64 - expected).abs() <= 3.0 * sigma,
                "count {c} vs expected {expected} (σ={sigma})"
            );
        }
    }

    #[test]
    fn group_selection_frequencies() {
        let f = TimeDiffFunction::exp2(1.0).unwrap();
        let labels = [0u32, 1, 2, 3];
        let current = 2;
        let sampler = GroupSampler::new(current, &labels, &f);
        let weights: Vec<f64> = labels
            .iter()
            .map(|&g| f.eval(current.abs_diff(g)))
            .collect();
        let total: f64 = weights.iter().sum();
        let probs: Vec<f64> = weights.iter().map(|w| w / total).collect();

        let mut rng = ModelRng::seed_from_u64(2024);
        let draws = 200_000;
        let mut counts = vec![0usize; labels.len()];
        for _ in 0..draws {
            counts[sampler.sample(&mut rng)] += 1;
        }
        assert_frequencies(&counts, &probs, draws);
    }

    fn frozen_pool(degrees: &[usize]) -> GroupPool {
        let mut pool = GroupPool::default();
        for (i, &d) in degrees.iter().enumerate() {
            pool.add_member(VertexId::new(i));
            for _ in 0..d {
                pool.add_token(VertexId::new(i));
            }
        }
        pool
    }

    #[test]
    fn within_group_selection_frequencies() {
        let degrees = [0usize, 1, 3, 6];
        let pool = frozen_pool(&degrees);
        let total: usize = degrees.iter().sum();
        let probs: Vec<f64> = degrees.iter().map(|&d| d as f64 / total as f64).collect();

        let mut rng = ModelRng::seed_from_u64(77);
        let draws = 200_000;
        let mut counts = vec![0usize; degrees.len()];
        for _ in 0..draws {
            let u = pool
                .draw(&mut rng, |u| degrees[u.index()], |_| true)
                .unwrap();
            counts[u.index()] += 1;
        }
        assert_frequencies(&counts, &probs, draws);
    }

    #[test]
    fn draws_condition_on_valid_members() {
        // vertex 3 holds most of the weight but is excluded
        let degrees = [2usize, 1, 0, 50];
        let pool = frozen_pool(&degrees);
        let probs = [2.0 / 3.0, 1.0 / 3.0, 0.0];
        let mut rng = ModelRng::seed_from_u64(5);
        let draws = 60_000;
        let mut counts = vec![0usize; 3];
        for _ in 0..draws {
            let u = pool
                .draw(&mut rng, |u| degrees[u.index()], |u| u.index() != 3)
                .unwrap();
            counts[u.index()] += 1;
        }
        assert_frequencies(&counts, &probs, draws);
    }

    #[test]
    fn zero_degree_members_are_drawn_uniformly() {
        let pool = frozen_pool(&[0, 0, 0, 0, 0]);
        let mut rng = ModelRng::seed_from_u64(9);
        let draws = 50_000;
        let mut counts = vec![0usize; 5];
        for _ in 0..draws {
            counts[pool.draw(&mut rng, |_| 0, |_| true).unwrap().index()] += 1;
        }
        assert_frequencies(&counts, &[0.2; 5], draws);
        assert!(pool.draw(&mut rng, |_| 0, |_| false).is_none());
    }
}
