//! Discrete power-law fitting: maximum-likelihood exponent for each candidate
//! lower cutoff, cutoff chosen by minimising the Kolmogorov–Smirnov distance
//! between the empirical and fitted tail distributions.

use super::MetricError;

pub const MIN_OBSERVATIONS: usize = 50;

const ALPHA_LO: f64 = 1.000_001;
const ALPHA_HI: f64 = 40.0;

// B_{2j} / (2j)! for j = 1..=8
const EULER_MACLAURIN: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30_240.0,
    -1.0 / 1_209_600.0,
    1.0 / 47_900_160.0,
    -691.0 / 1_307_674_368_000.0,
    1.0 / 74_724_249_600.0,
    -3617.0 / 10_670_622_842_880_000.0,
];

/// Hurwitz zeta `ζ(s, q) = Σ_{k≥0} (q + k)^(-s)` for `s > 1`, `q > 0`,
/// by Euler–Maclaurin summation.
pub fn hurwitz_zeta(s: f64, q: f64) -> f64 {
    debug_assert!(s > 1.0 && q > 0.0);
    const DIRECT: usize = 9;
    let mut sum = 0.0;
    for k in 0..DIRECT {
        sum += (q + k as f64).powf(-s);
    }
    let a = q + DIRECT as f64;
    let a_pow = a.powf(-s);
    sum += a * a_pow / (s - 1.0) + 0.5 * a_pow;

    // T_j = B_2j/(2j)! * s(s+1)...(s+2j-2) * a^(-s-2j+1)
    let mut rising = s;
    let mut power = a_pow / a;
    let inv_a2 = 1.0 / (a * a);
    for (j, c) in EULER_MACLAURIN.iter().enumerate() {
        let term = c * rising * power;
        sum += term;
        if term.abs() < 1e-17 * sum.abs() {
            break;
        }
        let base = s + 2.0 * j as f64;
        rising *= (base + 1.0) * (base + 2.0);
        power *= inv_a2;
    }
    sum
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerLawFit {
    /// exponent γ in `P(k) ∝ k^-γ`; infinite when the input has no variation
    pub gamma: f64,
    pub x_min: u64,
    pub ks_distance: f64,
    /// observations at or above `x_min`
    pub tail_len: usize,
    /// set when no tail with at least two distinct values exists
    pub degenerate: bool,
}

fn log_likelihood(alpha: f64, sum_ln: f64, n: f64, x_min: f64) -> f64 {
    -alpha * sum_ln - n * hurwitz_zeta(alpha, x_min).ln()
}

/// Golden-section maximisation of the (concave) discrete log-likelihood.
fn mle_alpha(sum_ln: f64, n: f64, x_min: f64) -> f64 {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let (mut a, mut b) = (ALPHA_LO, ALPHA_HI);
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let mut fc = log_likelihood(c, sum_ln, n, x_min);
    let mut fd = log_likelihood(d, sum_ln, n, x_min);
    while b - a > 1e-9 {
        if fc > fd {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = log_likelihood(c, sum_ln, n, x_min);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = log_likelihood(d, sum_ln, n, x_min);
        }
    }
    0.5 * (a + b)
}

/// KS distance between the empirical tail (sorted ascending, all ≥ x_min)
/// and the discrete power law with exponent `alpha`.
fn ks_distance(tail: &[u64], alpha: f64) -> f64 {
    let x_min = tail[0];
    let norm = hurwitz_zeta(alpha, x_min as f64);
    let n = tail.len() as f64;
    // cumulative unnormalised mass Σ_{k = x_min}^{x} k^-alpha
    let mut mass = 0.0;
    let mut next_k = x_min;
    let mut worst: f64 = 0.0;
    let mut i = 0;
    while i < tail.len() {
        let x = tail[i];
        let mut j = i;
        while j < tail.len() && tail[j] == x {
            j += 1;
        }
        if x - next_k < 64 {
            for k in next_k..=x {
                mass += (k as f64).powf(-alpha);
            }
        } else {
            mass += hurwitz_zeta(alpha, next_k as f64) - hurwitz_zeta(alpha, (x + 1) as f64);
        }
        next_k = x + 1;
        let fitted = (mass / norm).min(1.0);
        let empirical = j as f64 / n;
        worst = worst.max((empirical - fitted).abs());
        i = j;
    }
    worst
}

/// Fits `P(k) ∝ k^-γ` for `k ≥ x_min` to positive integer observations.
///
/// Every distinct value except the largest is tried as `x_min`. When the data
/// hold a single distinct value the fit is flagged `degenerate`, `x_min` is
/// that value and `gamma` is infinite.
pub fn fit_power_law_exponent(values: &[u64]) -> Result<PowerLawFit, MetricError> {
    if values.len() < MIN_OBSERVATIONS {
        return Err(MetricError::InsufficientData(format!(
            "power-law fit needs at least {MIN_OBSERVATIONS} observations, got {}",
            values.len()
        )));
    }
    if values.contains(&0) {
        return Err(MetricError::InsufficientData(
            "power-law fit needs strictly positive observations".into(),
        ));
    }
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    let mut distinct = sorted.clone();
    distinct.dedup();
    if distinct.len() == 1 {
        return Ok(PowerLawFit {
            gamma: f64::INFINITY,
            x_min: distinct[0],
            ks_distance: 0.0,
            tail_len: sorted.len(),
            degenerate: true,
        });
    }

    // suffix sums of ln x over the sorted data
    let mut suffix_ln = vec![0.0; sorted.len() + 1];
    for i in (0..sorted.len()).rev() {
        suffix_ln[i] = suffix_ln[i + 1] + (sorted[i] as f64).ln();
    }

    let mut best: Option<PowerLawFit> = None;
    for &x_min in &distinct[..distinct.len() - 1] {
        let start = sorted.partition_point(|&x| x < x_min);
        let tail = &sorted[start..];
        let n = tail.len() as f64;
        let alpha = mle_alpha(suffix_ln[start], n, x_min as f64);
        let ks = ks_distance(tail, alpha);
        if best.is_none_or(|b| ks < b.ks_distance) {
            best = Some(PowerLawFit {
                gamma: alpha,
                x_min,
                ks_distance: ks,
                tail_len: tail.len(),
                degenerate: false,
            });
        }
    }
    Ok(best.expect("at least one candidate cutoff"))
}
