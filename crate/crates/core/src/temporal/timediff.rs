use std::io;

use super::TemporalError;
use crate::fitting::{fit_exponential, ExponentialFit};
use crate::graph::TimeStampedGraph;
use crate::metrics::{format_sig, SECONDS_PER_DAY};

pub const MIN_NONZERO_BINS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeDiffBin {
    pub t_mid: f64,
    pub count: usize,
    pub probability: f64,
}

/// Histogram of `|join(u) - join(v)|` in days over all edges. Bin `i`
/// covers `[i·w, (i+1)·w)`; empty bins up to the last occupied one are kept.
#[derive(Debug, Clone, PartialEq)]
pub struct TimeDiffDistribution {
    pub bin_width: f64,
    pub bins: Vec<TimeDiffBin>,
    pub total_edges: usize,
    sorted_days: Vec<f64>,
}

impl TimeDiffDistribution {
    pub fn differences(&self) -> &[f64] {
        &self.sorted_days
    }

    pub fn median(&self) -> f64 {
        let d = &self.sorted_days;
        let n = d.len();
        if n % 2 == 1 {
            d[n / 2]
        } else {
            0.5 * (d[n / 2 - 1] + d[n / 2])
        }
    }

    /// Fraction of edges whose difference exceeds `days`.
    pub fn tail_fraction(&self, days: f64) -> f64 {
        let above = self.sorted_days.len() - self.sorted_days.partition_point(|&d| d <= days);
        above as f64 / self.total_edges as f64
    }
}

pub fn edge_time_differences(
    g: &TimeStampedGraph,
    bin_width: f64,
) -> Result<TimeDiffDistribution, TemporalError> {
    if !(bin_width > 0.0 && bin_width.is_finite()) {
        return Err(TemporalError::InsufficientData(format!(
            "bin width must be positive, got {bin_width}"
        )));
    }
    if g.edges().is_empty() {
        return Err(TemporalError::InsufficientData("graph has no edges".into()));
    }
    let mut days: Vec<f64> = g
        .edges()
        .iter()
        .map(|&(u, v)| g.join_time(u).abs_diff(g.join_time(v)) as f64 / SECONDS_PER_DAY)
        .collect();
    days.sort_by(f64::total_cmp);

    let last = (days[days.len() - 1] / bin_width).floor() as usize;
    let mut counts = vec![0usize; last + 1];
    for &d in &days {
        counts[((d / bin_width).floor() as usize).min(last)] += 1;
    }
    let total = days.len();
    let bins = counts
        .into_iter()
        .enumerate()
        .map(|(i, count)| TimeDiffBin {
            t_mid: (i as f64 + 0.5) * bin_width,
            count,
            probability: count as f64 / total as f64,
        })
        .collect();
    Ok(TimeDiffDistribution {
        bin_width,
        bins,
        total_edges: total,
        sorted_days: days,
    })
}

/// Exponential fit of bin probability against bin midpoint.
pub fn link_probability_estimate(
    dist: &TimeDiffDistribution,
) -> Result<ExponentialFit, TemporalError> {
    let nonzero = dist.bins.iter().filter(|b| b.count > 0).count();
    if nonzero < MIN_NONZERO_BINS {
        return Err(TemporalError::InsufficientData(format!(
            "{nonzero} non-empty bins, need {MIN_NONZERO_BINS}"
        )));
    }
    let points: Vec<(f64, f64)> = dist.bins.iter().map(|b| (b.t_mid, b.probability)).collect();
    Ok(fit_exponential(&points)?)
}

pub fn write_timediff_csv<W: io::Write>(out: W, dist: &TimeDiffDistribution) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["t_days", "count", "probability"])?;
    for b in &dist.bins {
        w.write_record([
            format_sig(b.t_mid),
            b.count.to_string(),
            format_sig(b.probability),
        ])?;
    }
    w.flush()
}
