use super::lm::{levenberg_marquardt, LmOptions};
use super::{r_squared, FitError};

pub const EXPONENTIAL_MIN_BINS: usize = 10;

/// `p(t) ≈ a·e^{-b t}`.
#[derive(Debug, Clone, PartialEq)]
pub struct ExponentialFit {
    pub a: f64,
    pub b: f64,
    pub r_squared: f64,
    pub converged: bool,
    /// set when the fitted decay over the sampled span is below 0.1%
    pub non_decaying: bool,
}

impl ExponentialFit {
    pub fn eval(&self, t: f64) -> f64 {
        self.a * (-self.b * t).exp()
    }
}

fn with_gradient(p: &[f64], t: f64, g: &mut [f64]) -> f64 {
    let e = (-p[1] * t).exp();
    g[0] = e;
    g[1] = -p[0] * t * e;
    p[0] * e
}

/// Log-linear least squares on the positive bins for a starting point, then
/// nonlinear least squares on all bins.
pub fn fit_exponential(bins: &[(f64, f64)]) -> Result<ExponentialFit, FitError> {
    if bins.len() < EXPONENTIAL_MIN_BINS {
        return Err(FitError::InsufficientData(format!(
            "exponential fit needs at least {EXPONENTIAL_MIN_BINS} bins, got {}",
            bins.len()
        )));
    }
    if bins
        .iter()
        .any(|&(t, p)| !t.is_finite() || !p.is_finite() || p < 0.0)
    {
        return Err(FitError::InvalidInput(
            "bins need finite t and non-negative p".into(),
        ));
    }
    let positive: Vec<(f64, f64)> = bins
        .iter()
        .filter(|b| b.1 > 0.0)
        .map(|&(t, p)| (t, p.ln()))
        .collect();
    if positive.len() < 2 {
        return Err(FitError::InsufficientData(
            "fewer than two bins with positive probability".into(),
        ));
    }
    let n = positive.len() as f64;
    let t_mean = positive.iter().map(|p| p.0).sum::<f64>() / n;
    let l_mean = positive.iter().map(|p| p.1).sum::<f64>() / n;
    let sxx: f64 = positive.iter().map(|p| (p.0 - t_mean).powi(2)).sum();
    if sxx == 0.0 {
        return Err(FitError::InsufficientData(
            "positive bins share one abscissa".into(),
        ));
    }
    let sxy: f64 = positive
        .iter()
        .map(|p| (p.0 - t_mean) * (p.1 - l_mean))
        .sum();
    let slope = sxy / sxx;
    let initial = [(l_mean - slope * t_mean).exp(), -slope];

    let ts: Vec<f64> = bins.iter().map(|b| b.0).collect();
    let ps: Vec<f64> = bins.iter().map(|b| b.1).collect();
    let out = levenberg_marquardt(
        with_gradient,
        |p| p[0] > 0.0,
        &ts,
        &ps,
        &initial,
        &LmOptions::default(),
    );
    let (a, b) = (out.params[0], out.params[1]);
    let fitted: Vec<f64> = ts.iter().map(|&t| a * (-b * t).exp()).collect();
    let span = ts.iter().copied().fold(f64::NEG_INFINITY, f64::max)
        - ts.iter().copied().fold(f64::INFINITY, f64::min);
    Ok(ExponentialFit {
        a,
        b,
        r_squared: r_squared(&ps, &fitted),
        converged: out.converged,
        non_decaying: b * span < 1e-3,
    })
}
