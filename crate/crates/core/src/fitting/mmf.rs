use super::lm::{levenberg_marquardt, LmOptions};
use super::{r_squared, FitError};

pub const MMF_MIN_POINTS: usize = 8;

/// Morgan–Mercer–Flodin growth curve `(a·b + c·x^d) / (b + x^d)`.
#[derive(Debug, Clone, PartialEq)]
pub struct MmfFit {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub r_squared: f64,
    /// false when the iteration budget ran out; the fit is then unreliable
    pub converged: bool,
    pub iterations: usize,
    /// objective after each accepted step, starting with the initial guess
    pub objective: Vec<f64>,
}

impl MmfFit {
    pub fn params(&self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn eval(&self, x: f64) -> f64 {
        mmf_eval(&self.params(), x)
    }
}

pub fn mmf_eval(p: &[f64], x: f64) -> f64 {
    let w = x.powf(p[3]);
    (p[0] * p[1] + p[2] * w) / (p[1] + w)
}

fn mmf_with_gradient(p: &[f64], x: f64, g: &mut [f64]) -> f64 {
    let (a, b, c, d) = (p[0], p[1], p[2], p[3]);
    let w = if x > 0.0 { x.powf(d) } else { 0.0 };
    let denom = b + w;
    let y = (a * b + c * w) / denom;
    g[0] = b / denom;
    g[1] = (a - y) / denom;
    g[2] = w / denom;
    g[3] = if x > 0.0 {
        (c - y) / denom * w * x.ln()
    } else {
        0.0
    };
    y
}

fn median(values: &mut [f64]) -> f64 {
    values.sort_by(f64::total_cmp);
    let n = values.len();
    if n % 2 == 1 {
        values[n / 2]
    } else {
        0.5 * (values[n / 2 - 1] + values[n / 2])
    }
}

/// Fits the MMF model by Levenberg–Marquardt starting from
/// `a = y_first`, `c = y_last`, `d = 2`, `b = median(x)^d`.
pub fn fit_mmf(points: &[(f64, f64)]) -> Result<MmfFit, FitError> {
    if points.len() < MMF_MIN_POINTS {
        return Err(FitError::InsufficientData(format!(
            "MMF fit needs at least {MMF_MIN_POINTS} points, got {}",
            points.len()
        )));
    }
    if points
        .iter()
        .any(|&(x, y)| !(x >= 0.0 && x.is_finite() && (0.0..=1.5).contains(&y)))
    {
        return Err(FitError::InvalidInput(
            "MMF fit needs x >= 0 and y in [0, 1.5]".into(),
        ));
    }
    let xs: Vec<f64> = points.iter().map(|p| p.0).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.1).collect();

    let d0 = 2.0;
    let mut sorted = xs.clone();
    let mut mid = median(&mut sorted);
    if mid <= 0.0 {
        let positive: Vec<f64> = xs.iter().copied().filter(|&x| x > 0.0).collect();
        mid = if positive.is_empty() {
            1.0
        } else {
            positive.iter().sum::<f64>() / positive.len() as f64
        };
    }
    let initial = [ys[0], mid.powf(d0), ys[ys.len() - 1], d0];

    let out = levenberg_marquardt(
        mmf_with_gradient,
        |p| p[1] > 0.0 && p[3] > 0.0,
        &xs,
        &ys,
        &initial,
        &LmOptions::default(),
    );
    let p = &out.params;
    let fitted: Vec<f64> = xs.iter().map(|&x| mmf_eval(p, x)).collect();
    Ok(MmfFit {
        a: p[0],
        b: p[1],
        c: p[2],
        d: p[3],
        r_squared: r_squared(&ys, &fitted),
        converged: out.converged,
        iterations: out.iterations,
        objective: out.objective,
    })
}
