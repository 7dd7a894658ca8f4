use nalgebra::{DMatrix, DVector};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LmOptions {
    pub max_iterations: usize,
    /// converged once an accepted step satisfies `|δ| < tol · |p|`
    pub relative_tolerance: f64,
    pub initial_damping: f64,
}

impl Default for LmOptions {
    fn default() -> Self {
        LmOptions {
            max_iterations: 200,
            relative_tolerance: 1e-8,
            initial_damping: 1e-3,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct LmOutcome {
    pub params: Vec<f64>,
    pub converged: bool,
    pub iterations: usize,
    /// sum of squared residuals at the start and after every accepted step
    pub objective: Vec<f64>,
}

/// Levenberg–Marquardt with Marquardt's diagonal scaling.
///
/// `model(p, x)` returns the prediction and fills the gradient with respect
/// to `p`. Steps leaving the `feasible` region are rejected like steps that
/// fail to reduce the objective.
pub fn levenberg_marquardt<M, F>(
    model: M,
    feasible: F,
    xs: &[f64],
    ys: &[f64],
    initial: &[f64],
    options: &LmOptions,
) -> LmOutcome
where
    M: Fn(&[f64], f64, &mut [f64]) -> f64,
    F: Fn(&[f64]) -> bool,
{
    let n = xs.len();
    let k = initial.len();
    let mut grad = vec![0.0; k];
    let evaluate = |p: &[f64], grad: &mut [f64]| -> (DMatrix<f64>, DVector<f64>, f64) {
        let mut jac = DMatrix::zeros(n, k);
        let mut res = DVector::zeros(n);
        for i in 0..n {
            let pred = model(p, xs[i], grad);
            res[i] = ys[i] - pred;
            for j in 0..k {
                jac[(i, j)] = grad[j];
            }
        }
        let sse = res.norm_squared();
        (jac, res, sse)
    };
    let sse_only = |p: &[f64], grad: &mut [f64]| -> f64 {
        (0..n)
            .map(|i| (ys[i] - model(p, xs[i], grad)).powi(2))
            .sum()
    };

    let mut p = initial.to_vec();
    let (mut jac, mut res, mut sse) = evaluate(&p, &mut grad);
    let mut objective = vec![sse];
    let mut lambda = options.initial_damping;
    let mut converged = sse == 0.0;
    let mut iterations = 0;

    while !converged && iterations < options.max_iterations {
        iterations += 1;
        let jtj = jac.transpose() * &jac;
        let jtr = jac.transpose() * &res;
        let mut accepted = false;
        while lambda < 1e16 {
            let mut damped = jtj.clone();
            for j in 0..k {
                damped[(j, j)] += lambda * jtj[(j, j)].max(1e-300);
            }
            let Some(step) = damped.cholesky().map(|c| c.solve(&jtr)) else {
                lambda *= 10.0;
                continue;
            };
            let trial: Vec<f64> = p.iter().zip(step.iter()).map(|(a, d)| a + d).collect();
            if trial.iter().all(|v| v.is_finite()) && feasible(&trial) {
                let trial_sse = sse_only(&trial, &mut grad);
                if trial_sse < sse {
                    let p_norm = p.iter().map(|v| v * v).sum::<f64>().sqrt();
                    let rel = step.norm() / p_norm.max(f64::MIN_POSITIVE);
                    p = trial;
                    (jac, res, sse) = evaluate(&p, &mut grad);
                    objective.push(sse);
                    lambda = (lambda / 10.0).max(1e-12);
                    converged = rel < options.relative_tolerance || sse == 0.0;
                    accepted = true;
                    break;
                }
            }
            lambda *= 10.0;
        }
        if !accepted {
            break;
        }
    }
    LmOutcome {
        params: p,
        converged,
        iterations,
        objective,
    }
}
