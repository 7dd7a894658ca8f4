use nalgebra::{DMatrix, DVector};

use super::{r_squared, solve_least_squares, FitError};

/// Least-squares polynomial. `coefficients[j]` multiplies `x^j`.
#[derive(Debug, Clone, PartialEq)]
pub struct PolynomialFit {
    pub coefficients: Vec<f64>,
    pub r_squared: f64,
}

impl PolynomialFit {
    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coefficients
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c)
    }

    /// Exact integral over `[lo, hi]`.
    pub fn integral(&self, lo: f64, hi: f64) -> f64 {
        let antiderivative = |x: f64| {
            self.coefficients
                .iter()
                .enumerate()
                .rev()
                .fold(0.0, |acc, (j, c)| acc * x + c / (j + 1) as f64)
                * x
        };
        antiderivative(hi) - antiderivative(lo)
    }
}

/// Fits a polynomial of the given degree. The abscissae are mapped to
/// `[0, 1]` for the solve and the coefficients mapped back afterwards.
pub fn fit_polynomial(points: &[(f64, f64)], degree: usize) -> Result<PolynomialFit, FitError> {
    if degree == 0 {
        return Err(FitError::InvalidInput("degree must be positive".into()));
    }
    if points.iter().any(|(x, y)| !x.is_finite() || !y.is_finite()) {
        return Err(FitError::InvalidInput("non-finite point".into()));
    }
    let mut xs: Vec<f64> = points.iter().map(|p| p.0).collect();
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    if xs.len() < degree + 1 {
        return Err(FitError::RankDeficient(format!(
            "degree {degree} needs {} distinct x values, got {}",
            degree + 1,
            xs.len()
        )));
    }
    let lo = xs[0];
    let span = xs[xs.len() - 1] - lo;

    let cols = degree + 1;
    let design = DMatrix::from_fn(points.len(), cols, |i, j| {
        ((points[i].0 - lo) / span).powi(j as i32)
    });
    let y = DVector::from_iterator(points.len(), points.iter().map(|p| p.1));
    let scaled = solve_least_squares(design, &y)?;

    // p(x) = Σ β_j ((x - lo)/span)^j, expanded in powers of x
    let mut coefficients = vec![0.0; cols];
    let mut basis = vec![1.0];
    for beta in scaled.iter() {
        for (c, b) in coefficients.iter_mut().zip(&basis) {
            *c += beta * b;
        }
        let mut next = vec![0.0; basis.len() + 1];
        for (k, b) in basis.iter().enumerate() {
            next[k] -= b * lo / span;
            next[k + 1] += b / span;
        }
        basis = next;
    }

    let fit = PolynomialFit {
        coefficients,
        r_squared: 0.0,
    };
    let fitted: Vec<f64> = points.iter().map(|p| fit.eval(p.0)).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.1).collect();
    Ok(PolynomialFit {
        r_squared: r_squared(&ys, &fitted),
        ..fit
    })
}
