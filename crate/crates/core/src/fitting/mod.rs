//! Regression machinery: polynomial least squares, the MMF growth model, the
//! exponential decay model, Pearson correlation and cross-validated OLS.

mod exponential;
mod lm;
mod mmf;
mod poly;
mod report;
mod stats;

use nalgebra::{DMatrix, DVector};
use thiserror::Error;

pub use exponential::{fit_exponential, ExponentialFit};
pub use lm::{levenberg_marquardt, LmOptions, LmOutcome};
pub use mmf::{fit_mmf, mmf_eval, MmfFit, MMF_MIN_POINTS};
pub use poly::{fit_polynomial, PolynomialFit};
pub use report::{FitReport, ReportParseError};
pub use stats::{cross_validate, ols_regression, pearson, CvMetrics, OlsFit};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FitError {
    #[error("insufficient data: {0}")]
    InsufficientData(String),
    #[error("rank-deficient design: {0}")]
    RankDeficient(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("invalid folds: {0}")]
    InvalidFolds(String),
}

/// `1 - SS_res / SS_tot`. A constant target that is fitted exactly scores 1;
/// a constant target fitted with any residual scores negative infinity.
pub fn r_squared(y: &[f64], fitted: &[f64]) -> f64 {
    debug_assert_eq!(y.len(), fitted.len());
    let n = y.len() as f64;
    let mean = y.iter().sum::<f64>() / n;
    let ss_tot: f64 = y.iter().map(|v| (v - mean).powi(2)).sum();
    let ss_res: f64 = y.iter().zip(fitted).map(|(v, f)| (v - f).powi(2)).sum();
    let scale: f64 = y.iter().map(|v| v * v).sum::<f64>().max(f64::MIN_POSITIVE);
    if ss_tot <= 1e-28 * scale {
        if ss_res <= 1e-24 * scale {
            1.0
        } else {
            f64::NEG_INFINITY
        }
    } else {
        1.0 - ss_res / ss_tot
    }
}

/// Least squares via Householder QR. Fails when a diagonal entry of `R` is
/// negligible relative to the largest one.
pub(crate) fn solve_least_squares(
    a: DMatrix<f64>,
    b: &DVector<f64>,
) -> Result<DVector<f64>, FitError> {
    let cols = a.ncols();
    if a.nrows() < cols {
        return Err(FitError::RankDeficient(format!(
            "{} rows for {cols} unknowns",
            a.nrows()
        )));
    }
    let qr = a.qr();
    let r = qr.r();
    let largest = (0..cols).map(|i| r[(i, i)].abs()).fold(0.0, f64::max);
    for i in 0..cols {
        if r[(i, i)].abs() <= 1e-10 * largest.max(f64::MIN_POSITIVE) {
            return Err(FitError::RankDeficient(format!("column {i} is dependent")));
        }
    }
    let qtb = qr.q().transpose() * b;
    r.solve_upper_triangular(&qtb)
        .ok_or_else(|| FitError::RankDeficient("singular triangular factor".into()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn r_squared_conventions() {
        assert_eq!(r_squared(&[5.0, 5.0, 5.0], &[5.0, 5.0, 5.0]), 1.0);
        assert_eq!(r_squared(&[5.0, 5.0], &[5.0, 6.0]), f64::NEG_INFINITY);
        assert!((r_squared(&[1.0, 2.0, 3.0], &[2.0, 2.0, 2.0])).abs() < 1e-15);
        assert!(r_squared(&[1.0, 2.0, 3.0], &[3.0, 2.0, 1.0]) < 0.0);
    }

    #[test]
    fn detects_dependent_columns() {
        let a = DMatrix::from_row_slice(3, 2, &[1.0, 2.0, 2.0, 4.0, 3.0, 6.0]);
        let b = DVector::from_vec(vec![1.0, 2.0, 3.0]);
        assert!(matches!(
            solve_least_squares(a, &b),
            Err(FitError::RankDeficient(_))
        ));
    }
}
