use nalgebra::{DMatrix, DVector};
use rand::seq::SliceRandom;
use rand::SeedableRng;

use super::{r_squared, solve_least_squares, FitError};
use crate::generators::ModelRng;

/// Sample Pearson correlation.
pub fn pearson(x: &[f64], y: &[f64]) -> Result<f64, FitError> {
    if x.len() != y.len() {
        return Err(FitError::InvalidInput(format!(
            "length mismatch: {} vs {}",
            x.len(),
            y.len()
        )));
    }
    if x.len() < 3 {
        return Err(FitError::InsufficientData(
            "pearson needs at least 3 pairs".into(),
        ));
    }
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let (mut sxy, mut sxx, mut syy) = (0.0, 0.0, 0.0);
    for (a, b) in x.iter().zip(y) {
        let (dx, dy) = (a - mx, b - my);
        sxy += dx * dy;
        sxx += dx * dx;
        syy += dy * dy;
    }
    if sxx == 0.0 || syy == 0.0 {
        return Err(FitError::InvalidInput("zero variance".into()));
    }
    Ok((sxy / (sxx.sqrt() * syy.sqrt())).clamp(-1.0, 1.0))
}

#[derive(Debug, Clone, PartialEq)]
pub struct OlsFit {
    /// one per feature column, on the original scale
    pub coefficients: Vec<f64>,
    pub intercept: f64,
    pub r_squared: f64,
}

impl OlsFit {
    pub fn predict(&self, row: &[f64]) -> f64 {
        self.intercept
            + self
                .coefficients
                .iter()
                .zip(row)
                .map(|(c, x)| c * x)
                .sum::<f64>()
    }
}

fn check_shape(features: &[Vec<f64>], target: &[f64]) -> Result<usize, FitError> {
    if features.len() != target.len() {
        return Err(FitError::InvalidInput(format!(
            "{} feature rows for {} targets",
            features.len(),
            target.len()
        )));
    }
    let cols = features.first().map_or(0, Vec::len);
    if features.iter().any(|r| r.len() != cols) {
        return Err(FitError::InvalidInput("ragged feature matrix".into()));
    }
    Ok(cols)
}

/// Ordinary least squares with an intercept. Columns are standardised for
/// the solve; a constant or collinear column is a rank deficiency.
pub fn ols_regression(features: &[Vec<f64>], target: &[f64]) -> Result<OlsFit, FitError> {
    let cols = check_shape(features, target)?;
    let rows = features.len();
    if rows < cols + 1 || rows == 0 {
        return Err(FitError::RankDeficient(format!(
            "{rows} rows for {cols} features plus intercept"
        )));
    }
    let mut means = vec![0.0; cols];
    let mut sds = vec![0.0; cols];
    for j in 0..cols {
        let m = features.iter().map(|r| r[j]).sum::<f64>() / rows as f64;
        let var = features.iter().map(|r| (r[j] - m).powi(2)).sum::<f64>() / rows as f64;
        if !(var > 0.0) {
            return Err(FitError::RankDeficient(format!("column {j} is constant")));
        }
        means[j] = m;
        sds[j] = var.sqrt();
    }
    let design = DMatrix::from_fn(rows, cols + 1, |i, j| {
        if j == 0 {
            1.0
        } else {
            (features[i][j - 1] - means[j - 1]) / sds[j - 1]
        }
    });
    let y = DVector::from_column_slice(target);
    let beta = solve_least_squares(design, &y)?;

    let coefficients: Vec<f64> = (0..cols).map(|j| beta[j + 1] / sds[j]).collect();
    let intercept = beta[0]
        - coefficients
            .iter()
            .zip(&means)
            .map(|(c, m)| c * m)
            .sum::<f64>();
    let fit = OlsFit {
        coefficients,
        intercept,
        r_squared: 0.0,
    };
    let fitted: Vec<f64> = features.iter().map(|r| fit.predict(r)).collect();
    Ok(OlsFit {
        r_squared: r_squared(target, &fitted),
        ..fit
    })
}

/// Held-out error averaged over folds. RMSE is the mean of per-fold RMSEs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CvMetrics {
    pub mae: f64,
    pub mse: f64,
    pub rmse: f64,
}

/// k-fold cross-validation of [`ols_regression`]. Rows are shuffled with
/// `seed`; the row at shuffled position `i` is held out in fold `i % k`.
pub fn cross_validate(
    features: &[Vec<f64>],
    target: &[f64],
    k: usize,
    seed: u64,
) -> Result<CvMetrics, FitError> {
    check_shape(features, target)?;
    let n = target.len();
    if k < 2 || k > n {
        return Err(FitError::InvalidFolds(format!("k = {k} with {n} rows")));
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut ModelRng::seed_from_u64(seed));

    let (mut mae, mut mse, mut rmse) = (0.0, 0.0, 0.0);
    for fold in 0..k {
        let (mut train_x, mut train_y, mut test) = (Vec::new(), Vec::new(), Vec::new());
        for (pos, &row) in order.iter().enumerate() {
            if pos % k == fold {
                test.push(row);
            } else {
                train_x.push(features[row].clone());
                train_y.push(target[row]);
            }
        }
        let model = ols_regression(&train_x, &train_y)?;
        let m = test.len() as f64;
        let (mut abs, mut sq) = (0.0, 0.0);
        for &row in &test {
            let e = target[row] - model.predict(&features[row]);
            abs += e.abs();
            sq += e * e;
        }
        mae += abs / m;
        mse += sq / m;
        rmse += (sq / m).sqrt();
    }
    let k = k as f64;
    Ok(CvMetrics {
        mae: mae / k,
        mse: mse / k,
        rmse: rmse / k,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::Rng;
    use rand_distr::{Distribution, StandardNormal};

    #[test]
    fn perfect_correlations() {
        let x: Vec<f64> = (0..20).map(f64::from).collect();
        let y: Vec<f64> = x.iter().map(|v| 2.0 * v + 1.0).collect();
        let neg: Vec<f64> = x.iter().map(|v| -v).collect();
        assert!((pearson(&x, &y).unwrap() - 1.0).abs() < 1e-15);
        assert!((pearson(&x, &neg).unwrap() + 1.0).abs() < 1e-15);
    }

    #[test]
    fn pearson_errors() {
        assert!(pearson(&[1.0, 2.0], &[1.0, 2.0]).is_err());
        assert!(pearson(&[1.0, 2.0, 3.0], &[1.0, 1.0, 1.0]).is_err());
        assert!(pearson(&[1.0, 2.0, 3.0], &[1.0, 1.0]).is_err());
    }

    #[test]
    fn independent_samples_are_uncorrelated() {
        let mut rng = ModelRng::seed_from_u64(12);
        let x: Vec<f64> = (0..10_000).map(|_| rng.random()).collect();
        let y: Vec<f64> = (0..10_000).map(|_| rng.random()).collect();
        assert!(pearson(&x, &y).unwrap().abs() < 0.05);
    }

    proptest! {
        #[test]
        fn pearson_affine_invariance(
            pairs in prop::collection::vec((-100.0f64..100.0, -100.0f64..100.0), 3..40),
            scale in 0.01f64..50.0,
            shift in -1e3f64..1e3,
        ) {
            let x: Vec<f64> = pairs.iter().map(|p| p.0).collect();
            let y: Vec<f64> = pairs.iter().map(|p| p.1).collect();
            let Ok(r) = pearson(&x, &y) else { return Ok(()); };
            let moved: Vec<f64> = x.iter().map(|v| scale * v + shift).collect();
            let negated: Vec<f64> = y.iter().map(|v| -v).collect();
            prop_assert!((pearson(&moved, &y).unwrap() - r).abs() < 1e-9);
            prop_assert!((pearson(&x, &negated).unwrap() + r).abs() < 1e-12);
        }
    }

    fn random_design(rows: usize, cols: usize, seed: u64) -> Vec<Vec<f64>> {
        let mut rng = ModelRng::seed_from_u64(seed);
        (0..rows)
            .map(|_| (0..cols).map(|_| rng.random_range(-5.0..5.0)).collect())
            .collect()
    }

    #[test]
    fn exact_linear_target() {
        let x = random_design(50, 3, 1);
        let y: Vec<f64> = x
            .iter()
            .map(|r| 0.5 + 2.0 * r[0] - 3.0 * r[1] + 0.25 * r[2])
            .collect();
        let fit = ols_regression(&x, &y).unwrap();
        assert!((fit.r_squared - 1.0).abs() < 1e-12);
        assert!((fit.intercept - 0.5).abs() < 1e-8);
        for (got, want) in fit.coefficients.iter().zip([2.0, -3.0, 0.25]) {
            assert!((got - want).abs() < 1e-8);
        }
    }

    #[test]
    fn independent_target_explains_nothing() {
        let x = random_design(10_000, 2, 2);
        let mut rng = ModelRng::seed_from_u64(22);
        let y: Vec<f64> = (0..10_000).map(|_| rng.sample(StandardNormal)).collect();
        assert!(ols_regression(&x, &y).unwrap().r_squared < 0.01);
    }

    #[test]
    fn collinear_columns_are_rejected() {
        let x: Vec<Vec<f64>> = random_design(30, 1, 3)
            .into_iter()
            .map(|r| vec![r[0], r[0]])
            .collect();
        let y: Vec<f64> = x.iter().map(|r| r[0]).collect();
        assert!(matches!(
            ols_regression(&x, &y),
            Err(FitError::RankDeficient(_))
        ));
    }

    #[test]
    fn cv_on_noise_free_target() {
        let x = random_design(200, 2, 4);
        let y: Vec<f64> = x.iter().map(|r| 1.0 + r[0] - r[1]).collect();
        let cv = cross_validate(&x, &y, 10, 0).unwrap();
        assert!(cv.mae <= 1e-8 && cv.rmse <= 1e-8);
    }

    #[test]
    fn cv_on_unit_noise() {
        let mut rng = ModelRng::seed_from_u64(5);
        let y: Vec<f64> = (0..10_000)
            .map(|_| StandardNormal.sample(&mut rng))
            .collect();
        let x = vec![Vec::new(); y.len()];
        let cv = cross_validate(&x, &y, 10, 1).unwrap();
        assert!((cv.rmse - 1.0).abs() < 0.05, "{cv:?}");
    }

    #[test]
    fn cv_is_reproducible_and_validates_folds() {
        let x = random_design(40, 2, 6);
        let y: Vec<f64> = x.iter().map(|r| r[0] * r[1]).collect();
        let a = cross_validate(&x, &y, 5, 9).unwrap();
        let b = cross_validate(&x, &y, 5, 9).unwrap();
        assert_eq!(a.rmse.to_bits(), b.rmse.to_bits());
        assert!(matches!(
            cross_validate(&x, &y, 41, 9),
            Err(FitError::InvalidFolds(_))
        ));
        assert!(cross_validate(&x, &y, 1, 9).is_err());
    }
}
