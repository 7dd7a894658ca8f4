use std::fmt;

use super::ujc::UjCurve;
use crate::fitting::{fit_mmf, fit_polynomial, PolynomialFit};

/// Minimum R² for a quartic or MMF fit to count as a match.
pub const FIT_THRESHOLD: f64 = 0.95;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Category {
    Polynomial,
    Sublinear,
    Linear,
    Superlinear,
    Sigmoidal,
    EventsOriented,
}

impl Category {
    /// Interval lookup on a normalized area clamped to `[0, 1]`.
    pub fn from_norm_area(narea: f64) -> Category {
        let x = narea.clamp(0.0, 1.0);
        if x < 0.24 {
            Category::Polynomial
        } else if x < 0.4 {
            Category::Sublinear
        } else if x < 0.56 {
            Category::Linear
        } else if x < 0.72 {
            Category::Superlinear
        } else {
            Category::Sigmoidal
        }
    }
}

impl fmt::Display for Category {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Category::Polynomial => "polynomial",
            Category::Sublinear => "sublinear",
            Category::Linear => "linear",
            Category::Superlinear => "superlinear",
            Category::Sigmoidal => "sigmoidal",
            Category::EventsOriented => "events_oriented",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FitKind {
    Quartic,
    Mmf,
    None,
}

impl fmt::Display for FitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FitKind::Quartic => "quartic",
            FitKind::Mmf => "mmf",
            FitKind::None => "none",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GrowthCategory {
    pub category: Category,
    /// raw, unclamped; present iff `fit_kind` is quartic
    pub norm_area: Option<f64>,
    pub fit_kind: FitKind,
    /// R² of the accepted fit
    pub r_squared: Option<f64>,
    /// why no fit was accepted, when a fit failed outright
    pub diagnostic: Option<String>,
}

/// Mean of the fitted polynomial over `[0, t_end]`.
pub fn normalized_area(fit: &PolynomialFit, t_end: f64) -> f64 {
    fit.integral(0.0, t_end) / t_end
}

/// Quartic first, then MMF, then events-oriented.
pub fn categorize_ujc(curve: &UjCurve) -> GrowthCategory {
    let mut problems = Vec::new();
    match fit_polynomial(&curve.samples, 4) {
        Ok(q) if q.r_squared >= FIT_THRESHOLD => {
            let narea = normalized_area(&q, curve.t_end);
            return GrowthCategory {
                category: Category::from_norm_area(narea),
                norm_area: Some(narea),
                fit_kind: FitKind::Quartic,
                r_squared: Some(q.r_squared),
                diagnostic: None,
            };
        }
        Ok(_) => {}
        Err(e) => problems.push(format!("quartic: {e}")),
    }
    match fit_mmf(&curve.samples) {
        Ok(m) if m.r_squared >= FIT_THRESHOLD => {
            return GrowthCategory {
                category: Category::Sigmoidal,
                norm_area: None,
                fit_kind: FitKind::Mmf,
                r_squared: Some(m.r_squared),
                diagnostic: (!m.converged).then(|| "mmf: not converged".to_string()),
            };
        }
        Ok(_) => {}
        Err(e) => problems.push(format!("mmf: {e}")),
    }
    GrowthCategory {
        category: Category::EventsOriented,
        norm_area: None,
        fit_kind: FitKind::None,
        r_squared: None,
        diagnostic: (!problems.is_empty()).then(|| problems.join("; ")),
    }
}
