use std::fmt;
use std::str::FromStr;

use super::{invalid, GenError};

/// Relative weight of an edge between two time groups `t` iterations apart.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TimeDiffFunction {
    /// `f(t) = 2^(-offset - t)`
    Exp2 { offset: f64 },
    /// `f(t) = scale * ratio^t`
    Geometric { scale: f64, ratio: f64 },
}

impl TimeDiffFunction {
    pub fn exp2(offset: f64) -> Result<Self, GenError> {
        if !offset.is_finite() {
            return Err(invalid("exp2 offset must be finite"));
        }
        Ok(TimeDiffFunction::Exp2 { offset })
    }

    pub fn geometric(scale: f64, ratio: f64) -> Result<Self, GenError> {
        if !(scale.is_finite() && scale > 0.0 && ratio.is_finite() && ratio > 0.0) {
            return Err(invalid("geo scale and ratio must be positive and finite"));
        }
        Ok(TimeDiffFunction::Geometric { scale, ratio })
    }

    /// Weight for a time difference of `t` groups. Very large `t` may
    /// underflow to zero.
    pub fn eval(&self, t: u32) -> f64 {
        match *self {
            TimeDiffFunction::Exp2 { offset } => (-offset - f64::from(t)).exp2(),
            TimeDiffFunction::Geometric { scale, ratio } => scale * ratio.powi(t as i32),
        }
    }
}

impl FromStr for TimeDiffFunction {
    type Err = GenError;

    /// Accepts `exp2:<c>` and `geo:<a>:<r>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.trim().split(':').collect();
        let num = |p: &str| -> Result<f64, GenError> {
            p.trim()
                .parse::<f64>()
                .map_err(|_| invalid(format!("bad number `{p}` in time-difference function")))
        };
        match parts.as_slice() {
            ["exp2", c] => TimeDiffFunction::exp2(num(c)?),
            ["geo", a, r] => TimeDiffFunction::geometric(num(a)?, num(r)?),
            _ => Err(invalid(format!(
                "time-difference function `{s}` is not `exp2:<c>` or `geo:<a>:<r>`"
            ))),
        }
    }
}

impl fmt::Display for TimeDiffFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TimeDiffFunction::Exp2 { offset } => write!(f, "exp2:{offset}"),
            TimeDiffFunction::Geometric { scale, ratio } => write!(f, "geo:{scale}:{ratio}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exp2_matches_closed_form() {
        let f: TimeDiffFunction = "exp2:1".parse().unwrap();
        assert_eq!(f.eval(0), 0.5);
        assert_eq!(f.eval(1), 0.25);
        assert_eq!(f.eval(2), 0.125);
    }

    #[test]
    fn geometric_matches_closed_form() {
        let f: TimeDiffFunction = "geo:0.8:0.2".parse().unwrap();
        assert!((f.eval(0) - 0.8).abs() < 1e-15);
        assert!((f.eval(1) - 0.16).abs() < 1e-15);
        assert!((f.eval(3) - 0.8 * 0.008).abs() < 1e-15);
    }

    #[test]
    fn display_round_trips() {
        for s in ["exp2:1", "geo:0.8:0.2", "exp2:-0.5"] {
            let f: TimeDiffFunction = s.parse().unwrap();
            assert_eq!(f.to_string().parse::<TimeDiffFunction>().unwrap(), f);
        }
    }

    #[test]
    fn rejects_malformed_strings() {
        for s in [
            "",
            "exp2",
            "exp2:x",
            "geo:1",
            "geo:0:0.5",
            "geo:1:-1",
            "pow:2",
            "exp2:inf",
        ] {
            assert!(s.parse::<TimeDiffFunction>().is_err(), "{s}");
        }
    }
}
