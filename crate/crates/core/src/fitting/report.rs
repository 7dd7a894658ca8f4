use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{ExponentialFit, MmfFit, PolynomialFit};

/// One-line summary `model=<name> params=<csv> r2=<val> converged=<0|1>`.
///
/// Reals are written in shortest round-trip form, so parsing a formatted
/// report gives back the same values.
#[derive(Debug, Clone, PartialEq)]
pub struct FitReport {
    pub model: String,
    pub params: Vec<f64>,
    pub r2: f64,
    pub converged: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("malformed fit report: {0}")]
pub struct ReportParseError(String);

impl fmt::Display for FitReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(f64::to_string).collect();
        write!(
            f,
            "model={} params={} r2={} converged={}",
            self.model,
            params.join(","),
            self.r2,
            u8::from(self.converged)
        )
    }
}

fn field<'a>(token: Option<&'a str>, key: &str) -> Result<&'a str, ReportParseError> {
    token
        .and_then(|t| t.strip_prefix(key))
        .and_then(|t| t.strip_prefix('='))
        .ok_or_else(|| ReportParseError(format!("expected `{key}=`")))
}

fn real(s: &str) -> Result<f64, ReportParseError> {
    s.parse()
        .map_err(|_| ReportParseError(format!("bad number `{s}`")))
}

impl FromStr for FitReport {
    type Err = ReportParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut tokens = s.split_ascii_whitespace();
        let model = field(tokens.next(), "model")?;
        if model.is_empty() || model.contains('=') {
            return Err(ReportParseError("bad model name".into()));
        }
        let params = field(tokens.next(), "params")?;
        let params = if params.is_empty() {
            Vec::new()
        } else {
            params.split(',').map(real).collect::<Result<_, _>>()?
        };
        let r2 = real(field(tokens.next(), "r2")?)?;
        let converged = match field(tokens.next(), "converged")? {
            "0" => false,
            "1" => true,
            other => return Err(ReportParseError(format!("bad flag `{other}`"))),
        };
        if tokens.next().is_some() {
            return Err(ReportParseError("trailing fields".into()));
        }
        Ok(FitReport {
            model: model.to_string(),
            params,
            r2,
            converged,
        })
    }
}

impl From<&PolynomialFit> for FitReport {
    fn from(fit: &PolynomialFit) -> Self {
        FitReport {
            model: if fit.degree() == 4 {
                "quartic".into()
            } else {
                format!("poly{}", fit.degree())
            },
            params: fit.coefficients.clone(),
            r2: fit.r_squared,
            converged: true,
        }
    }
}

impl From<&MmfFit> for FitReport {
    fn from(fit: &MmfFit) -> Self {
        FitReport {
            model: "mmf".into(),
            params: fit.params().to_vec(),
            r2: fit.r_squared,
            converged: fit.converged,
        }
    }
}

impl From<&ExponentialFit> for FitReport {
    fn from(fit: &ExponentialFit) -> Self {
        FitReport {
            model: "exponential".into(),
            params: vec![fit.a, fit.b],
            r2: fit.r_squared,
            converged: fit.converged,
        }
    }
}
