use std::fmt;
use std::str::FromStr;

use super::{invalid, GenError};

/// Vertices added per linear-growth iteration.
pub const LINEAR_BATCH: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ScheduleKind {
    Linear,
    Polynomial,
    Sigmoidal,
    Explicit,
}

impl fmt::Display for ScheduleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScheduleKind::Linear => "linear",
            ScheduleKind::Polynomial => "polynomial",
            ScheduleKind::Sigmoidal => "sigmoidal",
            ScheduleKind::Explicit => "explicit",
        })
    }
}

/// Batch sizes per iteration. Entry `i` is the number of vertices that join
/// with time group `i`; zero entries are allowed but contribute no group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthSchedule {
    batches: Vec<usize>,
    kind: ScheduleKind,
}

impl GrowthSchedule {
    pub fn explicit(batches: Vec<usize>) -> Result<Self, GenError> {
        if !batches.iter().any(|&b| b > 0) {
            return Err(invalid("schedule needs at least one positive batch"));
        }
        Ok(GrowthSchedule {
            batches,
            kind: ScheduleKind::Explicit,
        })
    }

    pub fn batches(&self) -> &[usize] {
        &self.batches
    }

    pub fn kind(&self) -> ScheduleKind {
        self.kind
    }

    pub fn total_vertices(&self) -> usize {
        self.batches.iter().sum()
    }
}

/// Builds one of the standard schedules for `target` vertices.
///
/// - linear: batches of 10 (target must be a multiple of 10)
/// - polynomial: `5x^2` for `x = 0..T-1`, skipping the empty `x = 0` batch
/// - sigmoidal: the polynomial sequence reversed
pub fn growth_sequence(kind: ScheduleKind, target: usize) -> Result<GrowthSchedule, GenError> {
    let unreachable = GenError::UnreachableTarget { kind, target };
    if target == 0 {
        return Err(unreachable);
    }
    let batches = match kind {
        ScheduleKind::Linear => return linear_sequence(target, LINEAR_BATCH),
        ScheduleKind::Polynomial | ScheduleKind::Sigmoidal => {
            let mut seq = Vec::new();
            let mut sum = 0usize;
            let mut x = 1usize;
            while sum < target {
                let b = 5 * x * x;
                seq.push(b);
                sum += b;
                x += 1;
            }
            if sum != target {
                return Err(unreachable);
            }
            if kind == ScheduleKind::Sigmoidal {
                seq.reverse();
            }
            seq
        }
        ScheduleKind::Explicit => {
            return Err(invalid(
                "explicit schedules are built with GrowthSchedule::explicit",
            ))
        }
    };
    Ok(GrowthSchedule { batches, kind })
}

/// Linear growth with a batch size other than [`LINEAR_BATCH`].
pub fn linear_sequence(target: usize, batch: usize) -> Result<GrowthSchedule, GenError> {
    if batch == 0 {
        return Err(invalid("linear batch size must be positive"));
    }
    if target == 0 || !target.is_multiple_of(batch) {
        return Err(GenError::UnreachableTarget {
            kind: ScheduleKind::Linear,
            target,
        });
    }
    Ok(GrowthSchedule {
        batches: vec![batch; target / batch],
        kind: ScheduleKind::Linear,
    })
}

impl FromStr for GrowthSchedule {
    type Err = GenError;

    /// Accepts `linear:<n>`, `linear:<n>:<batch>`, `poly:<n>`, `sig:<n>` and
    /// `explicit:<b1>,<b2>,...`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (head, tail) = s
            .trim()
            .split_once(':')
            .ok_or_else(|| invalid(format!("schedule `{s}` lacks a `kind:` prefix")))?;
        let count = |t: &str| -> Result<usize, GenError> {
            t.trim()
                .parse()
                .map_err(|_| invalid(format!("bad vertex count `{t}`")))
        };
        match head {
            "linear" => match tail.split_once(':') {
                Some((n, batch)) => linear_sequence(count(n)?, count(batch)?),
                None => growth_sequence(ScheduleKind::Linear, count(tail)?),
            },
            "poly" | "polynomial" => growth_sequence(ScheduleKind::Polynomial, count(tail)?),
            "sig" | "sigmoidal" => growth_sequence(ScheduleKind::Sigmoidal, count(tail)?),
            "explicit" => {
                let batches = tail.split(',').map(count).collect::<Result<Vec<_>, _>>()?;
                GrowthSchedule::explicit(batches)
            }
            other => Err(invalid(format!("unknown schedule kind `{other}`"))),
        }
    }
}

impl fmt::Display for GrowthSchedule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            ScheduleKind::Linear if self.batches[0] == LINEAR_BATCH => {
                write!(f, "linear:{}", self.total_vertices())
            }
            ScheduleKind::Linear => {
                write!(f, "linear:{}:{}", self.total_vertices(), self.batches[0])
            }
            ScheduleKind::Polynomial => write!(f, "poly:{}", self.total_vertices()),
            ScheduleKind::Sigmoidal => write!(f, "sig:{}", self.total_vertices()),
            ScheduleKind::Explicit => {
                let parts: Vec<String> = self.batches.iter().map(usize::to_string).collect();
                write!(f, "explicit:{}", parts.join(","))
            }
        }
    }
}
