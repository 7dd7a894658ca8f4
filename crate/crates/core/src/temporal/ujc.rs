use std::collections::{BTreeMap, HashMap};
use std::io;

use super::category::GrowthCategory;
use super::TemporalError;
use crate::graph::TimeStampedGraph;
use crate::metrics::format_sig;

pub const SECONDS_PER_WEEK: f64 = 7.0 * 86_400.0;
pub const SAMPLE_SPACING_WEEKS: f64 = 4.0;

/// First activity of one user in one community.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct JoinEvent {
    pub user: String,
    /// seconds since the epoch
    pub timestamp: i64,
}

impl JoinEvent {
    pub fn new(user: impl Into<String>, timestamp: i64) -> Self {
        JoinEvent {
            user: user.into(),
            timestamp,
        }
    }
}

/// Cumulative fraction of joined users, sampled every four weeks and once
/// more at `t_end`.
#[derive(Debug, Clone, PartialEq)]
pub struct UjCurve {
    /// `(weeks since the first join, fraction)`
    pub samples: Vec<(f64, f64)>,
    pub t_end: f64,
    pub total_users: usize,
}

/// Builds the curve from join events. A user with several events counts
/// from the earliest one. The sample at `t` is the fraction of users whose
/// offset is strictly below `t`, so the curve starts at 0 and the final
/// sample at `t_end` is 1.
pub fn build_ujc(events: &[JoinEvent]) -> Result<UjCurve, TemporalError> {
    let mut first: HashMap<&str, i64> = HashMap::new();
    for e in events {
        first
            .entry(e.user.as_str())
            .and_modify(|t| *t = (*t).min(e.timestamp))
            .or_insert(e.timestamp);
    }
    let mut times: Vec<i64> = first.into_values().collect();
    if times.len() < 2 {
        return Err(TemporalError::DegenerateSpan(format!(
            "{} distinct users",
            times.len()
        )));
    }
    times.sort_unstable();
    let start = times[0];
    let t_end = (times[times.len() - 1] - start) as f64 / SECONDS_PER_WEEK;
    if t_end <= 0.0 {
        return Err(TemporalError::DegenerateSpan(
            "all users joined at the same instant".into(),
        ));
    }
    let offsets: Vec<f64> = times
        .iter()
        .map(|&t| (t - start) as f64 / SECONDS_PER_WEEK)
        .collect();
    let n = offsets.len() as f64;
    let mut samples = Vec::new();
    let mut k = 0usize;
    loop {
        let t = SAMPLE_SPACING_WEEKS * k as f64;
        if t >= t_end {
            break;
        }
        let joined = offsets.partition_point(|&o| o < t);
        samples.push((t, joined as f64 / n));
        k += 1;
    }
    samples.push((t_end, 1.0));
    Ok(UjCurve {
        samples,
        t_end,
        total_users: offsets.len(),
    })
}

/// One event per vertex, keyed by vertex index.
pub fn join_events_from_graph(g: &TimeStampedGraph) -> Vec<JoinEvent> {
    g.join_times()
        .iter()
        .enumerate()
        .map(|(i, &t)| JoinEvent::new(i.to_string(), t))
        .collect()
}

/// Reads a `community,user,timestamp` CSV into per-community event lists.
pub fn read_join_events<R: io::Read>(
    reader: R,
) -> Result<BTreeMap<String, Vec<JoinEvent>>, TemporalError> {
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(reader);
    let headers = rdr.headers().map_err(|e| csv_error(e, 1))?.clone();
    let column = |name: &str| {
        headers
            .iter()
            .position(|h| h == name)
            .ok_or_else(|| TemporalError::Parse {
                line: 1,
                message: format!("missing column `{name}`"),
            })
    };
    let (c, u, t) = (column("community")?, column("user")?, column("timestamp")?);
    let mut out: BTreeMap<String, Vec<JoinEvent>> = BTreeMap::new();
    for record in rdr.records() {
        let record = record.map_err(|e| csv_error(e, 0))?;
        let line = record.position().map_or(0, |p| p.line());
        let get = |i: usize| record.get(i).unwrap_or_default();
        let timestamp: i64 = get(t).parse().map_err(|_| TemporalError::Parse {
            line,
            message: format!("bad timestamp `{}`", get(t)),
        })?;
        out.entry(get(c).to_string())
            .or_default()
            .push(JoinEvent::new(get(u), timestamp));
    }
    Ok(out)
}

fn csv_error(e: csv::Error, fallback_line: u64) -> TemporalError {
    let line = e.position().map_or(fallback_line, |p| p.line());
    match e.into_kind() {
        csv::ErrorKind::Io(io) => TemporalError::Io(io),
        other => TemporalError::Parse {
            line,
            message: format!("{other:?}"),
        },
    }
}

pub fn write_ujc_csv<W: io::Write>(out: W, curve: &UjCurve) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["t_weeks", "fraction"])?;
    for &(t, f) in &curve.samples {
        w.write_record([format_sig(t), format_sig(f)])?;
    }
    w.flush()
}

/// `community,fit_kind,r2,norm_area,category`; absent values are empty.
pub fn write_category_report<W: io::Write>(
    out: W,
    rows: &[(String, GrowthCategory)],
) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["community", "fit_kind", "r2", "norm_area", "category"])?;
    for (name, cat) in rows {
        w.write_record([
            name.clone(),
            cat.fit_kind.to_string(),
            cat.r_squared.map(format_sig).unwrap_or_default(),
            cat.norm_area.map(format_sig).unwrap_or_default(),
            cat.category.to_string(),
        ])?;
    }
    w.flush()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::ModelRng;
    use proptest::prelude::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    const WEEK: i64 = 604_800;

    fn uniform_events(n: usize, span_weeks: i64) -> Vec<JoinEvent> {
        (0..n)
            .map(|i| {
                JoinEvent::new(
                    format!("u{i}"),
                    i as i64 * span_weeks * WEEK / (n as i64 - 1),
                )
            })
            .collect()
    }

    #[test]
    fn step_function() {
        let n = 20;
        let mut events: Vec<JoinEvent> = (0..n - 1)
            .map(|i| JoinEvent::new(format!("u{i}"), 0))
            .collect();
        events.push(JoinEvent::new("late", 30 * WEEK));
        let c = build_ujc(&events).unwrap();
        assert_eq!(c.samples[0], (0.0, 0.0));
        assert_eq!(c.samples[1], (4.0, 19.0 / 20.0));
        assert_eq!(*c.samples.last().unwrap(), (30.0, 1.0));
    }

    #[test]
    fn uniform_joins_follow_the_diagonal() {
        let c = build_ujc(&uniform_events(500, 100)).unwrap();
        for &(t, f) in &c.samples[1..c.samples.len() - 1] {
            assert!((f - t / c.t_end).abs() <= 1.0 / 500.0 + 1e-12, "{t} {f}");
        }
    }

    #[test]
    fn sample_count_for_188_weeks() {
        let c = build_ujc(&uniform_events(1000, 188)).unwrap();
        assert_eq!(c.samples.len(), 48);
        let gaps: Vec<f64> = c.samples.windows(2).map(|w| w[1].0 - w[0].0).collect();
        assert!(gaps.iter().all(|&g| (g - 4.0).abs() < 1e-12));
        let c = build_ujc(&uniform_events(100, 187)).unwrap();
        let last_gap = c.samples[c.samples.len() - 1].0 - c.samples[c.samples.len() - 2].0;
        assert!((last_gap - 3.0).abs() < 1e-12);
    }

    #[test]
    fn repeated_users_count_once() {
        let events = vec![
            JoinEvent::new("a", 0),
            JoinEvent::new("b", 10 * WEEK),
            JoinEvent::new("a", 9 * WEEK),
        ];
        let c = build_ujc(&events).unwrap();
        assert_eq!(c.total_users, 2);
        assert_eq!(c.samples[1], (4.0, 0.5));
    }

    #[test]
    fn degenerate_spans() {
        assert!(build_ujc(&[JoinEvent::new("a", 5)]).is_err());
        assert!(build_ujc(&[JoinEvent::new("a", 5), JoinEvent::new("b", 5)]).is_err());
    }

    #[test]
    fn reads_event_csv() {
        let text = "community,user,timestamp\nx,a,10\ny,b,20\nx,c,30\n";
        let map = read_join_events(text.as_bytes()).unwrap();
        assert_eq!(
            map["x"],
            vec![JoinEvent::new("a", 10), JoinEvent::new("c", 30)]
        );
        assert!(read_join_events("community,user\nx,a\n".as_bytes()).is_err());
        assert!(read_join_events("community,user,timestamp\nx,a,soon\n".as_bytes()).is_err());
    }

    proptest! {
        #[test]
        fn permutation_invariant_and_monotone(
            times in prop::collection::vec(0i64..400 * WEEK, 2..200),
            seed in any::<u64>(),
        ) {
            let events: Vec<JoinEvent> = times.iter().enumerate()
                .map(|(i, &t)| JoinEvent::new(format!("u{}", i % 150), t)).collect();
            let Ok(a) = build_ujc(&events) else { return Ok(()); };
            let mut shuffled = events.clone();
            shuffled.shuffle(&mut ModelRng::seed_from_u64(seed));
            prop_assert_eq!(&build_ujc(&shuffled).unwrap(), &a);
            prop_assert!(a.samples.windows(2).all(|w| w[0].1 <= w[1].1));
            prop_assert_eq!(a.samples[0].1, 0.0);
            prop_assert_eq!(a.samples.last().unwrap().1, 1.0);
        }
    }
}
