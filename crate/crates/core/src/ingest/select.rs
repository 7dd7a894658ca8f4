use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::io;

use super::{CommentRecord, IngestError};
use crate::metrics::{format_sig, SECONDS_PER_DAY};

/// Inclusive thresholds a community must meet.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SelectionCriteria {
    pub min_users: usize,
    pub min_comments: usize,
    pub min_active_days: f64,
}

impl Default for SelectionCriteria {
    fn default() -> Self {
        SelectionCriteria {
            min_users: 10,
            min_comments: 1000,
            min_active_days: 365.0,
        }
    }
}

impl SelectionCriteria {
    pub fn validate(&self) -> Result<(), IngestError> {
        if self.min_users == 0 || self.min_comments == 0 || !(self.min_active_days > 0.0) {
            return Err(IngestError::InvalidConfig(
                "selection thresholds must be positive".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CommunityStats {
    /// distinct known authors
    pub users: usize,
    pub comments: usize,
    pub first: i64,
    pub last: i64,
}

impl CommunityStats {
    /// Days between the first and last comment.
    pub fn days(&self) -> f64 {
        (self.last - self.first) as f64 / SECONDS_PER_DAY
    }

    pub fn qualifies(&self, c: &SelectionCriteria) -> bool {
        self.users >= c.min_users
            && self.comments >= c.min_comments
            && self.days() >= c.min_active_days
    }
}

pub fn community_stats(records: &[CommentRecord]) -> BTreeMap<String, CommunityStats> {
    let mut authors: BTreeMap<&str, HashSet<&str>> = BTreeMap::new();
    let mut stats: BTreeMap<String, CommunityStats> = BTreeMap::new();
    for r in records {
        let s = stats.entry(r.community.clone()).or_insert(CommunityStats {
            users: 0,
            comments: 0,
            first: r.created,
            last: r.created,
        });
        s.comments += 1;
        s.first = s.first.min(r.created);
        s.last = s.last.max(r.created);
        let set = authors.entry(&r.community).or_default();
        if let Some(a) = &r.author {
            set.insert(a);
        }
    }
    for (name, set) in authors {
        if let Some(s) = stats.get_mut(name) {
            s.users = set.len();
        }
    }
    stats
}

pub fn select_communities(
    records: &[CommentRecord],
    criteria: &SelectionCriteria,
) -> BTreeSet<String> {
    community_stats(records)
        .into_iter()
        .filter(|(_, s)| s.qualifies(criteria))
        .map(|(name, _)| name)
        .collect()
}

/// `community,users,comments,days,selected`, one row per community.
pub fn write_manifest<W: io::Write>(
    out: W,
    stats: &BTreeMap<String, CommunityStats>,
    selected: &BTreeSet<String>,
) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["community", "users", "comments", "days", "selected"])?;
    for (name, s) in stats {
        w.write_record([
            name.clone(),
            s.users.to_string(),
            s.comments.to_string(),
            format_sig(s.days()),
            u8::from(selected.contains(name)).to_string(),
        ])?;
    }
    w.flush()
}
