use std::collections::{HashMap, HashSet};
use std::io::{self, BufRead};

use super::{CommentRecord, IngestError};

pub const DEFAULT_MAX_COMMENTS: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CleaningPolicy {
    /// authors with more comments than this are removed entirely
    pub max_comments_per_author: usize,
    pub bot_list: HashSet<String>,
    pub drop_deleted: bool,
}

impl Default for CleaningPolicy {
    fn default() -> Self {
        CleaningPolicy {
            max_comments_per_author: DEFAULT_MAX_COMMENTS,
            bot_list: HashSet::new(),
            drop_deleted: true,
        }
    }
}

impl CleaningPolicy {
    pub fn validate(&self) -> Result<(), IngestError> {
        if self.max_comments_per_author == 0 {
            return Err(IngestError::InvalidConfig(
                "max_comments_per_author must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// Drop counts per rule. Each dropped record is attributed to the first
/// rule that matches, in the order deleted, bot, volume.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CleaningReport {
    pub input: usize,
    pub deleted: usize,
    pub bots: usize,
    pub high_volume: usize,
    pub kept: usize,
}

/// One author name per line; blank lines and `#` comments are ignored.
pub fn load_bot_list<R: BufRead>(reader: R) -> io::Result<HashSet<String>> {
    let mut bots = HashSet::new();
    for line in reader.lines() {
        let line = line?;
        let name = line.trim();
        if !name.is_empty() && !name.starts_with('#') {
            bots.insert(name.to_string());
        }
    }
    Ok(bots)
}

/// Applies the policy. Comment volume is counted per author over the whole
/// input, deleted records excluded.
pub fn clean(
    records: Vec<CommentRecord>,
    policy: &CleaningPolicy,
) -> (Vec<CommentRecord>, CleaningReport) {
    let mut volume: HashMap<&str, usize> = HashMap::new();
    for r in &records {
        if let Some(a) = &r.author {
            *volume.entry(a.as_str()).or_default() += 1;
        }
    }
    let over: HashSet<String> = volume
        .into_iter()
        .filter(|&(_, n)| n > policy.max_comments_per_author)
        .map(|(a, _)| a.to_string())
        .collect();

    let mut report = CleaningReport {
        input: records.len(),
        ..CleaningReport::default()
    };
    let kept: Vec<CommentRecord> = records
        .into_iter()
        .filter(|r| match &r.author {
            None if policy.drop_deleted => {
                report.deleted += 1;
                false
            }
            None => true,
            Some(a) if policy.bot_list.contains(a) => {
                report.bots += 1;
                false
            }
            Some(a) if over.contains(a) => {
                report.high_volume += 1;
                false
            }
            Some(_) => true,
        })
        .collect();
    report.kept = kept.len();
    (kept, report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rec(id: usize, author: Option<&str>) -> CommentRecord {
        CommentRecord {
            comment_id: format!("c{id}"),
            parent_id: None,
            author: author.map(str::to_string),
            community: "s".into(),
            created: 1 + id as i64,
        }
    }

    #[test]
    fn volume_threshold_is_strict() {
        let mut records = Vec::new();
        for i in 0..DEFAULT_MAX_COMMENTS + 1 {
            records.push(rec(i, Some("heavy")));
        }
        for i in 0..DEFAULT_MAX_COMMENTS {
            records.push(rec(i, Some("busy")));
        }
        let (kept, report) = clean(records, &CleaningPolicy::default());
        assert_eq!(report.high_volume, DEFAULT_MAX_COMMENTS + 1);
        assert_eq!(kept.len(), DEFAULT_MAX_COMMENTS);
        assert!(kept.iter().all(|r| r.author.as_deref() == Some("busy")));
    }

    #[test]
    fn bots_and_deleted() {
        let policy = CleaningPolicy {
            bot_list: load_bot_list("# bots\nAutoModerator\n\n".as_bytes()).unwrap(),
            ..CleaningPolicy::default()
        };
        let records = vec![
            rec(0, Some("AutoModerator")),
            rec(1, None),
            rec(2, Some("alice")),
        ];
        let (kept, report) = clean(records.clone(), &policy);
        assert_eq!(kept, vec![records[2].clone()]);
        assert_eq!(
            (report.bots, report.deleted, report.kept, report.input),
            (1, 1, 1, 3)
        );

        let keep_deleted = CleaningPolicy {
            drop_deleted: false,
            ..policy
        };
        assert_eq!(clean(records, &keep_deleted).0.len(), 2);
    }
}
