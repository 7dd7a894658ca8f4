use std::collections::BTreeMap;
use std::path::Path;

use rayon::prelude::*;
use serde_json::json;
use tempnet::edge_list::write_edge_list;
use tempnet::ingest::{
    build_reply_graph, clean, community_stats, group_by_community, load_bot_list, open_corpus,
    parse_comments, select_communities, write_manifest, CleaningPolicy, CorpusFormat, IngestError,
    ReplyGraph, SelectionCriteria,
};

use crate::manifest::Manifest;
use crate::{create_dir, create_file, CliError, IngestArgs};

/// File-name-safe form of a community name.
pub(crate) fn file_name(community: &str) -> String {
    community
        .chars()
        .map(|c| {
            if c.is_ascii_alphanumeric() || c == '-' || c == '_' || c == '.' {
                c
            } else {
                '_'
            }
        })
        .collect()
}

fn ingest_error(path: &Path, e: IngestError) -> CliError {
    match e {
        IngestError::Io(io) => CliError::io(path, io),
        IngestError::InvalidConfig(m) => CliError::Usage(m),
    }
}

fn write_join_events(path: &Path, graphs: &[(String, ReplyGraph)]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(create_file(path)?);
    let err = |e: csv::Error| CliError::Compute(e.to_string());
    w.write_record(["community", "user", "timestamp"])
        .map_err(err)?;
    for (name, reply) in graphs {
        for (author, t) in reply.authors.iter().zip(reply.graph.join_times()) {
            w.write_record([name.as_str(), author.as_str(), &t.to_string()])
                .map_err(err)?;
        }
    }
    w.flush().map_err(|e| CliError::io(path, e))
}

pub fn run(args: &IngestArgs, threads: Option<usize>) -> Result<(), CliError> {
    let defaults = SelectionCriteria::default();
    let criteria = SelectionCriteria {
        min_users: args.min_users.unwrap_or(defaults.min_users),
        min_comments: args.min_comments.unwrap_or(defaults.min_comments),
        min_active_days: args.min_days.unwrap_or(defaults.min_active_days),
    };
    criteria
        .validate()
        .map_err(|e| ingest_error(&args.corpus, e))?;
    let mut policy = CleaningPolicy {
        drop_deleted: !args.keep_deleted,
        ..CleaningPolicy::default()
    };
    if let Some(max) = args.max_comments {
        policy.max_comments_per_author = max;
    }
    if let Some(path) = &args.bots {
        let file = std::fs::File::open(path).map_err(|e| CliError::io(path, e))?;
        policy.bot_list =
            load_bot_list(std::io::BufReader::new(file)).map_err(|e| CliError::io(path, e))?;
    }

    let reader = open_corpus(&args.corpus).map_err(|e| CliError::io(&args.corpus, e))?;
    let parsed = parse_comments(reader, CorpusFormat::from_path(&args.corpus))
        .map_err(|e| ingest_error(&args.corpus, e))?;
    if parsed.skipped > 0 {
        log::warn!(
            "{}: skipped {} malformed records",
            args.corpus.display(),
            parsed.skipped
        );
    }
    let skipped = parsed.skipped;
    let (records, report) = clean(parsed.records, &policy);
    let stats = community_stats(&records);
    let selected = select_communities(&records, &criteria);

    create_dir(&args.out)?;
    let mut groups = group_by_community(records);
    groups.retain(|name, _| selected.contains(name));
    let graphs: Vec<(String, ReplyGraph)> = groups
        .into_par_iter()
        .map(|(name, recs)| {
            let reply = build_reply_graph(&recs);
            (name, reply)
        })
        .collect();

    let mut files = BTreeMap::new();
    for (name, reply) in &graphs {
        let file = format!("{}.edges", file_name(name));
        if files.insert(file.clone(), name.clone()).is_some() {
            return Err(CliError::Compute(format!(
                "communities collide on file name {file}"
            )));
        }
        let path = args.out.join(&file);
        let mut out = create_file(&path)?;
        write_edge_list(&reply.graph, &mut out).map_err(|e| CliError::io(&path, e))?;
    }
    write_join_events(&args.out.join("join_events.csv"), &graphs)?;
    let communities = args.out.join("communities.csv");
    write_manifest(create_file(&communities)?, &stats, &selected)
        .map_err(|e| CliError::io(&communities, e))?;

    let mut manifest = Manifest::new("ingest");
    manifest.threads = threads;
    manifest
        .option("corpus", args.corpus.display())
        .option(
            "bots",
            args.bots
                .as_ref()
                .map(|p| p.display().to_string())
                .unwrap_or_default(),
        )
        .option("max-comments", policy.max_comments_per_author)
        .option("keep-deleted", args.keep_deleted)
        .option("min-users", criteria.min_users)
        .option("min-comments", criteria.min_comments)
        .option("min-days", criteria.min_active_days)
        .option("out", args.out.display());
    manifest.results.insert(
        "cleaning".into(),
        json!({
            "malformed": skipped,
            "input": report.input,
            "deleted": report.deleted,
            "bots": report.bots,
            "high_volume": report.high_volume,
            "kept": report.kept,
        }),
    );
    manifest
        .results
        .insert("communities".into(), json!(stats.len()));
    manifest.results.insert("files".into(), json!(files));
    manifest.write(&args.out.join("manifest.json"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn file_names_are_sanitized() {
        assert_eq!(file_name("AskReddit"), "AskReddit");
        assert_eq!(file_name("a/b c"), "a_b_c");
    }
}
