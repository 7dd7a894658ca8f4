use std::io::Write;

use flate2::write::GzEncoder;
use flate2::Compression;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use tempnet::generators::ModelRng;
use tempnet::ingest::{
    build_reply_graph, clean, community_stats, load_bot_list, open_corpus, parse_comments,
    CleaningPolicy, CorpusFormat, ParsedComments,
};

const CORPUS: &str = include_str!("fixtures/golden_comments.ndjson");
const BOTS: &str = include_str!("fixtures/bots.txt");

fn policy() -> CleaningPolicy {
    CleaningPolicy {
        bot_list: load_bot_list(BOTS.as_bytes()).unwrap(),
        ..CleaningPolicy::default()
    }
}

fn graph_text(parsed: ParsedComments) -> String {
    let (records, _) = clean(parsed.records, &policy());
    tempnet::edge_list::edge_list_string(&build_reply_graph(&records).graph)
}

#[test]
fn golden_edge_list() {
    let parsed = parse_comments(CORPUS.as_bytes(), CorpusFormat::Ndjson).unwrap();
    let text = graph_text(parsed);
    let edges: Vec<&str> = text.lines().filter(|l| l.starts_with("e ")).collect();
    assert_eq!(edges.len(), 12);
    assert!(edges.contains(&"e 0 0"));
    assert!(text.contains("v 4 1201728000"));
}

#[test]
fn line_order_does_not_matter() {
    let baseline = graph_text(parse_comments(CORPUS.as_bytes(), CorpusFormat::Ndjson).unwrap());
    let mut lines: Vec<&str> = CORPUS.lines().collect();
    for seed in 0..20 {
        lines.shuffle(&mut ModelRng::seed_from_u64(seed));
        let shuffled = lines.join("\n");
        let parsed = parse_comments(shuffled.as_bytes(), CorpusFormat::Ndjson).unwrap();
        assert_eq!(graph_text(parsed), baseline, "seed {seed}");
    }
}

#[test]
fn gzip_input_matches_plain() {
    let mut enc = GzEncoder::new(Vec::new(), Compression::default());
    enc.write_all(CORPUS.as_bytes()).unwrap();
    let path = std::env::temp_dir().join(format!("golden-{}.ndjson.gz", std::process::id()));
    std::fs::write(&path, enc.finish().unwrap()).unwrap();
    let packed =
        parse_comments(open_corpus(&path).unwrap(), CorpusFormat::from_path(&path)).unwrap();
    std::fs::remove_file(&path).unwrap();
    let plain = parse_comments(CORPUS.as_bytes(), CorpusFormat::Ndjson).unwrap();
    assert_eq!(plain.records, packed.records);
}

#[test]
fn malformed_lines_are_skipped() {
    let noisy = format!("{{not json\n{CORPUS}\n{{\"id\":\"q\"}}\n\n");
    let parsed = parse_comments(noisy.as_bytes(), CorpusFormat::Ndjson).unwrap();
    assert_eq!(parsed.records.len(), 20);
    assert_eq!(parsed.skipped, 2);
}

#[test]
fn csv_corpus_matches_ndjson() {
    let parsed = parse_comments(CORPUS.as_bytes(), CorpusFormat::Ndjson).unwrap();
    let mut csv = String::from("id,parent_id,author,subreddit,created_utc\n");
    for r in &parsed.records {
        csv.push_str(&format!(
            "{},{},{},{},{}\n",
            r.comment_id,
            r.parent_id.as_deref().unwrap_or(""),
            r.author.as_deref().unwrap_or("[deleted]"),
            r.community,
            r.created
        ));
    }
    let from_csv = parse_comments(csv.as_bytes(), CorpusFormat::Csv).unwrap();
    assert_eq!(graph_text(from_csv), graph_text(parsed));
}

#[test]
fn community_statistics() {
    let parsed = parse_comments(CORPUS.as_bytes(), CorpusFormat::Ndjson).unwrap();
    let (records, report) = clean(parsed.records, &policy());
    assert_eq!(report.kept, 18);
    let stats = community_stats(&records);
    let s = &stats["askgolden"];
    assert_eq!(s.users, 6);
    assert_eq!(s.comments, 18);
    assert_eq!(s.days(), 40.0);
}
