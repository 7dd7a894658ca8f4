#![no_main]

use libfuzzer_sys::fuzz_target;
use tempnet::ingest::{build_reply_graph, parse_comments, CorpusFormat};
use tempnet::Topology;

fuzz_target!(|data: &[u8]| {
    let parsed = parse_comments(data, CorpusFormat::Ndjson).expect("in-memory input cannot fail");
    assert!(parsed.records.iter().all(|r| r.created > 0));
    let reply = build_reply_graph(&parsed.records);
    assert_eq!(reply.authors.len(), reply.graph.vertex_count());
});
