#![no_main]

use libfuzzer_sys::fuzz_target;
use tempnet::ingest::{build_reply_graph, parse_comments, CorpusFormat};
use tempnet::Topology;

fuzz_target!(|data: &[u8]| {
    let parsed = parse_comments(data, CorpusFormat::Csv).expect("in-memory input cannot fail");
    let reply = build_reply_graph(&parsed.records);
    assert_eq!(reply.authors.len(), reply.graph.vertex_count());
});
