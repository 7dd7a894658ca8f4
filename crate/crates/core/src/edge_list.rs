//! Line-oriented edge-list files.
//!
//! ```text
//! # directed=1
//! v 0 1199145600
//! v 1 1199232000
//! e 0 1
//! ```
//!
//! The header must be the first non-blank line. `v <id> <meta>` declares a
//! vertex whose metadata is its join time (or time group for generated
//! graphs); `e <u> <v>` adds an edge between declared vertices. Ids in a file
//! may be any distinct non-negative integers; they are mapped to dense ids in
//! declaration order. Other `#` lines and blank lines are ignored. Repeated
//! edges are collapsed. [`write_edge_list`] emits dense ids, so a write
//! followed by a read yields an identical graph.

use std::collections::HashMap;
use std::io::{self, BufRead, Write};

use thiserror::Error;

use crate::graph::{TimeStampedGraph, VertexId};

#[derive(Debug, Error)]
pub enum EdgeListError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("missing `# directed=<0|1>` header")]
    MissingHeader,
    #[error(transparent)]
    Io(#[from] io::Error),
}

fn syntax(line: usize, message: impl Into<String>) -> EdgeListError {
    EdgeListError::Syntax {
        line,
        message: message.into(),
    }
}

fn parse_header(line: &str) -> Option<bool> {
    let rest = line.strip_prefix('#')?.trim();
    match rest.strip_prefix("directed=")?.trim() {
        "0" => Some(false),
        "1" => Some(true),
        _ => None,
    }
}

/// Parses an edge-list document held in memory.
pub fn parse_edge_list(text: &str) -> Result<TimeStampedGraph, EdgeListError> {
    read_edge_list(text.as_bytes())
}

pub fn read_edge_list<R: BufRead>(reader: R) -> Result<TimeStampedGraph, EdgeListError> {
    let mut graph: Option<TimeStampedGraph> = None;
    let mut ids: HashMap<u64, VertexId> = HashMap::new();

    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let Some(g) = graph.as_mut() else {
            let directed = parse_header(trimmed).ok_or(EdgeListError::MissingHeader)?;
            graph = Some(TimeStampedGraph::new(directed));
            continue;
        };
        if trimmed.starts_with('#') {
            continue;
        }

        let mut fields = trimmed.split_whitespace();
        let tag = fields.next().unwrap_or_default();
        let a = fields
            .next()
            .ok_or_else(|| syntax(lineno, "missing field"))?;
        let b = fields
            .next()
            .ok_or_else(|| syntax(lineno, "missing field"))?;
        if fields.next().is_some() {
            return Err(syntax(lineno, "trailing fields"));
        }
        match tag {
            "v" => {
                let id: u64 = a
                    .parse()
                    .map_err(|_| syntax(lineno, format!("bad vertex id `{a}`")))?;
                let meta: i64 = b
                    .parse()
                    .map_err(|_| syntax(lineno, format!("bad vertex metadata `{b}`")))?;
                if ids.contains_key(&id) {
                    return Err(syntax(lineno, format!("vertex {id} declared twice")));
                }
                ids.insert(id, g.add_vertex(meta));
            }
            "e" => {
                let lookup = |s: &str| -> Result<VertexId, EdgeListError> {
                    let id: u64 = s
                        .parse()
                        .map_err(|_| syntax(lineno, format!("bad vertex id `{s}`")))?;
                    ids.get(&id)
                        .copied()
                        .ok_or_else(|| syntax(lineno, format!("undeclared vertex {id}")))
                };
                let (u, v) = (lookup(a)?, lookup(b)?);
                g.add_edge(u, v)
                    .map_err(|e| syntax(lineno, e.to_string()))?;
            }
            other => return Err(syntax(lineno, format!("unknown record `{other}`"))),
        }
    }
    graph.ok_or(EdgeListError::MissingHeader)
}

pub fn write_edge_list<W: Write>(g: &TimeStampedGraph, mut out: W) -> io::Result<()> {
    writeln!(out, "# directed={}", u8::from(g.is_directed()))?;
    for v in g.vertices() {
        writeln!(out, "v {} {}", v, g.join_time(v))?;
    }
    for &(u, v) in g.edges() {
        writeln!(out, "e {u} {v}")?;
    }
    Ok(())
}

pub fn edge_list_string(g: &TimeStampedGraph) -> String {
    let mut buf = Vec::new();
    write_edge_list(g, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("edge lists are ASCII")
}
