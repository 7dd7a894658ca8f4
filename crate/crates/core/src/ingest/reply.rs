use std::collections::{BTreeMap, HashMap};

use super::CommentRecord;
use crate::graph::{TimeStampedGraph, VertexId};

/// A community's reply graph and the author behind each vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct ReplyGraph {
    pub graph: TimeStampedGraph,
    /// indexed by vertex id
    pub authors: Vec<String>,
}

/// Strips a `t<digits>_` type prefix: `t1_abc` becomes `abc`.
pub fn normalize_id(id: &str) -> &str {
    if let Some((head, rest)) = id.split_once('_') {
        if head.len() > 1 && head.starts_with('t') && head[1..].bytes().all(|b| b.is_ascii_digit())
        {
            return rest;
        }
    }
    id
}

pub fn group_by_community(records: Vec<CommentRecord>) -> BTreeMap<String, Vec<CommentRecord>> {
    let mut groups: BTreeMap<String, Vec<CommentRecord>> = BTreeMap::new();
    for r in records {
        groups.entry(r.community.clone()).or_default().push(r);
    }
    groups
}

/// Builds the directed reply graph: one vertex per known author, joined at
/// their first comment, and an edge `parent author → replier` for every
/// reply whose parent is present with a known author. Vertices are ordered
/// by (join time, name); edges are inserted in comment order.
///
/// Parents are looked up by (community, id), so a mixed input never links
/// across communities.
pub fn build_reply_graph(records: &[CommentRecord]) -> ReplyGraph {
    let mut order: Vec<&CommentRecord> = records.iter().collect();
    order.sort_by(|a, b| {
        (a.created, &a.community, &a.comment_id).cmp(&(b.created, &b.community, &b.comment_id))
    });

    let mut joined: HashMap<&str, i64> = HashMap::new();
    for r in &order {
        if let Some(a) = &r.author {
            joined.entry(a.as_str()).or_insert(r.created);
        }
    }
    let mut authors: Vec<(i64, &str)> = joined.iter().map(|(&a, &t)| (t, a)).collect();
    authors.sort_unstable();

    let mut graph = TimeStampedGraph::new(true);
    let mut vertex_of: HashMap<&str, VertexId> = HashMap::with_capacity(authors.len());
    for &(t, a) in &authors {
        vertex_of.insert(a, graph.add_vertex(t));
    }

    let mut author_of_comment: HashMap<(&str, &str), &str> = HashMap::new();
    for r in &order {
        if let Some(a) = &r.author {
            author_of_comment.insert((r.community.as_str(), normalize_id(&r.comment_id)), a);
        }
    }
    for r in &order {
        let (Some(replier), Some(parent)) = (&r.author, &r.parent_id) else {
            continue;
        };
        let Some(&parent_author) =
            author_of_comment.get(&(r.community.as_str(), normalize_id(parent)))
        else {
            continue;
        };
        graph
            .add_edge(vertex_of[parent_author], vertex_of[replier.as_str()])
            .expect("both authors have vertices");
    }
    ReplyGraph {
        graph,
        authors: authors.into_iter().map(|(_, a)| a.to_string()).collect(),
    }
}
