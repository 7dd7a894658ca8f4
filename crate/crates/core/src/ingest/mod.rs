//! Comment-log ingestion: parse, clean, select communities and build reply
//! graphs.
//!
//! Reply edges point from the parent comment's author to the replier, so a
//! vertex's out-neighbours are the users who replied to it and its
//! in-neighbours are the users it replied to.

mod clean;
mod record;
mod reply;
mod select;

use thiserror::Error;

pub use clean::{clean, load_bot_list, CleaningPolicy, CleaningReport, DEFAULT_MAX_COMMENTS};
pub use record::{
    for_each_comment, open_corpus, parse_comment_line, parse_comments, CommentRecord, CorpusFormat,
    ParseStats, ParsedComments, DELETED_AUTHOR,
};
pub use reply::{build_reply_graph, group_by_community, normalize_id, ReplyGraph};
pub use select::{
    community_stats, select_communities, write_manifest, CommunityStats, SelectionCriteria,
};

#[derive(Debug, Error)]
pub enum IngestError {
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
}
