use std::fs::File;
use std::io::{self, BufRead, BufReader, Read};
use std::path::Path;

use flate2::read::MultiGzDecoder;
use serde_json::Value;

use super::IngestError;

/// Author value the dumps use for removed accounts.
pub const DELETED_AUTHOR: &str = "[deleted]";

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CommentRecord {
    pub comment_id: String,
    /// `None` for top-level comments
    pub parent_id: Option<String>,
    /// `None` when the author is deleted or missing
    pub author: Option<String>,
    pub community: String,
    /// seconds since the epoch, always positive
    pub created: i64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CorpusFormat {
    Ndjson,
    Csv,
}

impl CorpusFormat {
    /// `.csv` or `.csv.gz` means CSV; anything else is read as NDJSON.
    pub fn from_path(path: &Path) -> Self {
        let name = path
            .file_name()
            .map(|n| n.to_string_lossy().to_ascii_lowercase())
            .unwrap_or_default();
        let name = name.strip_suffix(".gz").unwrap_or(&name);
        if name.ends_with(".csv") {
            CorpusFormat::Csv
        } else {
            CorpusFormat::Ndjson
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ParseStats {
    pub records: usize,
    pub skipped: usize,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct ParsedComments {
    pub records: Vec<CommentRecord>,
    pub skipped: usize,
}

/// Opens a corpus file, transparently decompressing gzip input.
pub fn open_corpus(path: &Path) -> io::Result<Box<dyn BufRead>> {
    let mut reader = BufReader::new(File::open(path)?);
    let gz = reader.fill_buf()?.starts_with(&[0x1f, 0x8b]);
    Ok(if gz {
        Box::new(BufReader::new(MultiGzDecoder::new(reader)))
    } else {
        Box::new(reader)
    })
}

fn author_of(raw: Option<&str>) -> Option<String> {
    match raw.map(str::trim) {
        None | Some("") | Some(DELETED_AUTHOR) => None,
        Some(a) => Some(a.to_string()),
    }
}

fn parent_of(raw: Option<&str>) -> Option<String> {
    raw.map(str::trim)
        .filter(|p| !p.is_empty())
        .map(str::to_string)
}

fn timestamp_of(text: &str) -> Option<i64> {
    let text = text.trim();
    let t = match text.parse::<i64>() {
        Ok(t) => t,
        Err(_) => {
            let f: f64 = text.parse().ok()?;
            if !f.is_finite() || f.abs() >= 9.0e18 {
                return None;
            }
            f as i64
        }
    };
    (t > 0).then_some(t)
}

fn required(text: Option<&str>) -> Option<String> {
    text.map(str::trim)
        .filter(|s| !s.is_empty())
        .map(str::to_string)
}

/// Parses one NDJSON object with fields `id`, `parent_id`, `author`,
/// `subreddit` and `created_utc`. Returns `None` for a malformed line.
pub fn parse_comment_line(line: &str) -> Option<CommentRecord> {
    let value: Value = serde_json::from_str(line).ok()?;
    let obj = value.as_object()?;
    let text = |key: &str| match obj.get(key) {
        Some(Value::String(s)) => Some(s.as_str()),
        _ => None,
    };
    let created = match obj.get("created_utc")? {
        Value::Number(n) => timestamp_of(&n.to_string())?,
        Value::String(s) => timestamp_of(s)?,
        _ => return None,
    };
    let parent_id = match obj.get("parent_id") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => parent_of(Some(s)),
        Some(_) => return None,
    };
    let author = match obj.get("author") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => author_of(Some(s)),
        Some(_) => return None,
    };
    Some(CommentRecord {
        comment_id: required(text("id"))?,
        parent_id,
        author,
        community: required(text("subreddit"))?,
        created,
    })
}

/// Streams records to `sink` in input order. Malformed lines or rows are
/// counted and skipped; only I/O failures are errors.
pub fn for_each_comment<R, F>(
    reader: R,
    format: CorpusFormat,
    mut sink: F,
) -> Result<ParseStats, IngestError>
where
    R: Read,
    F: FnMut(CommentRecord),
{
    let mut stats = ParseStats::default();
    let mut emit = |record: Option<CommentRecord>, stats: &mut ParseStats| match record {
        Some(r) => {
            stats.records += 1;
            sink(r);
        }
        None => stats.skipped += 1,
    };
    match format {
        CorpusFormat::Ndjson => {
            let mut reader = BufReader::new(reader);
            let mut buf = Vec::new();
            loop {
                buf.clear();
                if reader.read_until(b'\n', &mut buf)? == 0 {
                    break;
                }
                let Ok(line) = std::str::from_utf8(&buf) else {
                    stats.skipped += 1;
                    continue;
                };
                if line.trim().is_empty() {
                    continue;
                }
                emit(parse_comment_line(line), &mut stats);
            }
        }
        CorpusFormat::Csv => {
            let mut rdr = csv::ReaderBuilder::new().flexible(true).from_reader(reader);
            let headers = match rdr.headers() {
                Ok(h) => h.clone(),
                Err(e) => return csv_failure(e, stats),
            };
            let col = |name: &str| headers.iter().position(|h| h.trim() == name);
            let columns = [
                col("id"),
                col("parent_id"),
                col("author"),
                col("subreddit"),
                col("created_utc"),
            ];
            if columns.iter().any(Option::is_none) {
                log::warn!("CSV header lacks one of id, parent_id, author, subreddit, created_utc");
            }
            let mut row = csv::StringRecord::new();
            loop {
                match rdr.read_record(&mut row) {
                    Ok(false) => break,
                    Ok(true) => {
                        let record = if row.len() == headers.len() {
                            csv_record(&row, &columns)
                        } else {
                            None
                        };
                        emit(record, &mut stats);
                    }
                    Err(e) if e.is_io_error() => return csv_failure(e, stats),
                    Err(_) => stats.skipped += 1,
                }
            }
        }
    }
    Ok(stats)
}

fn csv_failure(e: csv::Error, stats: ParseStats) -> Result<ParseStats, IngestError> {
    match e.into_kind() {
        csv::ErrorKind::Io(io) => Err(IngestError::Io(io)),
        // an unreadable header row leaves nothing to parse
        _ => Ok(ParseStats {
            skipped: stats.skipped + 1,
            ..stats
        }),
    }
}

fn csv_record(row: &csv::StringRecord, columns: &[Option<usize>; 5]) -> Option<CommentRecord> {
    let get = |i: usize| columns[i].and_then(|c| row.get(c));
    Some(CommentRecord {
        comment_id: required(get(0))?,
        parent_id: parent_of(get(1)),
        author: author_of(get(2)),
        community: required(get(3))?,
        created: timestamp_of(get(4)?)?,
    })
}

pub fn parse_comments<R: Read>(
    reader: R,
    format: CorpusFormat,
) -> Result<ParsedComments, IngestError> {
    let mut records = Vec::new();
    let stats = for_each_comment(reader, format, |r| records.push(r))?;
    Ok(ParsedComments {
        records,
        skipped: stats.skipped,
    })
}
