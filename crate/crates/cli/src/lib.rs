//! Command-line front end: `generate`, `table2`, `ingest`, `analyze`, `ujc`
//! and `timediff`.
//!
//! Exit statuses: 0 success, 1 I/O, 2 usage, 3 computation failure.

mod analyze;
pub mod config;
mod generate;
mod ingest;
pub mod manifest;
mod table2;
mod timediff;
mod ujc;

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

pub use table2::{table2_settings, Table2Setting, TABLE2_HEADER};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Clap(#[from] clap::Error),
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Input(String),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Compute(String),
}

impl CliError {
    pub fn io(path: &Path, source: std::io::Error) -> Self {
        CliError::Io {
            path: path.to_path_buf(),
            source,
        }
    }

    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Clap(e) => e.exit_code() as u8,
            CliError::Io { .. } | CliError::Input(_) => 1,
            CliError::Usage(_) => 2,
            CliError::Compute(_) => 3,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "tempnet",
    version,
    about = "Temporal network generation and analysis"
)]
#[command(args_override_self = true)]
pub struct Cli {
    /// `key=value` file supplying default option values
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// worker threads for batch commands
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate one random network and report its metrics
    Generate(GenerateArgs),
    /// Average metrics over replicates for the 24 reference settings
    Table2(Table2Args),
    /// Build per-community reply graphs from a comment corpus
    Ingest(IngestArgs),
    /// Feature table of a directory of edge lists
    Analyze(AnalyzeArgs),
    /// User-join curves and growth categories
    Ujc(UjcArgs),
    /// Join-time difference distribution of a graph
    Timediff(TimediffArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Model {
    Tpa,
    Ba,
    Ws,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(value_enum)]
    pub model: Model,
    /// vertices (ba, ws)
    #[arg(long)]
    pub n: Option<usize>,
    /// edges per new vertex (tpa, ba)
    #[arg(long)]
    pub m: Option<usize>,
    /// ring neighbours (ws)
    #[arg(long)]
    pub k: Option<usize>,
    /// rewiring probability (ws)
    #[arg(long)]
    pub p: Option<f64>,
    /// growth schedule (tpa), e.g. `poly:700`, `linear:700:50`, `explicit:100,200`
    #[arg(long)]
    pub schedule: Option<String>,
    /// time-difference function (tpa), `exp2:<c>` or `geo:<a>:<r>`
    #[arg(long)]
    pub f: Option<String>,
    /// failed attempts before an edge slot is abandoned (tpa)
    #[arg(long)]
    pub retry_cap: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// edge-list output file
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct Table2Args {
    #[arg(long, default_value_t = 10)]
    pub replicates: usize,
    /// network sizes; the defaults reproduce the 24-row table
    #[arg(long, value_delimiter = ',', default_values_t = [700usize, 6200, 12350])]
    pub sizes: Vec<usize>,
    /// base seed; replicate `r` uses `seed + r`
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct IngestArgs {
    /// NDJSON or CSV comment corpus, optionally gzip-compressed
    #[arg(long)]
    pub corpus: PathBuf,
    /// known-bot list, one author per line
    #[arg(long)]
    pub bots: Option<PathBuf>,
    /// authors with more comments than this are removed
    #[arg(long)]
    pub max_comments: Option<usize>,
    /// keep comments whose author is deleted
    #[arg(long)]
    pub keep_deleted: bool,
    #[arg(long)]
    pub min_users: Option<usize>,
    #[arg(long)]
    pub min_comments: Option<usize>,
    #[arg(long)]
    pub min_days: Option<f64>,
    /// output directory
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// directory of `.edges` files
    #[arg(long)]
    pub graphs: PathBuf,
    /// use the population standard deviation in the summary rows
    #[arg(long)]
    pub population_std: bool,
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct UjcArgs {
    /// `community,user,timestamp` CSV
    #[arg(long, conflicts_with = "graphs", required_unless_present = "graphs")]
    pub events: Option<PathBuf>,
    /// directory of `.edges` files; vertex join times are the events
    #[arg(long)]
    pub graphs: Option<PathBuf>,
    /// output directory
    #[arg(long)]
    pub out: PathBuf,
}

#[derive(Debug, Args)]
pub struct TimediffArgs {
    /// edge-list file
    #[arg(long)]
    pub graph: PathBuf,
    /// histogram bin width in days
    #[arg(long, default_value_t = 1.0)]
    pub bin_width: f64,
    /// tail-fraction thresholds in days
    #[arg(long, value_delimiter = ',', default_values_t = [365.0, 1460.0, 1825.0])]
    pub thresholds: Vec<f64>,
    /// output directory
    #[arg(long)]
    pub out: PathBuf,
}

/// Parses `args` (program name first), applies any config file and runs.
pub fn run(args: &[String]) -> Result<(), CliError> {
    let args = match config::config_path(args) {
        Some(path) => {
            let path = PathBuf::from(path);
            let text = std::fs::read_to_string(&path).map_err(|e| CliError::io(&path, e))?;
            config::splice_config(args, &config::parse_config(&text)?)
        }
        None => args.to_vec(),
    };
    let cli = Cli::try_parse_from(&args)?;
    if let Some(n) = cli.threads {
        if n == 0 {
            return Err(CliError::Usage("--threads must be positive".into()));
        }
        // a pool may already exist when running in-process more than once
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global();
    }
    let threads = cli.threads;
    match cli.command {
        Command::Generate(a) => generate::run(&a, threads),
        Command::Table2(a) => table2::run(&a, threads),
        Command::Ingest(a) => ingest::run(&a, threads),
        Command::Analyze(a) => analyze::run(&a, threads),
        Command::Ujc(a) => ujc::run(&a, threads),
        Command::Timediff(a) => timediff::run(&a, threads),
    }
}

/// Path with `suffix` appended to the file name.
pub(crate) fn sibling(path: &Path, suffix: &str) -> PathBuf {
    let mut name = path.file_name().unwrap_or_default().to_os_string();
    name.push(suffix);
    path.with_file_name(name)
}

pub(crate) fn create_dir(path: &Path) -> Result<(), CliError> {
    std::fs::create_dir_all(path).map_err(|e| CliError::io(path, e))
}

pub(crate) fn create_file(path: &Path) -> Result<std::io::BufWriter<std::fs::File>, CliError> {
    std::fs::File::create(path)
        .map(std::io::BufWriter::new)
        .map_err(|e| CliError::io(path, e))
}

/// Edge-list files (`*.edges`) in `dir`, sorted by name.
pub(crate) fn edge_files(dir: &Path) -> Result<Vec<PathBuf>, CliError> {
    let entries = std::fs::read_dir(dir).map_err(|e| CliError::io(dir, e))?;
    let mut files = Vec::new();
    for entry in entries {
        let path = entry.map_err(|e| CliError::io(dir, e))?.path();
        if path.is_file() && path.extension().is_some_and(|x| x == "edges") {
            files.push(path);
        }
    }
    files.sort();
    Ok(files)
}

pub(crate) fn read_graph(path: &Path) -> Result<tempnet::TimeStampedGraph, CliError> {
    let file = std::fs::File::open(path).map_err(|e| CliError::io(path, e))?;
    tempnet::edge_list::read_edge_list(std::io::BufReader::new(file)).map_err(|e| match e {
        tempnet::edge_list::EdgeListError::Io(io) => CliError::io(path, io),
        other => CliError::Input(format!("{}: {other}", path.display())),
    })
}

pub(crate) fn stem(path: &Path) -> String {
    path.file_stem()
        .unwrap_or_default()
        .to_string_lossy()
        .into_owned()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sibling_appends_suffix() {
        assert_eq!(
            sibling(Path::new("out/g.edges"), ".manifest.json"),
            PathBuf::from("out/g.edges.manifest.json")
        );
    }

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Usage("x".into()).exit_code(), 2);
        assert_eq!(CliError::Compute("x".into()).exit_code(), 3);
        assert_eq!(CliError::Input("x".into()).exit_code(), 1);
        let e = Cli::try_parse_from(["tempnet", "generate", "ba"]).unwrap_err();
        assert_eq!(CliError::from(e).exit_code(), 2);
    }
}
