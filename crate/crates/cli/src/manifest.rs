use std::collections::BTreeMap;
use std::fs;
use std::path::Path;
use std::time::{SystemTime, UNIX_EPOCH};

use serde_json::{json, Value};

use crate::CliError;

/// Reproducibility record written next to every output.
#[derive(Debug, Clone, Default)]
pub struct Manifest {
    pub command: String,
    pub options: BTreeMap<String, String>,
    pub seed: Option<u64>,
    pub threads: Option<usize>,
    pub notes: Vec<String>,
    pub results: BTreeMap<String, Value>,
}

impl Manifest {
    pub fn new(command: &str) -> Self {
        Manifest {
            command: command.to_string(),
            ..Manifest::default()
        }
    }

    pub fn option(&mut self, key: &str, value: impl ToString) -> &mut Self {
        self.options.insert(key.to_string(), value.to_string());
        self
    }

    pub fn to_json(&self) -> Value {
        let created = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map_or(0, |d| d.as_secs());
        json!({
            "tool": "tempnet",
            "version": env!("CARGO_PKG_VERSION"),
            "command": self.command,
            "options": self.options,
            "seed": self.seed,
            "threads": self.threads,
            "notes": self.notes,
            "results": self.results,
            "created_unix": created,
        })
    }

    pub fn write(&self, path: &Path) -> Result<(), CliError> {
        let text = serde_json::to_string_pretty(&self.to_json()).expect("manifest serializes");
        fs::write(path, text + "\n").map_err(|e| CliError::io(path, e))
    }
}
