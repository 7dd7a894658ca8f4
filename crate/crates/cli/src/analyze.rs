use rayon::prelude::*;
use serde_json::json;
use tempnet::metrics::{feature_record, format_sig, FeatureRecord, FEATURE_HEADER};

use crate::manifest::Manifest;
use crate::{create_file, edge_files, read_graph, sibling, stem, AnalyzeArgs, CliError};

/// min, max, median, mean and standard deviation of `values`; `None` for an
/// empty input, and for the sample deviation of a single value.
pub(crate) fn summarize(values: &[f64], population: bool) -> [Option<f64>; 5] {
    if values.is_empty() {
        return [None; 5];
    }
    let mut v = values.to_vec();
    v.sort_by(f64::total_cmp);
    let n = v.len();
    let median = if n % 2 == 1 {
        v[n / 2]
    } else {
        0.5 * (v[n / 2 - 1] + v[n / 2])
    };
    let mean = v.iter().sum::<f64>() / n as f64;
    let ss: f64 = v.iter().map(|x| (x - mean).powi(2)).sum();
    let std = if population {
        Some((ss / n as f64).sqrt())
    } else if n > 1 {
        Some((ss / (n - 1) as f64).sqrt())
    } else {
        None
    };
    [Some(v[0]), Some(v[n - 1]), Some(median), Some(mean), std]
}

const SUMMARY_LABELS: [&str; 5] = [
    "summary:min",
    "summary:max",
    "summary:median",
    "summary:mean",
    "summary:std",
];

pub fn run(args: &AnalyzeArgs, threads: Option<usize>) -> Result<(), CliError> {
    let files = edge_files(&args.graphs)?;
    let results: Vec<(String, Result<FeatureRecord, String>)> = files
        .par_iter()
        .map(|path| {
            let record = read_graph(path)
                .map_err(|e| e.to_string())
                .and_then(|g| feature_record(&g).map_err(|e| format!("{}: {e}", path.display())));
            (stem(path), record)
        })
        .collect();

    let mut rows = Vec::new();
    let mut failed = Vec::new();
    for (name, r) in results {
        match r {
            Ok(rec) => rows.push((name, rec)),
            Err(e) => {
                log::error!("{e}");
                failed.push(name);
            }
        }
    }

    let mut w = csv::Writer::from_writer(create_file(&args.out)?);
    let err = |e: csv::Error| CliError::Compute(e.to_string());
    let mut header = vec!["graph"];
    header.extend(FEATURE_HEADER);
    w.write_record(&header).map_err(err)?;
    for (name, rec) in &rows {
        let mut cells = vec![name.clone()];
        cells.extend(rec.cells());
        w.write_record(&cells).map_err(err)?;
    }
    if !rows.is_empty() {
        let columns: Vec<[Option<f64>; 5]> = (0..FEATURE_HEADER.len())
            .map(|j| {
                let values: Vec<f64> = rows.iter().filter_map(|(_, r)| r.values()[j]).collect();
                summarize(&values, args.population_std)
            })
            .collect();
        for (i, label) in SUMMARY_LABELS.iter().enumerate() {
            let mut cells = vec![label.to_string()];
            cells.extend(
                columns
                    .iter()
                    .map(|c| c[i].map(format_sig).unwrap_or_default()),
            );
            w.write_record(&cells).map_err(err)?;
        }
    }
    w.flush().map_err(|e| CliError::io(&args.out, e))?;

    let mut manifest = Manifest::new("analyze");
    manifest.threads = threads;
    manifest
        .option("graphs", args.graphs.display())
        .option("population-std", args.population_std)
        .option("out", args.out.display());
    manifest.results.insert("graphs".into(), json!(rows.len()));
    manifest.results.insert("failed".into(), json!(failed));
    manifest.write(&sibling(&args.out, ".manifest.json"))
}
