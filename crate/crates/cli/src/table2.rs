use rayon::prelude::*;
use serde_json::json;
use tempnet::generators::{
    generate_ba, generate_tpa, generate_ws, growth_sequence, GeneratorParams, ScheduleKind,
    TimeDiffFunction,
};
use tempnet::metrics::format_sig;
use tempnet::Topology;

use crate::generate::metrics;
use crate::manifest::Manifest;
use crate::{create_file, sibling, CliError, Table2Args};

pub const TABLE2_HEADER: [&str; 9] = [
    "model", "vertices", "edges", "rate", "f", "cc", "d_max", "avg_sp", "gamma",
];

const TPA_M: usize = 3;
const BA_M: usize = 3;
const WS_K: usize = 6;
const WS_P: f64 = 0.1;

/// One row of the reference table.
#[derive(Debug, Clone, PartialEq)]
pub enum Table2Setting {
    Tpa {
        n: usize,
        kind: ScheduleKind,
        f: TimeDiffFunction,
    },
    Ba {
        n: usize,
    },
    Ws {
        n: usize,
    },
}

/// TPA rows (size, then rate, then f), then BA, then WS.
pub fn table2_settings(sizes: &[usize]) -> Vec<Table2Setting> {
    let fs = [
        TimeDiffFunction::exp2(1.0).expect("valid"),
        TimeDiffFunction::geometric(0.8, 0.2).expect("valid"),
    ];
    let kinds = [
        ScheduleKind::Linear,
        ScheduleKind::Polynomial,
        ScheduleKind::Sigmoidal,
    ];
    let mut rows = Vec::new();
    for &n in sizes {
        for f in &fs {
            for kind in kinds {
                rows.push(Table2Setting::Tpa { n, kind, f: *f });
            }
        }
    }
    rows.extend(sizes.iter().map(|&n| Table2Setting::Ba { n }));
    rows.extend(sizes.iter().map(|&n| Table2Setting::Ws { n }));
    rows
}

#[derive(Debug, Default, Clone, Copy)]
struct Sample {
    edges: f64,
    cc: f64,
    d_max: f64,
    avg_sp: f64,
    gamma: Option<f64>,
}

fn sample(setting: &Table2Setting, seed: u64) -> Result<Sample, CliError> {
    let compute = |e: tempnet::generators::GenError| CliError::Compute(e.to_string());
    let g = match setting {
        Table2Setting::Tpa { n, kind, f } => {
            let schedule = growth_sequence(*kind, *n).map_err(compute)?;
            generate_tpa(&GeneratorParams::new(TPA_M, schedule, *f, seed)).map_err(compute)?
        }
        Table2Setting::Ba { n } => generate_ba(*n, BA_M, seed).map_err(compute)?,
        Table2Setting::Ws { n } => generate_ws(*n, WS_K, WS_P, seed).map_err(compute)?,
    };
    let m = metrics(&g)?;
    Ok(Sample {
        edges: g.edge_count() as f64,
        cc: m.cc,
        d_max: m.d_max as f64,
        avg_sp: m.avg_sp,
        gamma: m.gamma,
    })
}

fn row(setting: &Table2Setting, samples: &[Sample]) -> Vec<String> {
    let mean = |f: fn(&Sample) -> f64| samples.iter().map(f).sum::<f64>() / samples.len() as f64;
    let gammas: Vec<f64> = samples.iter().filter_map(|s| s.gamma).collect();
    let gamma = if gammas.is_empty() || matches!(setting, Table2Setting::Ws { .. }) {
        String::new()
    } else {
        format_sig(gammas.iter().sum::<f64>() / gammas.len() as f64)
    };
    let (model, n, rate, f) = match setting {
        Table2Setting::Tpa { n, kind, f } => ("TPA", *n, kind.to_string(), f.to_string()),
        Table2Setting::Ba { n } => ("BA", *n, String::new(), String::new()),
        Table2Setting::Ws { n } => ("WS", *n, String::new(), String::new()),
    };
    vec![
        model.to_string(),
        n.to_string(),
        format_sig(mean(|s| s.edges)),
        rate,
        f,
        format_sig(mean(|s| s.cc)),
        format_sig(mean(|s| s.d_max)),
        format_sig(mean(|s| s.avg_sp)),
        gamma,
    ]
}

pub fn run(args: &Table2Args, threads: Option<usize>) -> Result<(), CliError> {
    if args.replicates == 0 {
        return Err(CliError::Usage("--replicates must be at least 1".into()));
    }
    let settings = table2_settings(&args.sizes);
    let jobs: Vec<(usize, u64)> = (0..settings.len())
        .flat_map(|i| (0..args.replicates as u64).map(move |r| (i, r)))
        .collect();
    let samples: Vec<Sample> = jobs
        .par_iter()
        .map(|&(i, r)| sample(&settings[i], args.seed + r))
        .collect::<Result<_, _>>()?;

    let mut w = csv::Writer::from_writer(create_file(&args.out)?);
    let io = |e: csv::Error| CliError::Compute(e.to_string());
    w.write_record(TABLE2_HEADER).map_err(io)?;
    for (i, setting) in settings.iter().enumerate() {
        let chunk = &samples[i * args.replicates..(i + 1) * args.replicates];
        w.write_record(row(setting, chunk)).map_err(io)?;
    }
    w.flush().map_err(|e| CliError::io(&args.out, e))?;

    let mut manifest = Manifest::new("table2");
    manifest.seed = Some(args.seed);
    manifest.threads = threads;
    manifest
        .option("replicates", args.replicates)
        .option(
            "sizes",
            args.sizes
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(","),
        )
        .option("out", args.out.display())
        .option("tpa-m", TPA_M)
        .option("ba-m", BA_M)
        .option("ws-k", WS_K)
        .option("ws-p", WS_P);
    if args.replicates == 1 {
        manifest.notes.push(
            "single replicate: each row is one sample, with higher variance than an average".into(),
        );
    }
    manifest
        .results
        .insert("rows".into(), json!(settings.len()));
    manifest.write(&sibling(&args.out, ".manifest.json"))
}
