use serde_json::json;
use tempnet::metrics::format_sig;
use tempnet::temporal::{edge_time_differences, link_probability_estimate, write_timediff_csv};

use crate::manifest::Manifest;
use crate::{create_dir, create_file, read_graph, CliError, TimediffArgs};

pub fn run(args: &TimediffArgs, threads: Option<usize>) -> Result<(), CliError> {
    if !(args.bin_width > 0.0 && args.bin_width.is_finite()) {
        return Err(CliError::Usage("--bin-width must be positive".into()));
    }
    let g = read_graph(&args.graph)?;
    let dist =
        edge_time_differences(&g, args.bin_width).map_err(|e| CliError::Compute(e.to_string()))?;
    let fit = match link_probability_estimate(&dist) {
        Ok(fit) => Some(fit),
        Err(e) => {
            log::warn!("exponential fit skipped: {e}");
            None
        }
    };

    create_dir(&args.out)?;
    let hist = args.out.join("timediff.csv");
    write_timediff_csv(create_file(&hist)?, &dist).map_err(|e| CliError::io(&hist, e))?;

    let mut header = vec!["edges".to_string(), "median_days".to_string()];
    let mut cells = vec![dist.total_edges.to_string(), format_sig(dist.median())];
    for &t in &args.thresholds {
        header.push(format!("tail_{}", format_sig(t)));
        cells.push(format_sig(dist.tail_fraction(t)));
    }
    header.extend(["a", "b", "r2", "converged", "non_decaying"].map(String::from));
    match &fit {
        Some(f) => cells.extend([
            format_sig(f.a),
            format_sig(f.b),
            format_sig(f.r_squared),
            u8::from(f.converged).to_string(),
            u8::from(f.non_decaying).to_string(),
        ]),
        None => cells.extend(std::iter::repeat_n(String::new(), 5)),
    }
    let report = args.out.join("timediff_report.csv");
    let mut w = csv::Writer::from_writer(create_file(&report)?);
    let err = |e: csv::Error| CliError::Compute(e.to_string());
    w.write_record(&header).map_err(err)?;
    w.write_record(&cells).map_err(err)?;
    w.flush().map_err(|e| CliError::io(&report, e))?;

    let mut manifest = Manifest::new("timediff");
    manifest.threads = threads;
    manifest
        .option("graph", args.graph.display())
        .option("bin-width", args.bin_width)
        .option(
            "thresholds",
            args.thresholds
                .iter()
                .map(|t| format_sig(*t))
                .collect::<Vec<_>>()
                .join(","),
        )
        .option("out", args.out.display());
    if fit.is_none() {
        manifest
            .notes
            .push("exponential fit skipped: too few non-empty bins".into());
    }
    manifest.results.insert(
        "fit".into(),
        json!(fit.map(|f| json!({"a": f.a, "b": f.b, "r2": f.r_squared, "converged": f.converged}))),
    );
    manifest.write(&args.out.join("manifest.json"))
}
