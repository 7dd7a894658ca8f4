use std::collections::BTreeMap;

use rayon::prelude::*;
use serde_json::json;
use tempnet::temporal::{
    build_ujc, categorize_ujc, join_events_from_graph, read_join_events, write_category_report,
    write_ujc_csv, Category, FitKind, GrowthCategory, JoinEvent, TemporalError, UjCurve,
};

use crate::ingest::file_name;
use crate::manifest::Manifest;
use crate::{create_dir, create_file, edge_files, read_graph, stem, CliError, UjcArgs};

fn load_events(args: &UjcArgs) -> Result<BTreeMap<String, Vec<JoinEvent>>, CliError> {
    if let Some(path) = &args.events {
        let file = std::fs::File::open(path).map_err(|e| CliError::io(path, e))?;
        return read_join_events(std::io::BufReader::new(file)).map_err(|e| match e {
            TemporalError::Io(io) => CliError::io(path, io),
            other => CliError::Input(format!("{}: {other}", path.display())),
        });
    }
    let dir = args
        .graphs
        .as_ref()
        .expect("clap requires --events or --graphs");
    let mut out = BTreeMap::new();
    for path in edge_files(dir)? {
        match read_graph(&path) {
            Ok(g) => {
                out.insert(stem(&path), join_events_from_graph(&g));
            }
            Err(e) => log::error!("{e}"),
        }
    }
    Ok(out)
}

pub fn run(args: &UjcArgs, threads: Option<usize>) -> Result<(), CliError> {
    let communities = load_events(args)?;
    create_dir(&args.out)?;
    let results: Vec<(String, Result<(UjCurve, GrowthCategory), String>)> = communities
        .into_par_iter()
        .map(|(name, events)| {
            let r = build_ujc(&events)
                .map(|curve| {
                    let cat = categorize_ujc(&curve);
                    (curve, cat)
                })
                .map_err(|e| e.to_string());
            (name, r)
        })
        .collect();

    let mut report = Vec::new();
    let mut diagnostics = BTreeMap::new();
    for (name, r) in results {
        let category = match r {
            Ok((curve, cat)) => {
                let path = args.out.join(format!("{}.ujc.csv", file_name(&name)));
                write_ujc_csv(create_file(&path)?, &curve).map_err(|e| CliError::io(&path, e))?;
                cat
            }
            Err(message) => {
                log::warn!("{name}: {message}");
                GrowthCategory {
                    category: Category::EventsOriented,
                    norm_area: None,
                    fit_kind: FitKind::None,
                    r_squared: None,
                    diagnostic: Some(message),
                }
            }
        };
        if let Some(d) = &category.diagnostic {
            diagnostics.insert(name.clone(), d.clone());
        }
        report.push((name, category));
    }
    let path = args.out.join("categories.csv");
    write_category_report(create_file(&path)?, &report).map_err(|e| CliError::io(&path, e))?;

    let mut counts: BTreeMap<String, usize> = BTreeMap::new();
    for (_, c) in &report {
        *counts.entry(c.category.to_string()).or_default() += 1;
    }
    let mut manifest = Manifest::new("ujc");
    manifest.threads = threads;
    if let Some(p) = &args.events {
        manifest.option("events", p.display());
    }
    if let Some(p) = &args.graphs {
        manifest.option("graphs", p.display());
    }
    manifest.option("out", args.out.display());
    manifest.results.insert("categories".into(), json!(counts));
    manifest
        .results
        .insert("diagnostics".into(), json!(diagnostics));
    manifest.write(&args.out.join("manifest.json"))
}
