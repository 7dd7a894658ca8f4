use serde_json::json;
use tempnet::edge_list::write_edge_list;
use tempnet::generators::{
    generate_ba, generate_tpa, generate_ws, GenError, GeneratorParams, GrowthSchedule,
    TimeDiffFunction,
};
use tempnet::metrics::{eval_metrics, format_sig, EvalMetrics, PathOptions};
use tempnet::{undirected_projection, TimeGroupedGraph, Topology};

use crate::manifest::Manifest;
use crate::{create_file, sibling, CliError, GenerateArgs, Model};

fn required<T: Copy>(value: Option<T>, flag: &str, model: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("{model} needs --{flag}")))
}

fn gen_error(e: GenError) -> CliError {
    match e {
        GenError::InvalidParams(_) | GenError::UnreachableTarget { .. } => {
            CliError::Usage(e.to_string())
        }
    }
}

pub(crate) fn build(
    args: &GenerateArgs,
    manifest: &mut Manifest,
) -> Result<TimeGroupedGraph, CliError> {
    match args.model {
        Model::Tpa => {
            let m = required(args.m, "m", "tpa")?;
            let schedule: GrowthSchedule = args
                .schedule
                .as_deref()
                .ok_or_else(|| CliError::Usage("tpa needs --schedule".into()))?
                .parse()
                .map_err(gen_error)?;
            let f: TimeDiffFunction = args
                .f
                .as_deref()
                .ok_or_else(|| CliError::Usage("tpa needs --f".into()))?
                .parse()
                .map_err(gen_error)?;
            let mut params = GeneratorParams::new(m, schedule, f, args.seed);
            if let Some(cap) = args.retry_cap {
                params.retry_cap = cap;
            }
            manifest
                .option("m", m)
                .option("schedule", &params.schedule)
                .option("f", params.f)
                .option("retry-cap", params.retry_cap);
            generate_tpa(&params).map_err(gen_error)
        }
        Model::Ba => {
            let n = required(args.n, "n", "ba")?;
            let m = required(args.m, "m", "ba")?;
            manifest.option("n", n).option("m", m);
            generate_ba(n, m, args.seed).map_err(gen_error)
        }
        Model::Ws => {
            let n = required(args.n, "n", "ws")?;
            let k = required(args.k, "k", "ws")?;
            let p = required(args.p, "p", "ws")?;
            manifest.option("n", n).option("k", k).option("p", p);
            generate_ws(n, k, p, args.seed).map_err(gen_error)
        }
    }
}

pub(crate) fn metrics(g: &TimeGroupedGraph) -> Result<EvalMetrics, CliError> {
    eval_metrics(&undirected_projection(g), &PathOptions::default())
        .map_err(|e| CliError::Compute(e.to_string()))
}

pub(crate) fn metrics_line(edges: usize, m: &EvalMetrics) -> String {
    format!(
        "edges={edges} cc={} d_max={} avg_sp={} gamma={}",
        format_sig(m.cc),
        m.d_max,
        format_sig(m.avg_sp),
        m.gamma.map(format_sig).unwrap_or_else(|| "-".into())
    )
}

pub fn run(args: &GenerateArgs, threads: Option<usize>) -> Result<(), CliError> {
    let model = format!("{:?}", args.model).to_lowercase();
    let mut manifest = Manifest::new("generate");
    manifest.seed = Some(args.seed);
    manifest.threads = threads;
    manifest
        .option("model", &model)
        .option("out", args.out.display());

    let g = build(args, &mut manifest)?;
    let m = metrics(&g)?;
    let mut out = create_file(&args.out)?;
    write_edge_list(&g.to_time_stamped(), &mut out).map_err(|e| CliError::io(&args.out, e))?;
    drop(out);

    let line = metrics_line(g.edge_count(), &m);
    println!("{line}");
    manifest.results.insert(
        "metrics".into(),
        json!({
            "vertices": g.vertex_count(),
            "edges": g.edge_count(),
            "cc": m.cc,
            "d_max": m.d_max,
            "avg_sp": m.avg_sp,
            "gamma": m.gamma,
        }),
    );
    manifest.write(&sibling(&args.out, ".manifest.json"))
}
