use std::io;

use super::basic::{component_features_from, days, degree_features, density};
use super::clustering::{local_clustering, triangles_per_vertex};
use super::MetricError;
use crate::components::weakly_connected_components;
use crate::graph::{undirected_projection, TimeStampedGraph, Topology};

/// Column labels of a feature table, in record order.
pub const FEATURE_HEADER: [&str; 16] = [
    "|V|",
    "|E|",
    "D",
    "Loops",
    "|T|",
    "CC",
    "Avg-deg",
    "Avg-in-deg",
    "Max-in-deg",
    "Max-out-deg",
    "|WCC|",
    "|V_LC|",
    "|E_LC|",
    "LC-Ratio",
    "|Single|",
    "Days",
];

/// Topological summary of one reply graph.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureRecord {
    pub vertices: usize,
    pub edges: usize,
    /// `None` when the graph has a single vertex
    pub density: Option<f64>,
    pub loops: usize,
    pub triangles: u64,
    pub cc: f64,
    pub avg_deg: f64,
    pub avg_in_deg: f64,
    pub max_in_deg: usize,
    pub max_out_deg: usize,
    pub wcc: usize,
    pub v_lc: usize,
    pub e_lc: usize,
    pub lc_ratio: f64,
    pub single: usize,
    pub days: f64,
}

impl FeatureRecord {
    /// Values in [`FEATURE_HEADER`] order.
    pub fn values(&self) -> [Option<f64>; 16] {
        [
            Some(self.vertices as f64),
            Some(self.edges as f64),
            self.density,
            Some(self.loops as f64),
            Some(self.triangles as f64),
            Some(self.cc),
            Some(self.avg_deg),
            Some(self.avg_in_deg),
            Some(self.max_in_deg as f64),
            Some(self.max_out_deg as f64),
            Some(self.wcc as f64),
            Some(self.v_lc as f64),
            Some(self.e_lc as f64),
            Some(self.lc_ratio),
            Some(self.single as f64),
            Some(self.days),
        ]
    }

    /// Formatted cells: counts as integers, reals to 6 significant digits,
    /// missing values empty.
    pub fn cells(&self) -> Vec<String> {
        let int = |x: usize| x.to_string();
        vec![
            int(self.vertices),
            int(self.edges),
            self.density.map(format_sig).unwrap_or_default(),
            int(self.loops),
            self.triangles.to_string(),
            format_sig(self.cc),
            format_sig(self.avg_deg),
            format_sig(self.avg_in_deg),
            int(self.max_in_deg),
            int(self.max_out_deg),
            int(self.wcc),
            int(self.v_lc),
            int(self.e_lc),
            format_sig(self.lc_ratio),
            int(self.single),
            format_sig(self.days),
        ]
    }
}

/// All sixteen features of `g`. Only an empty graph is an error; a feature
/// that is undefined for the graph is left empty and logged.
pub fn feature_record(g: &TimeStampedGraph) -> Result<FeatureRecord, MetricError> {
    if g.vertex_count() == 0 {
        return Err(MetricError::DegenerateGraph("graph has no vertices".into()));
    }
    let density = match density(g) {
        Ok(d) => Some(d),
        Err(e) => {
            log::warn!("density left empty: {e}");
            None
        }
    };
    let projection = undirected_projection(g);
    let triangles = triangles_per_vertex(&projection).iter().sum::<u64>() / 3;
    let local = local_clustering(&projection);
    let cc = local.iter().sum::<f64>() / local.len() as f64;
    let degrees = degree_features(g)?;
    let partition = weakly_connected_components(g);
    let comps = component_features_from(g, &partition)?;

    Ok(FeatureRecord {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        density,
        loops: g.self_loop_count(),
        triangles,
        cc,
        avg_deg: degrees.avg_deg,
        avg_in_deg: degrees.avg_in_deg,
        max_in_deg: degrees.max_in_deg,
        max_out_deg: degrees.max_out_deg,
        wcc: comps.wcc,
        v_lc: comps.v_lc,
        e_lc: comps.e_lc,
        lc_ratio: comps.lc_ratio,
        single: comps.single,
        days: days(g)?,
    })
}

/// Locale-independent `%.6g`-style formatting: six significant digits,
/// trailing zeros removed, scientific notation outside `[1e-4, 1e6)`.
pub fn format_sig(x: f64) -> String {
    const DIGITS: usize = 6;
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    // round first so that e.g. 999999.7 picks up the carried exponent
    let sci = format!("{:.*e}", DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= DIGITS as i32 {
        let m = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{m}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (DIGITS as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// Writes a feature table: one `graph` column followed by [`FEATURE_HEADER`].
pub fn write_feature_csv<W: io::Write>(out: W, rows: &[(String, FeatureRecord)]) -> io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    let mut header = vec!["graph"];
    header.extend(FEATURE_HEADER);
    w.write_record(&header)?;
    for (name, record) in rows {
        let mut cells = vec![name.clone()];
        cells.extend(record.cells());
        w.write_record(&cells)?;
    }
    w.flush()
}
