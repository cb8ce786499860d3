use serde::Serialize;
use serde_json::Value;

use crate::bounds::bound_report;
use crate::error::HarnessError;
use crate::rewrite::{fully_augmented, resolve_nugatory};
use crate::twist::twist_regions;

use super::census::CensusEntry;

/// Dominance margin below which a row counts as a violation.
pub const DOMINANCE_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportRow {
    pub name: String,
    pub crossings: usize,
    pub link_components: usize,
    /// Region lengths of the reduced diagram, in region order.
    pub region_lengths: Vec<usize>,
    pub t1: usize,
    pub t2: usize,
    pub t3: usize,
    pub g4: usize,
    pub t: usize,
    pub a_used: Option<u32>,
    pub refined_units: Option<u64>,
    pub refined_volume: Option<f64>,
    pub lackenby_units: Option<u64>,
    pub lackenby_volume: Option<f64>,
    pub known_volume: Option<f64>,
    pub hyperbolic: Option<bool>,
    pub slack: Option<f64>,
    pub ratio: Option<f64>,
    pub n_crossings: Option<usize>,
    pub n_components: Option<usize>,
    pub l_crossings: Option<usize>,
    pub l_components: Option<usize>,
    pub nugatory_resolutions: usize,
    pub diagnostics: Vec<String>,
}

impl ReportRow {
    /// True when a known volume exceeds the refined bound by more than the
    /// tolerance.
    pub fn violates_dominance(&self) -> bool {
        matches!(self.slack, Some(s) if s < -DOMINANCE_TOLERANCE)
    }
}

pub fn analyze_entry(entry: &CensusEntry) -> ReportRow {
    let d = &entry.diagram;
    let mut row = ReportRow {
        name: entry.name.clone(),
        crossings: d.crossing_count(),
        link_components: d.link_components(),
        region_lengths: Vec::new(),
        t1: 0,
        t2: 0,
        t3: 0,
        g4: 0,
        t: 0,
        a_used: None,
        refined_units: None,
        refined_volume: None,
        lackenby_units: None,
        lackenby_volume: None,
        known_volume: entry.known_volume,
        hyperbolic: entry.hyperbolic,
        slack: None,
        ratio: None,
        n_crossings: None,
        n_components: None,
        l_crossings: None,
        l_components: None,
        nugatory_resolutions: 0,
        diagnostics: Vec::new(),
    };
    if !d.is_connected() {
        row.diagnostics
            .push(format!("diagram is disconnected ({} pieces)", d.pieces()));
        return row;
    }
    let reduced = match resolve_nugatory(d) {
        Ok((k, count)) => {
            row.nugatory_resolutions = count;
            k
        }
        Err(e) => {
            row.diagnostics.push(format!("nugatory resolution: {e}"));
            return row;
        }
    };
    match twist_regions(&reduced) {
        Ok(regions) => row.region_lengths = regions.iter().map(|r| r.length()).collect(),
        Err(e) => {
            row.diagnostics.push(format!("twist regions: {e}"));
            return row;
        }
    }
    match bound_report(&reduced) {
        Ok(b) => {
            row.t1 = b.tv.t1();
            row.t2 = b.tv.t2();
            row.t3 = b.tv.t3();
            row.g4 = b.tv.g(4);
            row.t = b.tv.t();
            row.a_used = Some(b.a_used);
            row.refined_units = Some(b.refined_units);
            row.refined_volume = Some(b.refined_volume);
            row.lackenby_units = Some(b.lackenby_units);
            row.lackenby_volume = Some(b.lackenby_volume);
            if let Some(v) = entry.known_volume {
                row.slack = Some(b.refined_volume - v);
                row.ratio = if b.refined_volume > 0.0 {
                    Some(v / b.refined_volume)
                } else if v == 0.0 {
                    Some(0.0)
                } else {
                    None
                };
            }
        }
        Err(e) => row.diagnostics.push(format!("bounds: {e}")),
    }
    match fully_augmented(&reduced) {
        Ok(p) => {
            row.n_crossings = Some(p.augmented.crossing_count());
            row.n_components = Some(p.augmented.link_components());
            row.l_crossings = Some(p.untwisted.crossing_count());
            row.l_components = Some(p.untwisted.link_components());
        }
        Err(e) => row.diagnostics.push(format!("pipeline: {e}")),
    }
    row
}

/// One row per entry, in input order.
pub fn run_report(entries: &[CensusEntry]) -> Vec<ReportRow> {
    entries.iter().map(analyze_entry).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SharpnessStats {
    pub rows: usize,
    pub rows_with_volume: usize,
    pub ratio_min: f64,
    pub ratio_mean: f64,
    pub ratio_max: f64,
    pub violations: usize,
    /// Rows where the refined bound is strictly smaller than the classical one.
    pub refined_tighter: usize,
    pub lackenby_tighter: usize,
    pub ties: usize,
}

pub fn sharpness_stats(rows: &[ReportRow]) -> Result<SharpnessStats, HarnessError> {
    let ratios: Vec<f64> = rows.iter().filter_map(|r| r.ratio).collect();
    if ratios.is_empty() {
        return Err(HarnessError::EmptyInput);
    }
    let mut stats = SharpnessStats {
        rows: rows.len(),
        rows_with_volume: rows.iter().filter(|r| r.known_volume.is_some()).count(),
        ratio_min: ratios.iter().copied().fold(f64::INFINITY, f64::min),
        ratio_mean: ratios.iter().sum::<f64>() / ratios.len() as f64,
        ratio_max: ratios.iter().copied().fold(f64::NEG_INFINITY, f64::max),
        violations: rows
            .iter()
            .filter(|r| r.violates_dominance() || (r.known_volume.is_some() && r.ratio.is_none()))
            .count(),
        refined_tighter: 0,
        lackenby_tighter: 0,
        ties: 0,
    };
    for r in rows {
        if let (Some(a), Some(b)) = (r.refined_units, r.lackenby_units) {
            match a.cmp(&b) {
                std::cmp::Ordering::Less => stats.refined_tighter += 1,
                std::cmp::Ordering::Greater => stats.lackenby_tighter += 1,
                std::cmp::Ordering::Equal => stats.ties += 1,
            }
        }
    }
    Ok(stats)
}

/// Rounds to 12 significant digits.
pub fn round12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.11e}").parse().expect("formatted float parses")
}

fn round_value(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            if let Some(r) = n
                .as_f64()
                .map(round12)
                .and_then(serde_json::Number::from_f64)
            {
                *n = r;
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_value),
        Value::Object(map) => map.values_mut().for_each(round_value),
        _ => {}
    }
}

/// Pretty JSON with floats rounded to 12 significant digits. Field order is
/// declaration order, so identical input gives identical bytes.
pub fn to_json<T: Serialize>(value: &T) -> Result<String, HarnessError> {
    let mut v = serde_json::to_value(value)?;
    round_value(&mut v);
    Ok(serde_json::to_string_pretty(&v)?)
}

#[derive(Serialize)]
struct ReportDocument<'a> {
    rows: &'a [ReportRow],
    stats: Option<&'a SharpnessStats>,
}

pub fn report_json(
    rows: &[ReportRow],
    stats: Option<&SharpnessStats>,
) -> Result<String, HarnessError> {
    to_json(&ReportDocument { rows, stats })
}

pub const REPORT_COLUMNS: [&str; 25] = [
    "name",
    "crossings",
    "link_components",
    "region_lengths",
    "t1",
    "t2",
    "t3",
    "g4",
    "t",
    "a_used",
    "refined_units",
    "refined_volume",
    "lackenby_units",
    "lackenby_volume",
    "known_volume",
    "hyperbolic",
    "slack",
    "ratio",
    "n_crossings",
    "n_components",
    "l_crossings",
    "l_components",
    "nugatory_resolutions",
    "diagnostics",
    "violation",
];

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(String::new, |x| x.to_string())
}

fn float(v: Option<f64>) -> String {
    opt(v.map(round12))
}

/// CSV mirror of the JSON rows; list fields are `;`-separated.
pub fn report_csv(rows: &[ReportRow]) -> Result<String, HarnessError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(REPORT_COLUMNS)?;
    for r in rows {
        let lengths: Vec<String> = r.region_lengths.iter().map(usize::to_string).collect();
        w.write_record([
            r.name.clone(),
            r.crossings.to_string(),
            r.link_components.to_string(),
            lengths.join(";"),
            r.t1.to_string(),
            r.t2.to_string(),
            r.t3.to_string(),
            r.g4.to_string(),
            r.t.to_string(),
            opt(r.a_used),
            opt(r.refined_units),
            float(r.refined_volume),
            opt(r.lackenby_units),
            float(r.lackenby_volume),
            float(r.known_volume),
            opt(r.hyperbolic),
            float(r.slack),
            float(r.ratio),
            opt(r.n_crossings),
            opt(r.n_components),
            opt(r.l_crossings),
            opt(r.l_components),
            r.nugatory_resolutions.to_string(),
            r.diagnostics.join("; "),
            r.violates_dominance().to_string(),
        ])?;
    }
    let bytes = w.into_inner().map_err(|e| HarnessError::Io {
        path: "<memory>".into(),
        source: e.into_error(),
    })?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}
