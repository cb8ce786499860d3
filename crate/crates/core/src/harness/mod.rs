//! Batch analysis of census files and report emission.

mod census;
mod report;

pub use census::{ingest_census, read_census, Census, CensusEntry, RowDiagnostic, CENSUS_HEADER};
pub use report::{
    analyze_entry, report_csv, report_json, round12, run_report, sharpness_stats, to_json,
    ReportRow, SharpnessStats, DOMINANCE_TOLERANCE, REPORT_COLUMNS,
};
