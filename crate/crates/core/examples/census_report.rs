//! Runs the shipped census and writes the JSON and CSV reports.
//!
//! cargo run --example census_report -- [census.csv] [out-dir]

use std::path::PathBuf;

use twistbound::harness::{ingest_census, report_csv, report_json, run_report, sharpness_stats};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let csv = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/census.csv"));
    let out = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(std::env::temp_dir);

    let census = ingest_census(&csv)?;
    for d in &census.diagnostics {
        println!("skipped line {}: {}", d.line, d.message);
    }
    let rows = run_report(&census.entries);
    let stats = sharpness_stats(&rows)?;
    for r in &rows {
        println!(
            "{:<20} t={:<2} refined {:>9.5}  known {:>9.5}  slack {:>9.5}{}",
            r.name,
            r.t,
            r.refined_volume.unwrap_or(f64::NAN),
            r.known_volume.unwrap_or(f64::NAN),
            r.slack.unwrap_or(f64::NAN),
            if r.violates_dominance() {
                "  VIOLATION"
            } else {
                ""
            }
        );
    }
    println!(
        "{} rows, {} violations, ratio known/refined in [{:.3}, {:.3}], mean {:.3}",
        stats.rows, stats.violations, stats.ratio_min, stats.ratio_max, stats.ratio_mean
    );

    let json = out.join("census_report.json");
    let table = out.join("census_report.csv");
    std::fs::write(&json, report_json(&rows, Some(&stats))?)?;
    std::fs::write(&table, report_csv(&rows)?)?;
    println!("wrote {} and {}", json.display(), table.display());
    Ok(())
}
