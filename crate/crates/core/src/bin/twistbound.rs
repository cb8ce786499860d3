//! Command-line front end. Exit status: 0 success, 1 diagnostics (parse
//! errors, invalid diagrams, skipped rows, bound violations), 2 hard errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use twistbound::diagram::{validate, LinkDiagram, ValidationReport};
use twistbound::harness::{
    analyze_entry, ingest_census, report_csv, report_json, run_report, sharpness_stats, to_json,
    CensusEntry,
};
use twistbound::notation::{emit_pd, parse_pd_raw, NotationFormat};
use twistbound::rewrite::{fully_augmented, CrossingCircleSite, VolumeChain};

#[derive(Parser)]
#[command(
    name = "twistbound",
    version,
    about = "Twist-region volume bounds for link diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Twist regions and volume bounds for one diagram.
    Analyze {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Encircle long twist regions and delete them; prints PD codes of N and L.
    Augment {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
    /// Report over a census CSV (`name,format,notation,volume,hyperbolic`).
    Census {
        csv: PathBuf,
        #[arg(long, value_name = "OUT")]
        json: Option<PathBuf>,
        #[arg(long = "csv", value_name = "OUT")]
        csv_out: Option<PathBuf>,
    },
    /// Structural validation with every finding listed.
    Validate {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct Input {
    /// pd, dt or braid; inferred from the text when omitted.
    #[arg(long, short)]
    format: Option<NotationFormat>,
    /// A file path, `-` for stdin, or the notation itself.
    input: String,
}

enum Failure {
    Diagnostic(String),
    Hard(String),
}

impl Input {
    fn text(&self) -> Result<String, Failure> {
        if self.input == "-" {
            return std::io::read_to_string(std::io::stdin())
                .map_err(|e| Failure::Hard(format!("cannot read stdin: {e}")));
        }
        let path = Path::new(&self.input);
        if path.is_file() {
            std::fs::read_to_string(path)
                .map_err(|e| Failure::Hard(format!("cannot read {}: {e}", path.display())))
        } else {
            Ok(self.input.clone())
        }
    }

    fn format(&self, text: &str) -> Result<NotationFormat, Failure> {
        self.format
            .or_else(|| NotationFormat::infer(text))
            .ok_or_else(|| {
                Failure::Diagnostic("cannot infer the notation format; pass --format".into())
            })
    }

    fn entry(&self) -> Result<CensusEntry, Failure> {
        let text = self.text()?;
        let format = self.format(&text)?;
        CensusEntry::new("input", format, text.trim())
            .map_err(|e| Failure::Diagnostic(e.to_string()))
    }
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents)
        .map_err(|e| Failure::Hard(format!("cannot write {}: {e}", path.display())))
}

fn hard<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Hard(e.to_string())
}

fn analyze(input: &Input, json: bool) -> Result<bool, Failure> {
    let row = analyze_entry(&input.entry()?);
    if json {
        println!("{}", to_json(&row).map_err(hard)?);
    } else {
        println!(
            "crossings: {}  components: {}",
            row.crossings, row.link_components
        );
        if row.nugatory_resolutions > 0 {
            println!("nugatory twists removed: {}", row.nugatory_resolutions);
        }
        println!("twist regions: {:?}", row.region_lengths);
        println!(
            "t1={} t2={} t3={} g4={} t={}",
            row.t1, row.t2, row.t3, row.g4, row.t
        );
        if let (Some(a), Some(u), Some(v)) = (row.a_used, row.refined_units, row.refined_volume) {
            println!("refined bound: a={a}, {u} v3 = {v:.12}");
        }
        if let (Some(u), Some(v)) = (row.lackenby_units, row.lackenby_volume) {
            println!("classical bound: {u} v3 = {v:.12}");
        }
        if let (Some(n), Some(l)) = (row.n_crossings, row.l_crossings) {
            println!(
                "augmented N: {n} crossings, {} components; untwisted L: {l} crossings, {} components",
                row.n_components.unwrap_or(0),
                row.l_components.unwrap_or(0)
            );
        }
    }
    for d in &row.diagnostics {
        eprintln!("diagnostic: {d}");
    }
    Ok(row.diagnostics.is_empty())
}

#[derive(Serialize)]
struct AugmentOutput {
    original: String,
    augmented: String,
    untwisted: String,
    nugatory_resolutions: usize,
    sites: Vec<CrossingCircleSite>,
    volume_chain: VolumeChain,
}

fn augment(input: &Input, json: bool) -> Result<bool, Failure> {
    let entry = input.entry()?;
    let p = fully_augmented(&entry.diagram).map_err(|e| Failure::Diagnostic(e.to_string()))?;
    let describe = |d: &LinkDiagram| {
        format!(
            "{} crossings, {} components",
            d.crossing_count(),
            d.link_components()
        )
    };
    if json {
        let out = AugmentOutput {
            original: emit_pd(&p.original),
            augmented: emit_pd(&p.augmented),
            untwisted: emit_pd(&p.untwisted),
            nugatory_resolutions: p.nugatory_resolutions,
            sites: p.sites.clone(),
            volume_chain: p.volume_chain.clone(),
        };
        println!("{}", to_json(&out).map_err(hard)?);
    } else {
        println!("# K: {}", describe(&p.original));
        println!(
            "# N: {} ({} crossing circles)",
            describe(&p.augmented),
            p.sites.len()
        );
        println!("N {}", emit_pd(&p.augmented));
        println!("# L: {}", describe(&p.untwisted));
        println!("L {}", emit_pd(&p.untwisted));
    }
    Ok(true)
}

fn validate_cmd(input: &Input, json: bool) -> Result<bool, Failure> {
    let text = input.text()?;
    let report: ValidationReport = match input.format(&text)? {
        NotationFormat::Pd => {
            validate(&parse_pd_raw(&text).map_err(|e| Failure::Diagnostic(e.to_string()))?)
        }
        other => other
            .parse(&text)
            .map_err(|e| Failure::Diagnostic(e.to_string()))?
            .validate(),
    };
    if json {
        println!("{}", to_json(&report).map_err(hard)?);
    } else {
        println!("{}", if report.ok { "ok" } else { "invalid" });
        for issue in &report.issues {
            println!("  {}", serde_json::to_string(issue).map_err(hard)?);
        }
    }
    Ok(report.ok)
}

fn census(csv: &Path, json: Option<&Path>, csv_out: Option<&Path>) -> Result<bool, Failure> {
    let census = ingest_census(csv).map_err(hard)?;
    for d in &census.diagnostics {
        eprintln!(
            "line {}: {}: {}",
            d.line,
            d.name.as_deref().unwrap_or("?"),
            d.message
        );
    }
    let rows = run_report(&census.entries);
    let stats = sharpness_stats(&rows).ok();
    if let Some(path) = json {
        write_file(
            path,
            &(report_json(&rows, stats.as_ref()).map_err(hard)? + "\n"),
        )?;
    }
    if let Some(path) = csv_out {
        write_file(path, &report_csv(&rows).map_err(hard)?)?;
    }
    println!(
        "{:<22} {:>3} {:>4} {:>8} {:>14} {:>14} {:>8}",
        "name", "n", "t", "units", "refined", "known", "ratio"
    );
    let fmt = |v: Option<f64>| v.map_or_else(|| "-".to_string(), |x| format!("{x:.6}"));
    for r in &rows {
        println!(
            "{:<22} {:>3} {:>4} {:>8} {:>14} {:>14} {:>8}{}",
            r.name,
            r.crossings,
            r.t,
            r.refined_units
                .map_or_else(|| "-".into(), |u| u.to_string()),
            fmt(r.refined_volume),
            fmt(r.known_volume),
            r.ratio.map_or_else(|| "-".into(), |x| format!("{x:.4}")),
            if r.violates_dominance() {
                "  VIOLATION"
            } else {
                ""
            }
        );
        for d in &r.diagnostics {
            eprintln!("{}: {d}", r.name);
        }
    }
    if let Some(s) = &stats {
        println!(
            "ratio min/mean/max = {:.4}/{:.4}/{:.4}; violations = {}; refined tighter in {} rows, classical in {}, ties {}",
            s.ratio_min, s.ratio_mean, s.ratio_max, s.violations, s.refined_tighter, s.lackenby_tighter, s.ties
        );
    }
    let clean = census.diagnostics.is_empty()
        && rows.iter().all(|r| r.diagnostics.is_empty())
        && stats.is_none_or(|s| s.violations == 0);
    Ok(clean)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Analyze { input, json } => analyze(input, *json),
        Command::Augment { input, json } => augment(input, *json),
        Command::Census { csv, json, csv_out } => census(csv, json.as_deref(), csv_out.as_deref()),
        Command::Validate { input, json } => validate_cmd(input, *json),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Diagnostic(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Hard(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
