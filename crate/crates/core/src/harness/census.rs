use std::fs::File;
use std::io::Read;
use std::path::Path;

use serde::Serialize;

use crate::diagram::LinkDiagram;
use crate::error::HarnessError;
use crate::notation::NotationFormat;

pub const CENSUS_HEADER: [&str; 5] = ["name", "format", "notation", "volume", "hyperbolic"];

#[derive(Debug, Clone, Serialize)]
pub struct CensusEntry {
    pub name: String,
    pub format: NotationFormat,
    pub notation: String,
    pub known_volume: Option<f64>,
    pub hyperbolic: Option<bool>,
    #[serde(skip)]
    pub diagram: LinkDiagram,
}

impl CensusEntry {
    pub fn new(
        name: impl Into<String>,
        format: NotationFormat,
        notation: impl Into<String>,
    ) -> Result<Self, crate::error::NotationError> {
        let notation = notation.into();
        let diagram = format.parse(&notation)?;
        Ok(CensusEntry {
            name: name.into(),
            format,
            notation,
            known_volume: None,
            hyperbolic: None,
            diagram,
        })
    }
}

/// A skipped row and why.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RowDiagnostic {
    pub line: u64,
    pub name: Option<String>,
    pub message: String,
}

#[derive(Debug, Clone, Default)]
pub struct Census {
    pub entries: Vec<CensusEntry>,
    pub diagnostics: Vec<RowDiagnostic>,
}

pub fn ingest_census(path: impl AsRef<Path>) -> Result<Census, HarnessError> {
    let path = path.as_ref();
    let file = File::open(path).map_err(|source| HarnessError::Io {
        path: path.display().to_string(),
        source,
    })?;
    read_census(file)
}

/// Reads census CSV. Lines starting with `#` are comments; notation fields
/// containing commas must be quoted.
pub fn read_census(reader: impl Read) -> Result<Census, HarnessError> {
    let mut rdr = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let header = rdr.headers()?.clone();
    if header.iter().ne(CENSUS_HEADER.iter().copied()) {
        return Err(HarnessError::Header(
            header.iter().collect::<Vec<_>>().join(","),
        ));
    }
    let mut census = Census::default();
    for record in rdr.records() {
        let record = match record {
            Ok(r) => r,
            Err(e) => {
                census.diagnostics.push(RowDiagnostic {
                    line: e.position().map_or(0, |p| p.line()),
                    name: None,
                    message: e.to_string(),
                });
                continue;
            }
        };
        let line = record.position().map_or(0, |p| p.line());
        let name = record.get(0).map(str::to_string);
        match parse_row(&record) {
            Ok(entry) => census.entries.push(entry),
            Err(message) => census.diagnostics.push(RowDiagnostic {
                line,
                name,
                message,
            }),
        }
    }
    Ok(census)
}

fn parse_row(record: &csv::StringRecord) -> Result<CensusEntry, String> {
    if record.len() != CENSUS_HEADER.len() {
        return Err(format!(
            "expected {} fields, found {} (quote notations that contain commas)",
            CENSUS_HEADER.len(),
            record.len()
        ));
    }
    let format: NotationFormat = record[1].parse().map_err(|e| format!("{e}"))?;
    let mut entry = CensusEntry::new(&record[0], format, &record[2]).map_err(|e| e.to_string())?;
    entry.known_volume = match &record[3] {
        "" => None,
        v => {
            let v: f64 = v
                .parse()
                .map_err(|_| format!("volume `{v}` is not a number"))?;
            if !(v >= 0.0 && v.is_finite()) {
                return Err(format!("volume {v} is negative or not finite"));
            }
            Some(v)
        }
    };
    entry.hyperbolic = match record[4].to_ascii_lowercase().as_str() {
        "" => None,
        "true" | "yes" | "1" => Some(true),
        "false" | "no" | "0" => Some(false),
        other => return Err(format!("hyperbolic flag `{other}` is not true/false")),
    };
    Ok(entry)
}
