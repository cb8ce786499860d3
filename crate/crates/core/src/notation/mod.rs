//! Text notations for link diagrams.
//!
//! All parsers accept UTF-8 text in which `#` starts a comment that runs to
//! the end of the line. Byte offsets in syntax errors refer to the original
//! text.

mod braid;
mod dt;
mod pd;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::diagram::LinkDiagram;
use crate::error::NotationError;

pub use braid::parse_braid;
pub use dt::{parse_dt, MAX_DT_CROSSINGS};
pub use pd::{emit_pd, parse_pd, parse_pd_raw};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum NotationFormat {
    Pd,
    Dt,
    Braid,
}

impl NotationFormat {
    /// Guesses the format from the first meaningful character.
    pub fn infer(text: &str) -> Option<NotationFormat> {
        let cleaned = strip_comments(text);
        match cleaned.trim_start().chars().next()? {
            'X' | 'P' => Some(NotationFormat::Pd),
            's' | 'S' => Some(NotationFormat::Braid),
            c if c.is_ascii_digit() || c == '-' || c == '+' => Some(NotationFormat::Dt),
            _ => None,
        }
    }

    pub fn parse(self, text: &str) -> Result<LinkDiagram, NotationError> {
        match self {
            NotationFormat::Pd => parse_pd(text),
            NotationFormat::Dt => parse_dt(text),
            NotationFormat::Braid => parse_braid(text),
        }
    }
}

impl fmt::Display for NotationFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NotationFormat::Pd => "PD",
            NotationFormat::Dt => "DT",
            NotationFormat::Braid => "BRAID",
        })
    }
}

impl FromStr for NotationFormat {
    type Err = NotationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "pd" => Ok(NotationFormat::Pd),
            "dt" => Ok(NotationFormat::Dt),
            "braid" => Ok(NotationFormat::Braid),
            _ => Err(NotationError::UnknownFormat),
        }
    }
}

/// Parses `text`, inferring the format when `format` is `None`.
pub fn parse(format: Option<NotationFormat>, text: &str) -> Result<LinkDiagram, NotationError> {
    let format = match format {
        Some(f) => f,
        None => NotationFormat::infer(text).ok_or(NotationError::UnknownFormat)?,
    };
    format.parse(text)
}

/// Blanks out comments, keeping byte offsets intact.
pub(crate) fn strip_comments(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    let mut in_comment = false;
    for ch in text.chars() {
        if ch == '\n' {
            in_comment = false;
            out.push('\n');
        } else if in_comment || ch == '#' {
            in_comment = true;
            for _ in 0..ch.len_utf8() {
                out.push(' ');
            }
        } else {
            out.push(ch);
        }
    }
    out
}
