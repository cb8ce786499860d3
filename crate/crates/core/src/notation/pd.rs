use crate::diagram::{LinkDiagram, RawDiagram};
use crate::error::NotationError;

use super::strip_comments;

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Scanner<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn error(&self, message: impl Into<String>) -> NotationError {
        NotationError::Syntax {
            offset: self.pos,
            message: message.into(),
        }
    }

    fn expect(&mut self, byte: u8) -> Result<(), NotationError> {
        self.skip_ws();
        if self.bytes.get(self.pos) == Some(&byte) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.error(format!("expected '{}'", byte as char)))
        }
    }

    fn number(&mut self) -> Result<usize, NotationError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a positive edge label"));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        text.parse().map_err(|_| NotationError::Syntax {
            offset: start,
            message: "edge label too large".into(),
        })
    }
}

/// Parses whitespace-separated `X[a,b,c,d]` tokens. Each tuple lists edge
/// labels counterclockwise starting at the incoming understrand.
pub fn parse_pd(text: &str) -> Result<LinkDiagram, NotationError> {
    Ok(LinkDiagram::from_raw(&parse_pd_raw(text)?)?)
}

/// The crossing table of a PD code, checked only for syntax.
pub fn parse_pd_raw(text: &str) -> Result<RawDiagram, NotationError> {
    let cleaned = strip_comments(text);
    let mut sc = Scanner {
        bytes: cleaned.as_bytes(),
        pos: 0,
    };
    let mut crossings = Vec::new();
    loop {
        sc.skip_ws();
        if sc.pos >= sc.bytes.len() {
            break;
        }
        if sc.bytes[sc.pos] != b'X' {
            return Err(sc.error("expected 'X['"));
        }
        sc.pos += 1;
        sc.expect(b'[')?;
        let mut tuple = Vec::with_capacity(4);
        for i in 0..4 {
            if i > 0 {
                sc.expect(b',')?;
            }
            tuple.push(sc.number()?);
        }
        sc.expect(b']')?;
        crossings.push(tuple);
    }
    if crossings.is_empty() {
        return Err(NotationError::EmptyInput);
    }
    Ok(RawDiagram::new(crossings))
}

/// Canonical PD text: crossings in canonical order, edges numbered
/// consecutively along each oriented component.
pub fn emit_pd(diagram: &LinkDiagram) -> String {
    diagram
        .canonical_relabel()
        .crossings()
        .iter()
        .map(|c| {
            format!(
                "X[{},{},{},{}]",
                c.slots[0], c.slots[1], c.slots[2], c.slots[3]
            )
        })
        .collect::<Vec<_>>()
        .join(" ")
}
