//! Dowker–Thistlethwaite codes for knots.
//!
//! Walking the knot labels the passes `1..=2n`; every crossing is passed at
//! one odd and one even label, and the code lists the even partner of
//! `1, 3, 5, …`. A negative entry means the even-labelled pass goes under;
//! a positive entry means the odd-labelled pass goes under. Alternating knots
//! therefore have all-positive codes.
//!
//! The code fixes the Gauss word but not which way the second pass runs
//! through each crossing. Realization searches those choices for one whose
//! rotation system has `n + 2` faces, fixing the first crossing to remove the
//! mirror symmetry of the sphere.

use crate::diagram::{trace_faces, Incidence, LinkDiagram, RawDiagram};
use crate::error::NotationError;

use super::strip_comments;

pub const MAX_DT_CROSSINGS: usize = 22;

struct Pass {
    odd: usize,
    even: usize,
    odd_under: bool,
}

pub fn parse_dt(text: &str) -> Result<LinkDiagram, NotationError> {
    let cleaned = strip_comments(text);
    let mut entries: Vec<i64> = Vec::new();
    let bytes = cleaned.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        let b = bytes[pos];
        if b.is_ascii_whitespace() || b == b',' {
            pos += 1;
            continue;
        }
        let start = pos;
        if b == b'-' || b == b'+' {
            pos += 1;
        }
        let digits = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        if digits == pos {
            return Err(NotationError::Syntax {
                offset: start,
                message: "expected a signed even integer".into(),
            });
        }
        let value: i64 = cleaned[start..pos]
            .parse()
            .map_err(|_| NotationError::Syntax {
                offset: start,
                message: "integer out of range".into(),
            })?;
        entries.push(value);
    }
    if entries.is_empty() {
        return Err(NotationError::EmptyInput);
    }
    let n = entries.len();
    let mut used = vec![false; 2 * n + 1];
    let mut passes = Vec::with_capacity(n);
    for (i, &v) in entries.iter().enumerate() {
        if v % 2 != 0 {
            return Err(NotationError::OddEntry {
                position: i,
                value: v,
            });
        }
        let abs = v.unsigned_abs() as usize;
        if abs < 2 || abs > 2 * n {
            return Err(NotationError::EntryOutOfRange {
                value: v,
                max: 2 * n,
            });
        }
        if used[abs] {
            return Err(NotationError::DuplicateEntry { value: v });
        }
        used[abs] = true;
        passes.push(Pass {
            odd: 2 * i + 1,
            even: abs,
            odd_under: v > 0,
        });
    }
    if n > MAX_DT_CROSSINGS {
        return Err(NotationError::TooManyCrossings(n));
    }
    let flips = realize(&passes).ok_or(NotationError::NotRealizable)?;
    let (tuples, over_in) = oriented_tuples(&passes, &flips);
    Ok(LinkDiagram::from_raw(&RawDiagram::oriented(
        tuples, over_in,
    ))?)
}

/// Edge `p` runs from pass `p` to pass `p + 1`.
fn edges_at(label: usize, total: usize) -> (usize, usize) {
    let incoming = if label == 1 { total } else { label - 1 };
    (incoming, label)
}

/// Counterclockwise rotation at each crossing starting at the incoming odd
/// pass, before the under/over normalisation.
fn rotation(pass: &Pass, flipped: bool, total: usize) -> [usize; 4] {
    let (in_o, out_o) = edges_at(pass.odd, total);
    let (in_e, out_e) = edges_at(pass.even, total);
    if flipped {
        [in_o, out_e, out_o, in_e]
    } else {
        [in_o, in_e, out_o, out_e]
    }
}

fn oriented_tuples(passes: &[Pass], flips: &[bool]) -> (Vec<[usize; 4]>, Vec<u8>) {
    let total = 2 * passes.len();
    passes
        .iter()
        .zip(flips)
        .map(|(p, &f)| {
            let r = rotation(p, f, total);
            if p.odd_under {
                (r, if f { 3 } else { 1 })
            } else if f {
                ([r[3], r[0], r[1], r[2]], 1)
            } else {
                ([r[1], r[2], r[3], r[0]], 3)
            }
        })
        .unzip()
}

/// Depth-first search over the per-crossing choices. A partial assignment
/// is abandoned once the faces already closed plus the corners still open
/// cannot reach `n + 2`.
fn realize(passes: &[Pass]) -> Option<Vec<bool>> {
    let n = passes.len();
    let total = 2 * n;
    // Decide crossings in the order the knot first reaches them.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| passes[i].odd.min(passes[i].even));
    let mut ends = vec![Vec::with_capacity(2); total + 1];
    let mut rot = vec![[0usize; 4]; n];
    let mut decided = vec![false; n];
    let mut flips = vec![false; n];

    fn search(
        k: usize,
        order: &[usize],
        passes: &[Pass],
        rot: &mut [[usize; 4]],
        decided: &mut [bool],
        flips: &mut [bool],
        ends: &mut [Vec<Incidence>],
    ) -> bool {
        let n = passes.len();
        let total = 2 * n;
        if k == n {
            for e in ends.iter_mut() {
                e.clear();
            }
            for (c, r) in rot.iter().enumerate() {
                for (s, &l) in r.iter().enumerate() {
                    ends[l].push(Incidence::new(c, s as u8));
                }
            }
            let faces = trace_faces(n, |at| {
                let e = &ends[rot[at.crossing][at.slot as usize]];
                if e[0] == at {
                    e[1]
                } else {
                    e[0]
                }
            });
            return faces.len() == n + 2;
        }
        let c = order[k];
        let choices: &[bool] = if k == 0 { &[false] } else { &[false, true] };
        for &f in choices {
            flips[c] = f;
            rot[c] = rotation(&passes[c], f, total);
            decided[c] = true;
            if k + 1 < n && !can_still_close(passes, rot, decided, n - k - 1) {
                continue;
            }
            if search(k + 1, order, passes, rot, decided, flips, ends) {
                return true;
            }
        }
        decided[c] = false;
        false
    }

    if search(
        0,
        &order,
        passes,
        &mut rot,
        &mut decided,
        &mut flips,
        &mut ends,
    ) {
        Some(flips)
    } else {
        None
    }
}

fn can_still_close(
    passes: &[Pass],
    rot: &[[usize; 4]],
    decided: &[bool],
    undecided: usize,
) -> bool {
    let n = passes.len();
    let total = 2 * n;
    // Label -> the two (crossing, slot) ends among decided crossings.
    let mut ends: Vec<Vec<Incidence>> = vec![Vec::new(); total + 1];
    for c in (0..n).filter(|&c| decided[c]) {
        for (s, &l) in rot[c].iter().enumerate() {
            ends[l].push(Incidence::new(c, s as u8));
        }
    }
    let mut seen = vec![[false; 4]; n];
    let mut closed = 0;
    for c in (0..n).filter(|&c| decided[c]) {
        for s in 0..4u8 {
            if seen[c][s as usize] {
                continue;
            }
            let start = Incidence::new(c, s);
            let mut cur = start;
            let mut path = Vec::new();
            let complete = loop {
                if seen[cur.crossing][cur.slot as usize] {
                    break cur == start;
                }
                seen[cur.crossing][cur.slot as usize] = true;
                path.push(cur);
                let e = &ends[rot[cur.crossing][cur.slot as usize]];
                if e.len() < 2 {
                    break false;
                }
                let arrive = if e[0] == cur { e[1] } else { e[0] };
                cur = Incidence::new(arrive.crossing, arrive.slot + 3);
            };
            if complete {
                closed += 1;
            } else {
                // Open traces may be re-entered from another start later.
                for p in path {
                    seen[p.crossing][p.slot as usize] = false;
                }
                seen[c][s as usize] = true;
            }
        }
    }
    closed + 4 * undecided >= n + 2
}
