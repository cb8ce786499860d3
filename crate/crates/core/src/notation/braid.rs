use crate::diagram::{LinkDiagram, RawDiagram};
use crate::error::NotationError;

use super::strip_comments;

/// Parses a braid word of `s<i>` (positive crossing of strands `i`, `i+1`)
/// and `S<i>` (its inverse) and returns the diagram of its closure. The
/// strand count is one more than the largest generator index.
pub fn parse_braid(text: &str) -> Result<LinkDiagram, NotationError> {
    let cleaned = strip_comments(text);
    let mut word: Vec<(usize, bool)> = Vec::new();
    let bytes = cleaned.as_bytes();
    let mut pos = 0;
    while pos < bytes.len() {
        let b = bytes[pos];
        if b.is_ascii_whitespace() || b == b',' {
            pos += 1;
            continue;
        }
        let positive = match b {
            b's' => true,
            b'S' => false,
            _ => {
                return Err(NotationError::Syntax {
                    offset: pos,
                    message: "expected a generator s<i> or S<i>".into(),
                })
            }
        };
        let start = pos;
        pos += 1;
        let digits = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        if digits == pos {
            return Err(NotationError::Syntax {
                offset: digits,
                message: "expected a generator index".into(),
            });
        }
        let index: usize =
            cleaned[digits..pos]
                .parse()
                .map_err(|_| NotationError::GeneratorOutOfRange {
                    index: usize::MAX,
                    offset: start,
                })?;
        if index == 0 {
            return Err(NotationError::GeneratorOutOfRange {
                index,
                offset: start,
            });
        }
        word.push((index, positive));
    }
    if word.is_empty() {
        return Err(NotationError::EmptyInput);
    }
    let strands = word.iter().map(|&(i, _)| i).max().unwrap_or(0) + 1;

    // Strands run upward. Position p initially carries label p + 1.
    let mut current: Vec<usize> = (1..=strands).collect();
    let mut next = strands + 1;
    let mut tuples: Vec<[usize; 4]> = Vec::with_capacity(word.len());
    for &(i, positive) in &word {
        let (p, q) = (i - 1, i);
        let (bl, br) = (current[p], current[q]);
        let (tl, tr) = (next, next + 1);
        next += 2;
        // Strand bl -> tr and br -> tl; the positive crossing has bl -> tr over.
        tuples.push(if positive {
            [br, tr, tl, bl]
        } else {
            [bl, br, tr, tl]
        });
        current[p] = tl;
        current[q] = tr;
    }
    // Close up: the top label at each position is identified with the bottom.
    let mut alias: Vec<usize> = (0..next).collect();
    for (p, &top) in current.iter().enumerate() {
        if top == p + 1 {
            return Err(NotationError::FreeStrand(p + 1));
        }
        alias[top] = p + 1;
    }
    // Relabel to 1..=2n in order of first appearance.
    let mut fresh = vec![0usize; next];
    let mut count = 0;
    let tuples: Vec<Vec<usize>> = tuples
        .into_iter()
        .map(|t| {
            t.iter()
                .map(|&l| {
                    let l = alias[l];
                    if fresh[l] == 0 {
                        count += 1;
                        fresh[l] = count;
                    }
                    fresh[l]
                })
                .collect()
        })
        .collect();
    Ok(LinkDiagram::from_raw(&RawDiagram::new(tuples))?)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trefoil_closure() {
        let d = parse_braid("s1 s1 s1").unwrap();
        assert_eq!(d.crossing_count(), 3);
        assert_eq!(d.link_components(), 1);
        assert!(d.crossings().iter().all(|c| c.sign() == 1));
    }

    #[test]
    fn hopf_closure() {
        let d = parse_braid("s1 s1").unwrap();
        assert_eq!((d.crossing_count(), d.link_components()), (2, 2));
    }

    #[test]
    fn trivial_braid_closure_parses() {
        let d = parse_braid("s1 S1").unwrap();
        assert_eq!(d.crossing_count(), 2);
        assert_eq!(d.link_components(), 2);
        assert!(d.is_reduced().0);
        assert!(!d.is_alternating());
    }

    #[test]
    fn errors() {
        assert_eq!(parse_braid("  # nothing"), Err(NotationError::EmptyInput));
        assert!(matches!(
            parse_braid("s0"),
            Err(NotationError::GeneratorOutOfRange { index: 0, .. })
        ));
        assert_eq!(parse_braid("s2 s2"), Err(NotationError::FreeStrand(1)));
        assert!(matches!(
            parse_braid("s1 x2"),
            Err(NotationError::Syntax { offset: 3, .. })
        ));
    }

    #[test]
    fn disjoint_generators_give_pieces() {
        let d = parse_braid("s1 s1 s1 s3 s3 s3").unwrap();
        assert_eq!(d.pieces(), 2);
        assert!(!d.validate().ok);
    }
}
