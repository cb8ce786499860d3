//! Bigons, twist regions and twist statistics.
//!
//! Two crossings are chained when a bigon touches both. A chain continues
//! through a crossing only across opposite corners; bigons on adjacent
//! corners of one crossing are reported as a degeneracy.

use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

use crate::diagram::{Face, LinkDiagram};
use crate::error::TwistError;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct TwistRegion {
    /// Crossings in order along the chain of bigons.
    pub crossing_ids: Vec<usize>,
    /// The chain closes on itself, as in a standard (2, q) torus diagram.
    pub cyclic: bool,
}

impl TwistRegion {
    pub fn length(&self) -> usize {
        self.crossing_ids.len()
    }

    pub fn ends(&self) -> (usize, usize) {
        (
            self.crossing_ids[0],
            *self.crossing_ids.last().expect("regions are non-empty"),
        )
    }
}

pub fn bigons(diagram: &LinkDiagram) -> Vec<Face> {
    diagram
        .faces()
        .into_iter()
        .filter(|f| f.degree() == 2)
        .collect()
}

/// For each crossing and corner, the crossing and corner across a bigon.
pub(crate) type BigonLinks = Vec<[Option<(usize, u8)>; 4]>;

pub(crate) fn bigon_links(diagram: &LinkDiagram) -> Result<BigonLinks, TwistError> {
    let mut links: BigonLinks = vec![[None; 4]; diagram.crossing_count()];
    for face in bigons(diagram) {
        let (a, b) = (face.corners[0], face.corners[1]);
        if a.crossing == b.crossing {
            continue;
        }
        links[a.crossing][a.slot as usize] = Some((b.crossing, b.slot));
        links[b.crossing][b.slot as usize] = Some((a.crossing, a.slot));
    }
    for (c, corners) in links.iter().enumerate() {
        for k in 0..4u8 {
            let next = (k + 1) % 4;
            if corners[k as usize].is_some() && corners[next as usize].is_some() {
                return Err(TwistError::DegenerateBigon {
                    crossing: c,
                    first: k.min(next),
                    second: k.max(next),
                });
            }
        }
    }
    Ok(links)
}

/// Maximal chains of bigon-linked crossings; a crossing on no bigon is a
/// region of length one. Regions are ordered by their smallest crossing id.
pub fn twist_regions(diagram: &LinkDiagram) -> Result<Vec<TwistRegion>, TwistError> {
    let links = bigon_links(diagram)?;
    let n = diagram.crossing_count();
    let mut taken = vec![false; n];
    let mut regions = Vec::new();
    for start in 0..n {
        if taken[start] {
            continue;
        }
        // Find the chain's end (or detect a cycle) by walking one way.
        let mut end = (start, None::<u8>);
        let mut cyclic = false;
        if let Some(k) = (0..4u8).find(|&k| links[start][k as usize].is_some()) {
            // Walk away from start through corner k + 2 until the chain stops.
            let mut cur = start;
            let mut exit = (k + 2) % 4;
            loop {
                match links[cur][exit as usize] {
                    None => {
                        end = (cur, Some(exit));
                        break;
                    }
                    Some((next, corner)) => {
                        if next == start && corner == k {
                            cyclic = true;
                            break;
                        }
                        cur = next;
                        exit = (corner + 2) % 4;
                    }
                }
            }
        }
        let ids = if cyclic {
            walk_cycle(&links, start)
        } else {
            walk_path(&links, end.0, end.1)
        };
        for &c in &ids {
            taken[c] = true;
        }
        regions.push(TwistRegion {
            crossing_ids: ids,
            cyclic,
        });
    }
    for r in regions.iter_mut().filter(|r| !r.cyclic && r.length() > 1) {
        if r.crossing_ids[0] > *r.crossing_ids.last().unwrap() {
            r.crossing_ids.reverse();
        }
    }
    regions.sort_by_key(|r| *r.crossing_ids.iter().min().unwrap());
    Ok(regions)
}

/// `free` is the corner of `end` with no chain bigon, if the region is longer
/// than one crossing.
fn walk_path(links: &BigonLinks, end: usize, free: Option<u8>) -> Vec<usize> {
    let mut ids = vec![end];
    let Some(free) = free else {
        return ids;
    };
    let mut cur = end;
    let mut exit = (free + 2) % 4;
    while let Some((next, corner)) = links[cur][exit as usize] {
        ids.push(next);
        cur = next;
        exit = (corner + 2) % 4;
    }
    ids
}

fn walk_cycle(links: &BigonLinks, start: usize) -> Vec<usize> {
    // Leave start through whichever chain corner reaches the smaller neighbour.
    let mut exits: Vec<(usize, u8)> = (0..4u8)
        .filter_map(|k| links[start][k as usize].map(|(c, _)| (c, k)))
        .collect();
    exits.sort();
    let mut ids = vec![start];
    let mut cur = start;
    let mut exit = exits[0].1;
    loop {
        let (next, corner) = links[cur][exit as usize].expect("cycle is closed");
        if next == start {
            break;
        }
        ids.push(next);
        cur = next;
        exit = (corner + 2) % 4;
    }
    ids
}

/// Counts `t_j` of twist regions with exactly `j` crossings.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct TwistVector {
    counts: BTreeMap<usize, usize>,
}

impl TwistVector {
    pub fn from_lengths(lengths: impl IntoIterator<Item = usize>) -> Self {
        let mut counts = BTreeMap::new();
        for len in lengths {
            *counts.entry(len).or_insert(0) += 1;
        }
        TwistVector { counts }
    }

    /// Shorthand with explicit `t1`, `t2`, `t3` and the lengths of the
    /// regions with four or more crossings.
    pub fn with_counts(t1: usize, t2: usize, t3: usize, long: &[usize]) -> Self {
        let mut counts = BTreeMap::new();
        for (len, k) in [(1, t1), (2, t2), (3, t3)] {
            if k > 0 {
                counts.insert(len, k);
            }
        }
        for &len in long {
            assert!(len >= 4, "long regions have at least four crossings");
            *counts.entry(len).or_insert(0) += 1;
        }
        TwistVector { counts }
    }

    pub fn count(&self, length: usize) -> usize {
        self.counts.get(&length).copied().unwrap_or(0)
    }

    pub fn t(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn t1(&self) -> usize {
        self.count(1)
    }

    pub fn t2(&self) -> usize {
        self.count(2)
    }

    pub fn t3(&self) -> usize {
        self.count(3)
    }

    /// Number of regions with at least `j` crossings.
    pub fn g(&self, j: usize) -> usize {
        self.counts.range(j..).map(|(_, &k)| k).sum()
    }

    pub fn counts(&self) -> &BTreeMap<usize, usize> {
        &self.counts
    }

    pub fn crossings(&self) -> usize {
        self.counts.iter().map(|(len, k)| len * k).sum()
    }
}

impl Serialize for TwistVector {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_map(self.counts.iter().map(|(k, v)| (k.to_string(), v)))
    }
}

pub fn twist_vector(regions: &[TwistRegion]) -> TwistVector {
    TwistVector::from_lengths(regions.iter().map(TwistRegion::length))
}
