#![allow(dead_code)]

pub mod numeric;
pub mod oracles;

use std::collections::BTreeSet;
use std::path::PathBuf;

use twistbound::diagram::LinkDiagram;
use twistbound::harness::{ingest_census, Census};
use twistbound::notation::parse_dt;
use twistbound::rewrite::{augment_region, CrossingCircleSite};
use twistbound::twist::twist_regions;

pub fn census_path() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/census.csv")
}

pub fn census() -> Census {
    ingest_census(census_path()).expect("shipped census is readable")
}

/// Unreduced diagrams with the crossing count expected once every nugatory
/// crossing is gone.
pub const NUGATORY_FIXTURES: [(&str, &str, usize, usize); 3] = [
    ("kinked trefoil", "X[1,4,2,5] X[3,6,4,1] X[7,2,6,3] X[5,8,8,7]", 4, 3),
    (
        "granny through a clasp",
        "X[1,4,2,5] X[3,16,4,1] X[5,2,6,3] X[6,16,7,15] X[14,8,15,7] X[9,12,10,13] X[11,8,12,9] X[13,10,14,11]",
        8,
        6,
    ),
    (
        "granny through one crossing",
        "X[1,4,2,5] X[3,14,4,1] X[5,2,6,3] X[6,14,7,13] X[8,11,9,12] X[10,7,11,8] X[12,9,13,10]",
        7,
        6,
    ),
];

pub const GRANNY_PD: &str =
    "X[1,4,2,5] X[3,12,4,1] X[5,2,6,3] X[7,10,8,11] X[9,6,10,7] X[11,8,12,9]";
pub const GRANNY_SWAPPED_PD: &str =
    "X[1,4,2,5] X[3,12,4,1] X[5,2,6,3] X[10,7,11,8] X[8,11,9,12] X[6,9,7,10]";

/// Three crossing-circle sites on 6_2, one around each of its twist regions
/// (lengths 1, 2 and 3).
pub fn toggle_sites() -> Vec<(LinkDiagram, CrossingCircleSite)> {
    let k = parse_dt("4 8 10 12 2 6").unwrap();
    twist_regions(&k)
        .unwrap()
        .iter()
        .map(|r| augment_region(&k, r).unwrap())
        .collect()
}

/// Bigons found by brute force over pairs of crossings: edges `e`, `f`
/// joining `c` and `c'` bound a bigon when they sit in consecutive slots
/// `(e, f)` counterclockwise at `c` and `(f, e)` at `c'`.
pub fn brute_force_bigons(d: &LinkDiagram) -> BTreeSet<(usize, usize)> {
    let cs = d.crossings();
    let mut out = BTreeSet::new();
    for i in 0..cs.len() {
        for j in 0..cs.len() {
            if i == j {
                continue;
            }
            for s in 0..4 {
                let (e, f) = (cs[i].slots[s], cs[i].slots[(s + 1) % 4]);
                if e == f {
                    continue;
                }
                for t in 0..4 {
                    if cs[j].slots[t] == f && cs[j].slots[(t + 1) % 4] == e {
                        out.insert((e.min(f), e.max(f)));
                    }
                }
            }
        }
    }
    out
}
