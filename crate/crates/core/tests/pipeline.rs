mod common;

use std::process::Command;

use common::{census, census_path, toggle_sites, GRANNY_PD, GRANNY_SWAPPED_PD, NUGATORY_FIXTURES};
use twistbound::notation::{emit_pd, parse_pd};
use twistbound::rewrite::{
    fully_augmented, half_twist_toggle, half_twist_toggle_tracked, resolve_nugatory, VolumeRelation,
};
use twistbound::twist::{twist_regions, twist_vector};

#[test]
fn pipeline_arithmetic_on_census() {
    let mut checked = 0;
    for e in census().entries {
        let k = &e.diagram;
        let Ok(regions) = twist_regions(k) else {
            continue;
        };
        if twist_vector(&regions).g(4) == 0 {
            continue;
        }
        checked += 1;
        let p = fully_augmented(k).unwrap();
        let sites = p.sites.len();
        let removed: usize = p.augmented_lengths().iter().sum();
        assert_eq!(
            p.augmented.crossing_count(),
            p.original.crossing_count() + 4 * sites,
            "{}",
            e.name
        );
        assert_eq!(
            p.untwisted.crossing_count(),
            p.augmented.crossing_count() - removed,
            "{}",
            e.name
        );
        assert_eq!(
            p.untwisted.link_components(),
            p.original.link_components() + sites,
            "{}",
            e.name
        );
        assert_eq!(
            twist_vector(&twist_regions(&p.untwisted).unwrap()).g(4),
            0,
            "{}",
            e.name
        );
        for d in [&p.original, &p.augmented, &p.untwisted] {
            assert!(d.validate().ok, "{}", e.name);
        }
        assert_eq!(p.volume_chain.original_to_augmented, VolumeRelation::AtMost);
        assert_eq!(p.volume_chain.augmented_to_untwisted, VolumeRelation::Equal);
    }
    assert!(checked >= 4);
}

#[test]
fn pipeline_without_long_regions_is_identity() {
    let d = parse_pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]").unwrap();
    let p = fully_augmented(&d).unwrap();
    assert!(p.sites.is_empty());
    assert!(p.untwisted.structurally_eq(&d));
}

#[test]
fn toggle_round_trips() {
    let sites = toggle_sites();
    assert_eq!(sites.len(), 3);
    for (n, site) in sites {
        let (plus, s) = half_twist_toggle_tracked(&n, &site, true).unwrap();
        assert_eq!(plus.crossing_count(), n.crossing_count() + 1);
        assert!(plus.validate().ok);
        let back = half_twist_toggle(&plus, &s, false).unwrap();
        assert_eq!(back.canonical_form(), n.canonical_form());
    }
}

#[test]
fn nugatory_fixtures_reach_reduced_fixed_points() {
    for (name, pd, before, after) in NUGATORY_FIXTURES {
        let d = parse_pd(pd).unwrap();
        assert_eq!(d.crossing_count(), before, "{name}");
        assert!(!d.is_reduced().0, "{name}");
        let (r, _) = resolve_nugatory(&d).unwrap();
        assert_eq!(r.crossing_count(), after, "{name}");
        assert!(r.is_reduced().0, "{name}");
        let (again, k) = resolve_nugatory(&r).unwrap();
        assert_eq!(k, 0, "{name}");
        assert!(again.structurally_eq(&r), "{name}");
    }
}

#[test]
fn nugatory_resolution_keeps_the_knot_type() {
    // Deleting an odd number of crossings turns one side over in space; the
    // two trefoils must stay of the same handedness.
    let (_, clasp, ..) = NUGATORY_FIXTURES[1];
    let (_, single, ..) = NUGATORY_FIXTURES[2];
    let (r, _) = resolve_nugatory(&parse_pd(clasp).unwrap()).unwrap();
    assert!(r.structurally_eq(&parse_pd(GRANNY_PD).unwrap()));
    let (r, _) = resolve_nugatory(&parse_pd(single).unwrap()).unwrap();
    assert!(r.structurally_eq(&parse_pd(GRANNY_SWAPPED_PD).unwrap()));
    assert!(r
        .crossings()
        .iter()
        .all(|c| c.sign() == r.crossings()[0].sign()));
}

fn cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_twistbound"))
        .args(args)
        .output()
        .unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
    )
}

#[test]
fn cli_exit_codes() {
    let (code, out) = cli(&["analyze", "--format", "dt", "4 6 8 2"]);
    assert_eq!(code, 0);
    assert!(out.contains("t1=0 t2=2 t3=0 g4=0 t=2"), "{out}");

    let (code, out) = cli(&["analyze", "--json", "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["refined_units"], 1);

    assert_eq!(cli(&["analyze", "--format", "dt", "4 6 3"]).0, 1);
    assert_eq!(cli(&["validate", "X[1,2,3,4] X[1,5,3,6]"]).0, 1);
    assert_eq!(cli(&["validate", "X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"]).0, 0);
    assert_eq!(cli(&["census", "/nonexistent/census.csv"]).0, 2);
    assert_eq!(cli(&["no-such-command"]).0, 2);
}

#[test]
fn cli_augment_prints_parsable_codes() {
    let (code, out) = cli(&["augment", "--format", "dt", "4 8 12 10 2 6"]);
    assert_eq!(code, 0);
    let n = out.lines().find_map(|l| l.strip_prefix("N ")).unwrap();
    let l = out.lines().find_map(|l| l.strip_prefix("L ")).unwrap();
    assert_eq!(parse_pd(n).unwrap().crossing_count(), 10);
    let l = parse_pd(l).unwrap();
    assert_eq!((l.crossing_count(), l.link_components()), (6, 2));
    assert!(parse_pd(&emit_pd(&l)).unwrap().structurally_eq(&l));
}

#[test]
fn cli_census_writes_reports() {
    let dir = tempfile::tempdir().unwrap();
    let (json, csv) = (dir.path().join("r.json"), dir.path().join("r.csv"));
    let (code, _) = cli(&[
        "census",
        census_path().to_str().unwrap(),
        "--json",
        json.to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(code, 0);
    let report: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(json).unwrap()).unwrap();
    assert_eq!(report["stats"]["violations"], 0);
    let table = std::fs::read_to_string(csv).unwrap();
    assert_eq!(table.lines().count(), census().entries.len() + 1);
}
