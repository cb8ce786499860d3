mod common;

use proptest::prelude::*;

use common::census;
use twistbound::bounds::{a_constant, lackenby_bound, refined_bound};
use twistbound::diagram::LinkDiagram;
use twistbound::notation::parse_braid;
use twistbound::twist::{twist_regions, twist_vector, TwistVector};

fn vector() -> impl Strategy<Value = TwistVector> {
    (
        0..15usize,
        0..15usize,
        0..15usize,
        prop::collection::vec(4..40usize, 0..6),
    )
        .prop_map(|(t1, t2, t3, long)| TwistVector::with_counts(t1, t2, t3, &long))
}

fn rule(tv: &TwistVector) -> u32 {
    if tv.g(4) > 0 {
        10
    } else if tv.t3() > 0 {
        7
    } else {
        6
    }
}

fn units(tv: &TwistVector) -> i64 {
    10 * tv.g(4) as i64 + 8 * tv.t3() as i64 + 6 * tv.t2() as i64 + 4 * tv.t1() as i64
}

proptest! {
    #[test]
    fn refined_units_follow_the_formula(tv in vector()) {
        let r = refined_bound(&tv);
        prop_assert_eq!(r.a_used, rule(&tv));
        prop_assert_eq!(a_constant(&tv), rule(&tv));
        let raw = units(&tv) - rule(&tv) as i64;
        prop_assert_eq!(r.units as i64, raw.max(0));
        prop_assert_eq!(r.clamped, raw < 0);
    }

    #[test]
    fn adding_a_region_never_lowers_the_bound(tv in vector(), len in 1..40usize) {
        let mut counts = tv.counts().clone();
        *counts.entry(len).or_insert(0) += 1;
        let bigger = TwistVector::from_lengths(counts.iter().flat_map(|(&l, &c)| std::iter::repeat_n(l, c)));
        prop_assert!(refined_bound(&bigger).units >= refined_bound(&tv).units);
        prop_assert!(lackenby_bound(&bigger).units >= lackenby_bound(&tv).units);
    }

    #[test]
    fn long_region_lengths_do_not_matter(t in (0..10usize, 0..10usize, 0..10usize),
                                         a in prop::collection::vec(4..100usize, 1..6),
                                         shift in 0..50usize) {
        let b: Vec<usize> = a.iter().map(|l| l + shift).collect();
        let (x, y) = (TwistVector::with_counts(t.0, t.1, t.2, &a), TwistVector::with_counts(t.0, t.1, t.2, &b));
        prop_assert_eq!(refined_bound(&x), refined_bound(&y));
        prop_assert_eq!(lackenby_bound(&x), lackenby_bound(&y));
    }

    #[test]
    fn only_long_regions_means_agreement(long in prop::collection::vec(4..100usize, 1..20)) {
        let tv = TwistVector::with_counts(0, 0, 0, &long);
        prop_assert_eq!(refined_bound(&tv).units, lackenby_bound(&tv).units);
    }

    #[test]
    fn regions_partition_braid_closures(first in any::<(bool, bool)>(),
                                        word in prop::collection::vec((0..3usize, any::<bool>()), 0..14)) {
        // every strand must meet a crossing, so s1 and s2 always occur
        let has_s3 = word.iter().any(|&(i, _)| i == 2);
        let text: Vec<String> = [(0, first.0), (1, first.1)]
            .iter()
            .chain(&word)
            .chain(if has_s3 { None } else { Some(&(2, true)) })
            .map(|&(i, pos)| format!("{}{}", if pos { 's' } else { 'S' }, i + 1))
            .collect();
        let d = parse_braid(&text.join(" ")).unwrap();
        if let Ok(regions) = twist_regions(&d) {
            let mut seen: Vec<usize> = regions.iter().flat_map(|r| r.crossing_ids.clone()).collect();
            seen.sort_unstable();
            prop_assert_eq!(seen, (0..d.crossing_count()).collect::<Vec<_>>());
            prop_assert_eq!(twist_vector(&regions).crossings(), d.crossing_count());
        }
    }

    #[test]
    fn relabelling_changes_nothing(pick in any::<prop::sample::Index>(),
                                   labels in any::<u64>(),
                                   order in any::<u64>()) {
        use rand::{seq::SliceRandom, SeedableRng};
        let entries = census().entries;
        let d = &entries[pick.index(entries.len())].diagram;
        let mut perm: Vec<usize> = (1..=2 * d.crossing_count()).collect();
        perm.shuffle(&mut rand::rngs::StdRng::seed_from_u64(labels));
        let mut tuples: Vec<[usize; 4]> = d.pd_tuples().iter().map(|t| t.map(|e| perm[e - 1])).collect();
        tuples.shuffle(&mut rand::rngs::StdRng::seed_from_u64(order));
        let e = LinkDiagram::from_pd(&tuples).unwrap();
        prop_assert_eq!(e.canonical_form(), d.canonical_form());
        let (a, b) = (twist_regions(d), twist_regions(&e));
        prop_assert_eq!(a.is_ok(), b.is_ok());
        if let (Ok(a), Ok(b)) = (a, b) {
            prop_assert_eq!(twist_vector(&a), twist_vector(&b));
        }
    }
}

#[test]
fn census_regions_partition_crossings() {
    for e in census().entries {
        let regions = twist_regions(&e.diagram).unwrap();
        let mut seen: Vec<usize> = regions
            .iter()
            .flat_map(|r| r.crossing_ids.clone())
            .collect();
        seen.sort_unstable();
        assert_eq!(
            seen,
            (0..e.diagram.crossing_count()).collect::<Vec<_>>(),
            "{}",
            e.name
        );
    }
}
