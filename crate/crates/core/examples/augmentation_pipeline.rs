//! K -> N -> L: encircle every twist region of four or more crossings, then
//! delete the encircled twists.

use twistbound::notation::{emit_pd, parse_dt};
use twistbound::rewrite::fully_augmented;
use twistbound::twist::{twist_regions, twist_vector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    for (name, code) in [
        ("6_1", "4 8 12 10 2 6"),
        ("7_2", "4 10 14 12 2 8 6"),
        ("7_3", "6 10 12 14 2 4 8"),
    ] {
        let k = parse_dt(code)?;
        let p = fully_augmented(&k)?;
        println!("{name}");
        for (label, d) in [("K", &p.original), ("N", &p.augmented), ("L", &p.untwisted)] {
            let tv = twist_vector(&twist_regions(d)?);
            println!(
                "  {label}: {:>2} crossings, {} component(s), g4 = {}, valid = {}",
                d.crossing_count(),
                d.link_components(),
                tv.g(4),
                d.validate().ok
            );
        }
        for site in &p.sites {
            println!(
                "  circle through crossings {:?} around {:?}",
                site.circle_crossings,
                site.enclosed_region.as_ref().map(|r| &r.crossing_ids)
            );
        }
        println!("  removed lengths {:?}", p.augmented_lengths());
        println!("  volume chain {:?}", p.volume_chain);
        println!("  L = {}", emit_pd(&p.untwisted));
    }
    Ok(())
}
