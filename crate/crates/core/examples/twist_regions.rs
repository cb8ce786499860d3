//! Twist regions and twist vectors for a few small knots.

use twistbound::notation::parse_dt;
use twistbound::twist::{bigons, twist_regions, twist_vector};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let knots = [
        ("3_1", "4 6 2"),
        ("4_1", "4 6 8 2"),
        ("5_1", "6 8 10 2 4"),
        ("6_1", "4 8 12 10 2 6"),
        ("6_2", "4 8 10 12 2 6"),
        ("7_3", "6 10 12 14 2 4 8"),
        ("8_1", "4 10 16 14 12 2 8 6"),
    ];
    for (name, code) in knots {
        let d = parse_dt(code)?;
        let regions = twist_regions(&d)?;
        let tv = twist_vector(&regions);
        println!(
            "{name}: {} bigons; regions {}",
            bigons(&d).len(),
            regions
                .iter()
                .map(|r| format!(
                    "{:?}{}",
                    r.crossing_ids,
                    if r.cyclic { " (cyclic)" } else { "" }
                ))
                .collect::<Vec<_>>()
                .join(" ")
        );
        println!(
            "     t1={} t2={} t3={} g4={} t={}  counts {:?}",
            tv.t1(),
            tv.t2(),
            tv.t3(),
            tv.g(4),
            tv.t(),
            tv.counts()
        );
    }
    Ok(())
}
