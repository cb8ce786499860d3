//! Adding or removing a half twist next to a crossing circle.

use twistbound::notation::parse_dt;
use twistbound::rewrite::{augment_region, half_twist_toggle, half_twist_toggle_tracked};
use twistbound::twist::twist_regions;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    // 6_2 has regions of lengths 3, 2 and 1; encircle each in turn.
    let k = parse_dt("4 8 10 12 2 6")?;
    for region in twist_regions(&k)? {
        let (n, site) = augment_region(&k, &region)?;
        let (plus, plus_site) = half_twist_toggle_tracked(&n, &site, true)?;
        let back = half_twist_toggle(&plus, &plus_site, false)?;
        println!(
            "region {:?}: N has {} crossings; +1/2 twist -> {}; undo -> {} (same diagram: {})",
            region.crossing_ids,
            n.crossing_count(),
            plus.crossing_count(),
            back.crossing_count(),
            back.structurally_eq(&n)
        );
        match half_twist_toggle(&n, &site, false) {
            Ok(minus) => println!("  -1/2 twist -> {} crossings", minus.crossing_count()),
            Err(e) => println!("  -1/2 twist refused: {e}"),
        }
    }
    Ok(())
}
