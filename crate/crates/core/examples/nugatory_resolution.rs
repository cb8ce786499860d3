//! Removing nugatory crossings until the diagram is reduced.

use twistbound::notation::parse_pd;
use twistbound::rewrite::resolve_nugatory;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let cases = [
        ("trefoil with a kink", "X[1,4,2,5] X[3,6,4,1] X[7,2,6,3] X[5,8,8,7]"),
        (
            "granny joined through a clasp",
            "X[1,4,2,5] X[3,16,4,1] X[5,2,6,3] X[6,16,7,15] X[14,8,15,7] X[9,12,10,13] X[11,8,12,9] X[13,10,14,11]",
        ),
        (
            "granny joined through one crossing",
            "X[1,4,2,5] X[3,14,4,1] X[5,2,6,3] X[6,14,7,13] X[8,11,9,12] X[10,7,11,8] X[12,9,13,10]",
        ),
        ("lone kink", "X[1,2,2,1]"),
    ];
    for (name, pd) in cases {
        let d = parse_pd(pd)?;
        print!(
            "{name}: {} crossings, nugatory {:?}",
            d.crossing_count(),
            d.nugatory_crossings()
        );
        match resolve_nugatory(&d) {
            Ok((r, k)) => println!(
                " -> {} crossings after {k} resolution(s), reduced = {}",
                r.crossing_count(),
                r.is_reduced().0
            ),
            Err(e) => println!(" -> {e}"),
        }
    }
    Ok(())
}
