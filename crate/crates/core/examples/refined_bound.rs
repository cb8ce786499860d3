//! The refined volume bound next to the classical 10(t - 1) v3 bound.

use twistbound::bounds::{
    a_constant, bound_report, lackenby_bound, lobachevsky, refined_bound, v3,
};
use twistbound::notation::parse;
use twistbound::twist::TwistVector;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let v = v3();
    println!(
        "v3 = {v:.16}  (= 3 Lobachevsky(pi/3) = {:.16})",
        3.0 * lobachevsky(std::f64::consts::FRAC_PI_3)
    );

    println!(
        "\n{:<26} {:>3} {:>8} {:>8} {:>10}",
        "twist vector", "a", "refined", "classic", "saving"
    );
    let vectors = [
        TwistVector::with_counts(0, 2, 0, &[]),
        TwistVector::with_counts(0, 0, 1, &[]),
        TwistVector::with_counts(3, 2, 1, &[]),
        TwistVector::with_counts(0, 1, 0, &[4]),
        TwistVector::with_counts(0, 0, 0, &[5, 6, 9]),
        TwistVector::with_counts(10, 0, 0, &[]),
    ];
    for tv in &vectors {
        let r = refined_bound(tv);
        let l = lackenby_bound(tv);
        println!(
            "{:<26} {:>3} {:>8} {:>8} {:>10}",
            format!("{:?}", tv.counts()),
            a_constant(tv),
            r.units,
            l.units,
            l.units as i64 - r.units as i64
        );
    }

    println!();
    for (name, text) in [
        ("figure-eight", "4 6 8 2"),
        ("trefoil", "4 6 2"),
        (
            "Whitehead",
            "X[6,1,7,2] X[10,7,5,8] X[4,5,1,6] X[2,10,3,9] X[8,4,9,3]",
        ),
        ("Borromean", "s1 S2 s1 S2 s1 S2"),
    ] {
        let report = bound_report(&parse(None, text)?)?;
        println!(
            "{name:<13} a={:>2} refined {:>3} v3 = {:>9.6}   classical {:>3} v3 = {:>9.6}",
            report.a_used,
            report.refined_units,
            report.refined_volume,
            report.lackenby_units,
            report.lackenby_volume
        );
    }

    // Diagrams with nugatory crossings are refused until reduced.
    let kinked = parse(None, "X[1,4,2,5] X[3,6,4,1] X[7,2,6,3] X[5,8,8,7]")?;
    if let Err(e) = bound_report(&kinked) {
        println!("\nkinked trefoil: {e}");
    }
    Ok(())
}
