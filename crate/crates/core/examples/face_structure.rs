//! Faces, corners, nugatory crossings and validation.

use twistbound::diagram::{validate, RawDiagram};
use twistbound::notation::{parse_pd, parse_pd_raw};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let d = parse_pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]")?;
    let faces = d.faces();
    println!(
        "figure-eight: {} crossings, {} faces (expected n + 2 = {})",
        d.crossing_count(),
        faces.len(),
        d.crossing_count() + 2
    );
    for (i, f) in faces.iter().enumerate() {
        let edges: Vec<_> = f.corners.iter().map(|c| c.edge).collect();
        println!("  face {i}: degree {}, edges {edges:?}", f.degree());
    }
    for (c, fs) in d.corner_faces().iter().enumerate() {
        println!("  crossing {c}: corner faces {fs:?}");
    }

    // A trefoil with an extra kink; the kink touches one face twice.
    let kinked = parse_pd("X[1,4,2,5] X[3,6,4,1] X[7,2,6,3] X[5,8,8,7]")?;
    let (reduced, nugatory) = kinked.is_reduced();
    println!("kinked trefoil: reduced = {reduced}, nugatory crossings {nugatory:?}");

    // Validation lists every problem rather than stopping at the first.
    let raw = parse_pd_raw("X[1,2,3,4] X[1,5,3,6]")?;
    let report = validate(&raw);
    println!("broken PD ok = {}", report.ok);
    for issue in &report.issues {
        println!("  {issue:?}");
    }
    let report = validate(&RawDiagram::new(vec![vec![1, 2, 2, 1]]));
    println!(
        "single kink ok = {} ({} issue(s))",
        report.ok,
        report.issues.len()
    );
    Ok(())
}
