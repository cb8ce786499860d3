//! One knot, three notations. The parsed diagrams agree up to relabelling.

use twistbound::notation::{emit_pd, parse, parse_braid, parse_dt, parse_pd, NotationFormat};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let pd = parse_pd("X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]")?;
    let dt = parse_dt("4 6 8 2")?;
    let braid = parse_braid("s1 S2 s1 S2")?;

    for (name, d) in [("PD", &pd), ("DT", &dt), ("braid", &braid)] {
        println!(
            "{name:>5}: {} crossings, {} component(s), alternating = {}",
            d.crossing_count(),
            d.link_components(),
            d.is_alternating()
        );
    }
    println!("PD == DT structurally:    {}", pd.structurally_eq(&dt));
    println!("PD == braid structurally: {}", pd.structurally_eq(&braid));

    // Emitted PD uses consecutive edge labels along each component.
    let emitted = emit_pd(&dt);
    println!("DT re-emitted as PD: {emitted}");
    println!(
        "round trip equal:    {}",
        parse_pd(&emitted)?.structurally_eq(&dt)
    );

    // Without an explicit format the notation is guessed from its shape.
    for text in ["X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]", "4 6 2", "s1 s1 s1"] {
        let format = NotationFormat::infer(text);
        let d = parse(None, text)?;
        println!("{text:<36} -> {format:?}, {} crossings", d.crossing_count());
    }

    // Parse errors say what went wrong.
    for bad in ["X[1,2,3]", "4 6 3", "s1 t2"] {
        match parse(None, bad) {
            Ok(_) => println!("{bad}: unexpectedly parsed"),
            Err(e) => println!("{bad}: {e}"),
        }
    }
    Ok(())
}
