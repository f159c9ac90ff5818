//! Decoupling each of the three pairings of a 2-DoF beam.

use symplectica::dirac::{decouple_pair, emittances4, BeamMatrix4, Pairing};

fn show(b: &BeamMatrix4) {
    for row in b.representative().to_rows() {
        println!("    {row:>8.4?}");
    }
}

fn main() -> symplectica::Result<()> {
    let s = BeamMatrix4::new(4.4, [-1.5, -1.5, 1.7], [-1.6, 0.7, -1.6], [0.9, -0.9, -2.6]);
    println!("emittances {:.4?}", emittances4(&s)?);
    for p in Pairing::ALL {
        let (pipe, out) = decouple_pair(&s, p)?;
        println!("\n{}:", p.name());
        for t in pipe.steps() {
            println!("  {:<12} angle {:+.4}", t.kind(), t.angle().unwrap_or(0.0));
        }
        show(&out);
        println!("  zeroed entries: {:?}", p.zero_pattern());
        println!("  emittances {:.4?}", emittances4(&out)?);
        println!(
            "  |M − ΠRᵢ| = {:.1e}",
            (pipe.map() - pipe.recomputed_map()).max_abs()
        );
    }
    Ok(())
}
