//! Decoupling one coordinate from the other three.

use symplectica::dirac::{decouple_single, BeamMatrix4, Coordinate};

fn main() -> symplectica::Result<()> {
    let s = BeamMatrix4::new(4.4, [-1.5, -1.5, 1.7], [-1.6, 0.7, -1.6], [0.9, -0.9, -2.6]);
    for c in Coordinate::ALL {
        let (pipe, out) = decouple_single(&s, c)?;
        println!("{c:?} ({} steps):", pipe.len());
        for row in out.representative().to_rows() {
            println!("  {row:>8.4?}");
        }
    }
    Ok(())
}
