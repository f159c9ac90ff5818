//! Closed-form determinant, inverse and emittances of a 4×4 beam matrix.

use symplectica::dirac::{det_sym4, emittances4, inv_sym4, skew_of_sigma, BeamMatrix4};
use symplectica::smallmat::{det_oracle, Mat4};

fn main() -> symplectica::Result<()> {
    let s = BeamMatrix4::new(4.4, [-1.5, -1.5, 1.7], [-1.6, 0.7, -1.6], [0.9, -0.9, -2.6]);
    let m = s.representative();
    println!("Σ = {m:?}");

    let a = skew_of_sigma(&s);
    println!(
        "A = Σγ¹Σ: (A¹₀, A²₀, A³₀) = ({:.3}, {:.3}, {:.3}), A⃗⁰ = {:.3?}",
        a.a10, a.a20, a.a30, a.avec0
    );
    println!("det Σ = {:.6} (LU: {:.6})", det_sym4(&s), det_oracle(&m));

    let inv = inv_sym4(&s)?;
    println!(
        "max |Σ Σ⁻¹ − I| = {:.1e}",
        (m * inv - Mat4::identity()).max_abs()
    );

    let (e1, e2) = emittances4(&s)?;
    println!("emittances: {e1:.4}, {e2:.4}");
    Ok(())
}
