//! Normalizing a random 6×6 bunch matrix through the eigenvectors of Σγ.

use symplectica::bunch::{emittances6, invariance6, normalize6};
use symplectica::random::random_physical_seeded;

fn main() -> symplectica::Result<()> {
    let s = random_physical_seeded::<6>(42);
    println!("emittances {:.6?}", emittances6(&s)?);

    let d = normalize6(&s)?;
    println!("normal form diag {:.6?}", d.normal_form.diag());
    println!("|NγNᵀ − γ| = {:.1e}", d.symplectic_residual());
    println!("|NΣ̃Nᵀ − Σ| = {:.1e}", d.reconstruction_residual(&s));
    println!("dropped imaginary part {:.1e}", d.imag_residue);

    let i = invariance6(&d.n, [0.4, -1.0, 2.2]);
    println!("|IΣIᵀ − Σ| = {:.1e}", (i.congruence(&s) - s).max_abs());
    Ok(())
}
