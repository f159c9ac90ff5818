//! Diagonalization with both strategies, the normal form, and its
//! invariance group.

use symplectica::dirac::{diagonalize4, invariance4, normalize4, BeamMatrix4, DiagonalizeStrategy};

fn main() -> symplectica::Result<()> {
    let s = BeamMatrix4::new(4.4, [-1.5, -1.5, 1.7], [-1.6, 0.7, -1.6], [0.9, -0.9, -2.6]);
    for strategy in [DiagonalizeStrategy::BlockFirst, DiagonalizeStrategy::Direct] {
        let (pipe, out) = diagonalize4(&s, strategy)?;
        println!(
            "{strategy:?}: {} steps, diag {:.4?}",
            pipe.len(),
            out.representative().diag()
        );
    }

    let (pipe, n) = normalize4(&s)?;
    println!("\nnormal form: Σ⁰₀ = {:.4}, Σ⃗¹ = {:.4?}", n.sigma00, n.v1);
    println!("diag {:.4?}", n.representative().diag());

    let normalizer = pipe.normalizer();
    let m = s.representative();
    for (psi, phi) in [(0.3, -1.2), (2.0, 0.7)] {
        let i = invariance4(&normalizer, psi, phi);
        println!(
            "I({psi}, {phi}): |IΣIᵀ − Σ| = {:.1e}",
            (i.congruence(&m) - m).max_abs()
        );
    }
    Ok(())
}
