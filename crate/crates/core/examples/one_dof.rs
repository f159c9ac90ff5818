//! One degree of freedom: both normalization strategies and the invariance
//! group of the result.

use symplectica::pauli::{emittance2, invariance2, normalize2, BeamMatrix2, Normalize2Strategy};

fn main() -> symplectica::Result<()> {
    let s = BeamMatrix2::new(3.0, 1.2, -0.8);
    println!("Σ = {:?}, ε = {:.6}", s.representative(), emittance2(&s)?);

    for strategy in [Normalize2Strategy::TwoStep, Normalize2Strategy::Direct] {
        let (pipe, out) = normalize2(&s, strategy)?;
        println!("\n{strategy:?}:");
        for t in pipe.steps() {
            println!("  {t:?}");
        }
        println!(
            "  -> Σ₀ = {:.6}, Σ⃗ = ({:.1e}, {:.1e})",
            out.sigma0, out.sigma[0], out.sigma[1]
        );
        println!("  symplectic residual {:.1e}", pipe.symplectic_residual());

        let n = pipe.normalizer();
        let i = invariance2(&n, 0.9);
        let m = s.representative();
        println!("  |IΣIᵀ − Σ| = {:.1e}", (i.congruence(&m) - m).max_abs());
    }
    Ok(())
}
