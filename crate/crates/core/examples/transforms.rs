//! The four elementary transforms on a 2-DoF beam, checked against the
//! congruence with their matrix representatives.

use symplectica::dirac::{BeamMatrix4, ElementaryTransform};
use symplectica::pipeline::Transform;
use symplectica::vec3::dot;

fn main() -> symplectica::Result<()> {
    let s = BeamMatrix4::new(4.4, [-1.5, -1.5, 1.7], [-1.6, 0.7, -1.6], [0.9, -0.9, -2.6]);
    let e = [0.6, 0.0, 0.8];
    let transforms = [
        ElementaryTransform::zeta(e, 0.4)?,
        ElementaryTransform::gamma(-0.3),
        ElementaryTransform::beta2(e, 0.2)?,
        ElementaryTransform::beta3(e, -0.25)?,
    ];
    for t in &transforms {
        let out = t.apply(&s);
        let conj = BeamMatrix4::from_matrix(&t.representative().congruence(&s.representative()))?;
        println!("{}", t.kind());
        println!("  Σ⁰₀ {:.4} -> {:.4}", s.sigma00, out.sigma00);
        for m in 1..=3 {
            println!("  Σ⃗{m} {:>7.4?} -> {:>7.4?}", s.vector(m), out.vector(m));
        }
        println!(
            "  Σ⃗²·Σ⃗³ {:.4} -> {:.4}",
            dot(s.v2, s.v3),
            dot(out.v2, out.v3)
        );
        println!("  closed form vs RΣRᵀ: {:.1e}", out.max_diff(&conj));
    }
    Ok(())
}
