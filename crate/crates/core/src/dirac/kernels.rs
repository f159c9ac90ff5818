//! Closed-form determinants, inverses and emittances of 4×4 matrices.
//!
//! Everything goes through the antisymmetric matrix `A = Z γ¹ Zᵀ`, whose
//! component form is just a scalar triple `A^m₀` on the γ-units and a vector
//! `A⃗⁰` on the ζ-units.

use serde::{Deserialize, Serialize};

use super::BeamMatrix4;
use crate::clifford::{dirac_rep, CliffordElement4, DiracUnit};
use crate::error::{Error, Result};
use crate::smallmat::{is_positive_definite, Mat4};
use crate::vec3::{self, Vec3};

/// Antisymmetric 4×4 matrix `ζ_k A⁰_k + γ^m A^m₀`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct SkewA {
    pub a10: f64,
    pub a20: f64,
    pub a30: f64,
    pub avec0: Vec3,
}

impl SkewA {
    pub fn components(&self) -> CliffordElement4 {
        let mut c = [[0.0; 4]; 4];
        c[0][1] = self.a10;
        c[0][2] = self.a20;
        c[0][3] = self.a30;
        for k in 0..3 {
            c[k + 1][0] = self.avec0[k];
        }
        CliffordElement4::from_components(c)
    }

    pub fn representative(&self) -> Mat4 {
        self.components().compose()
    }

    pub fn from_components(z: &CliffordElement4) -> Self {
        SkewA {
            a10: z.c[0][1],
            a20: z.c[0][2],
            a30: z.c[0][3],
            avec0: [z.c[1][0], z.c[2][0], z.c[3][0]],
        }
    }

    /// `Σ(A^m₀)² − Σ(A⁰_k)²`.
    pub fn bracket(&self) -> f64 {
        self.a10 * self.a10 + self.a20 * self.a20 + self.a30 * self.a30
            - vec3::dot(self.avec0, self.avec0)
    }

    fn scale(&self) -> f64 {
        vec3::max_abs(self.avec0)
            .max(self.a10.abs())
            .max(self.a20.abs())
            .max(self.a30.abs())
    }
}

/// `A = Σ γ¹ Σ` from the beam components.
pub fn skew_of_sigma(s: &BeamMatrix4) -> SkewA {
    let (v1, v2, v3) = (s.v1, s.v2, s.v3);
    SkewA {
        a10: s.sigma00 * s.sigma00 + vec3::dot(v1, v1) - vec3::dot(v2, v2) - vec3::dot(v3, v3),
        a20: 2.0 * vec3::dot(v2, v1),
        a30: 2.0 * vec3::dot(v3, v1),
        avec0: vec3::scale(
            vec3::sub(vec3::cross(v2, v3), vec3::scale(v1, s.sigma00)),
            2.0,
        ),
    }
}

/// `A = Z γ¹ Zᵀ` for a general element.
pub fn skew_of_general(z: &CliffordElement4) -> SkewA {
    let c = &z.c;
    let col4 = |m: usize| [c[0][m], c[1][m], c[2][m], c[3][m]];
    let dot4 = |a: [f64; 4], b: [f64; 4]| a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
    let vec = |m: usize| [c[1][m], c[2][m], c[3][m]];
    let (c0, c1, c2, c3) = (col4(0), col4(1), col4(2), col4(3));
    let (z0, z1, z2, z3) = (vec(0), vec(1), vec(2), vec(3));
    let avec = vec3::combo(&[
        (c[0][1], z0),
        (-c[0][0], z1),
        (1.0, vec3::cross(z0, z1)),
        (c[0][3], z2),
        (-c[0][2], z3),
        (1.0, vec3::cross(z2, z3)),
    ]);
    SkewA {
        a10: dot4(c0, c0) + dot4(c1, c1) - dot4(c2, c2) - dot4(c3, c3),
        a20: 2.0 * (dot4(c2, c1) - dot4(c0, c3)),
        a30: 2.0 * (dot4(c0, c2) + dot4(c3, c1)),
        avec0: vec3::scale(avec, 2.0),
    }
}

/// `det A = [Σ(A^m₀)² − Σ(A⁰_k)²]²`.
pub fn det_antisym4(a: &SkewA) -> f64 {
    let b = a.bracket();
    b * b
}

/// `det Σ = (A¹₀)² + (A²₀)² + (A³₀)² − A⃗⁰·A⃗⁰` with `A = Σγ¹Σ`.
pub fn det_sym4(s: &BeamMatrix4) -> f64 {
    skew_of_sigma(s).bracket()
}

pub fn det_general4(z: &CliffordElement4) -> f64 {
    skew_of_general(z).bracket()
}

/// `A⁻¹ = (−γ^m A^m₀ + ζ_k A⁰_k) / [Σ(A^m₀)² − Σ(A⁰_k)²]`.
pub fn inv_antisym4(a: &SkewA) -> Result<Mat4> {
    let den = a.bracket();
    let s = a.scale();
    if den == 0.0 || den.abs() <= 1e-13 * s * s {
        return Err(Error::SingularMatrix(format!(
            "antisymmetric bracket {den:.3e} vanishes"
        )));
    }
    let inv = SkewA {
        a10: -a.a10 / den,
        a20: -a.a20 / den,
        a30: -a.a30 / den,
        avec0: vec3::scale(a.avec0, 1.0 / den),
    };
    Ok(inv.representative())
}

fn gamma1() -> Mat4 {
    dirac_rep(DiracUnit::gamma(1).expect("valid axis"))
}

/// `Σ⁻¹ = γ¹ Σ A⁻¹` with `A = Σγ¹Σ`.
pub fn inv_sym4(s: &BeamMatrix4) -> Result<Mat4> {
    let a_inv = inv_antisym4(&skew_of_sigma(s))?;
    Ok(gamma1() * s.representative() * a_inv)
}

/// `Z⁻¹ = γ¹ Zᵀ A⁻¹` with `A = Zγ¹Zᵀ`.
pub fn inv_general4(z: &CliffordElement4) -> Result<Mat4> {
    let a_inv = inv_antisym4(&skew_of_general(z))?;
    Ok(gamma1() * z.compose().transpose() * a_inv)
}

/// `(ε_I, ε_II)` from `ε² = A¹₀ ± √(A⃗⁰·A⃗⁰ − (A²₀)² − (A³₀)²)`, largest first.
pub fn emittances4(s: &BeamMatrix4) -> Result<(f64, f64)> {
    if !is_positive_definite(&s.representative()) {
        return Err(Error::NonPhysical(
            "beam matrix is not positive-definite".into(),
        ));
    }
    let a = skew_of_sigma(s);
    let mut rad = vec3::dot(a.avec0, a.avec0) - a.a20 * a.a20 - a.a30 * a.a30;
    let slack = 1e-12 * a.a10 * a.a10;
    if rad < 0.0 && rad >= -slack {
        rad = 0.0;
    }
    if rad < 0.0 || !rad.is_finite() {
        return Err(Error::NonPhysical(format!(
            "emittance radicand {rad:.3e} is negative"
        )));
    }
    let r = rad.sqrt();
    let (e1, e2) = (a.a10 + r, a.a10 - r);
    if e2 <= 0.0 {
        return Err(Error::NonPhysical(format!(
            "squared emittances ({e1:.4e}, {e2:.4e}) are not both positive"
        )));
    }
    Ok((e1.sqrt(), e2.sqrt()))
}
