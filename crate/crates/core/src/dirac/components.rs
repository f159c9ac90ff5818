//! Multiplying by a unit, seen on the component matrix.
//!
//! Left and right products of a representative with a unit become plain
//! 4×4 products of the component matrix with unit representatives. This
//! turns ζ and γ rotations into rotations of the component matrix.

use serde::{Deserialize, Serialize};

use crate::clifford::{dirac_rep, CliffordElement4, DiracUnit, UnitId};
use crate::error::{Error, Result};
use crate::smallmat::{expm, Mat4};
use crate::vec3::Vec3;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Left,
    Right,
}

fn zeta(k: usize) -> Mat4 {
    dirac_rep(DiracUnit::zeta(k).expect("axis in range"))
}

fn gamma(m: usize) -> Mat4 {
    dirac_rep(DiracUnit::gamma(m).expect("axis in range"))
}

/// Components of `u·Z` (left) or `Z·u` (right).
pub fn component_side_mul(z: &CliffordElement4, u: UnitId, side: Side) -> Result<CliffordElement4> {
    let UnitId::Dirac(u) = u else {
        return Err(Error::InvalidArgument(format!(
            "{u:?} is not a unit of the 4×4 algebra"
        )));
    };
    let c = z.as_matrix();
    let out = match (u.row(), u.col(), side) {
        (0, 0, _) => c,
        (k, 0, Side::Left) => zeta(k) * c,
        (k, 0, Side::Right) => -(gamma(k) * c),
        (0, l, Side::Left) => -(c * zeta(l)),
        (0, l, Side::Right) => c * gamma(l),
        (k, l, Side::Left) => -(zeta(k) * c * zeta(l)),
        (k, l, Side::Right) => -(gamma(k) * c * gamma(l)),
    };
    Ok(CliffordElement4::from_components(out.0))
}

/// `J_k = (ζ_k + γ^k)/2`, k = 1..3.
pub fn j_matrix(k: usize) -> Result<Mat4> {
    let z = dirac_rep(DiracUnit::zeta(k)?);
    let g = dirac_rep(DiracUnit::gamma(k)?);
    Ok((z + g).scale(0.5))
}

/// Components after a ζ rotation, `exp(2ψ e⃗·J⃗)·Z`.
pub fn zeta_rotation_components(z: &CliffordElement4, e: Vec3, psi: f64) -> CliffordElement4 {
    let mut gen = Mat4::zeros();
    for k in 1..=3 {
        gen += j_matrix(k)
            .expect("axis in range")
            .scale(2.0 * psi * e[k - 1]);
    }
    CliffordElement4::from_components((expm(&gen) * z.as_matrix()).0)
}

/// Components after a γ¹ rotation, `Z·exp(−2φJ₁)`.
pub fn gamma_rotation_components(z: &CliffordElement4, phi: f64) -> CliffordElement4 {
    let gen = j_matrix(1).expect("axis in range").scale(-2.0 * phi);
    CliffordElement4::from_components((z.as_matrix() * expm(&gen)).0)
}
