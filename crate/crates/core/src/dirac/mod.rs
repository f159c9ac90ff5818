//! Two degrees of freedom: beam matrices in real-Dirac component form.
//!
//! A symmetric 4×4 beam matrix is `Σ = Σ⁰₀·1 + β⃗¹·Σ⃗¹ + β⃗²·Σ⃗² + β⃗³·Σ⃗³`:
//! one scalar and three 3-vectors. Symplectic maps act on the vectors as
//! rotations (ζ), as a rotation of the `Σ⃗², Σ⃗³` pair (γ¹), or as boosts
//! that mix the scalar with one vector (β², β³).

mod components;
mod kernels;
mod recipes;
mod rotation3;
mod select;
mod transform;

pub use components::{
    component_side_mul, gamma_rotation_components, j_matrix, zeta_rotation_components, Side,
};
pub use kernels::{
    det_antisym4, det_general4, det_sym4, emittances4, inv_antisym4, inv_general4, inv_sym4,
    skew_of_general, skew_of_sigma, SkewA,
};
pub use recipes::{
    decouple_pair, decouple_single, diagonalize4, invariance4, normalize4, Coordinate,
    DiagonalizeStrategy, Pairing,
};
pub use rotation3::{axis_angle_from_rotation, polar3, rotation_about};
pub use select::{select_align, select_boost, select_gamma_orthogonalize, BoostGoal};
pub use transform::{
    apply_beta2, apply_beta3, apply_gamma, apply_zeta, ElementaryTransform, TransformPipeline,
};

use serde::{Deserialize, Serialize};

use crate::clifford::CliffordElement4;
use crate::error::{Error, Result};
use crate::smallmat::{Mat3, Mat4};
use crate::vec3::{self, Vec3};

/// Symmetric 4×4 beam matrix in component form.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct BeamMatrix4 {
    pub sigma00: f64,
    pub v1: Vec3,
    pub v2: Vec3,
    pub v3: Vec3,
}

impl BeamMatrix4 {
    pub fn new(sigma00: f64, v1: Vec3, v2: Vec3, v3: Vec3) -> Self {
        BeamMatrix4 {
            sigma00,
            v1,
            v2,
            v3,
        }
    }

    /// `ε·1`.
    pub fn scalar(eps: f64) -> Self {
        Self::new(eps, vec3::ZERO, vec3::ZERO, vec3::ZERO)
    }

    /// The normal form with representative `diag(a, a, b, b)`.
    pub fn normal(a: f64, b: f64) -> Self {
        Self::new(
            (a + b) / 2.0,
            [(a - b) / 2.0, 0.0, 0.0],
            vec3::ZERO,
            vec3::ZERO,
        )
    }

    /// Vector `Σ⃗^m`, m = 1..3.
    pub fn vector(&self, m: usize) -> Vec3 {
        match m {
            1 => self.v1,
            2 => self.v2,
            3 => self.v3,
            _ => panic!("vector index {m} not in 1..=3"),
        }
    }

    pub fn vectors(&self) -> [Vec3; 3] {
        [self.v1, self.v2, self.v3]
    }

    /// Lower 3×3 block of the component matrix: `B[k][l] = Σ^l_k`.
    pub fn block(&self) -> Mat3 {
        let mut b = Mat3::zeros();
        for (l, v) in self.vectors().iter().enumerate() {
            for k in 0..3 {
                b[(k, l)] = v[k];
            }
        }
        b
    }

    pub fn components(&self) -> CliffordElement4 {
        let mut c = [[0.0; 4]; 4];
        c[0][0] = self.sigma00;
        for (l, v) in self.vectors().iter().enumerate() {
            for k in 0..3 {
                c[k + 1][l + 1] = v[k];
            }
        }
        CliffordElement4::from_components(c)
    }

    /// Fails if the element has ζ or γ parts (its representative would not
    /// be symmetric).
    pub fn from_components(z: &CliffordElement4) -> Result<Self> {
        let tol = 1e-9 * z.symmetric_part_max().max(1.0);
        if z.antisymmetric_part_max() > tol {
            return Err(Error::InvalidArgument(format!(
                "component matrix has antisymmetric parts up to {:.3e}",
                z.antisymmetric_part_max()
            )));
        }
        let c = &z.c;
        let col = |l: usize| [c[1][l], c[2][l], c[3][l]];
        Ok(Self::new(c[0][0], col(1), col(2), col(3)))
    }

    pub fn representative(&self) -> Mat4 {
        self.components().compose()
    }

    pub fn from_matrix(m: &Mat4) -> Result<Self> {
        let tol = 1e-9 * m.max_abs().max(1.0);
        if !m.is_symmetric(tol) {
            return Err(Error::InvalidArgument(format!(
                "beam matrix is not symmetric (asymmetry {:.3e})",
                m.asymmetry()
            )));
        }
        Self::from_components(&CliffordElement4::decompose(&m.symmetrized()))
    }

    /// Largest absolute component.
    pub fn max_abs(&self) -> f64 {
        self.vectors()
            .iter()
            .map(|v| vec3::max_abs(*v))
            .fold(self.sigma00.abs(), f64::max)
    }

    pub fn max_diff(&self, other: &Self) -> f64 {
        let mut d = (self.sigma00 - other.sigma00).abs();
        for m in 1..=3 {
            d = d.max(vec3::max_abs(vec3::sub(self.vector(m), other.vector(m))));
        }
        d
    }

    /// Pairwise dot products `(Σ⃗¹·Σ⃗², Σ⃗¹·Σ⃗³, Σ⃗²·Σ⃗³)`.
    pub fn dots(&self) -> [f64; 3] {
        [
            vec3::dot(self.v1, self.v2),
            vec3::dot(self.v1, self.v3),
            vec3::dot(self.v2, self.v3),
        ]
    }
}

impl From<&BeamMatrix4> for CliffordElement4 {
    fn from(b: &BeamMatrix4) -> Self {
        b.components()
    }
}
