//! One degree of freedom: beam matrices as Cockle quaternions.
//!
//! A symmetric 2×2 beam matrix is `Σ = Σ₀·1 + Σ₁β₁ + Σ₂β₂`. Boosts
//! `exp(χ e⃗·β⃗)` mix `Σ₀` with the component of `Σ⃗` along `e⃗`; rotations
//! `exp(ψγ)` turn `Σ⃗` by `2ψ` and leave `Σ₀` alone.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::angles::{half_atan2, half_atanh};
use crate::clifford::{pauli_rep, CliffordElement2, PauliUnit};
use crate::error::{Error, Result};
use crate::pipeline::{Pipeline, Transform};
use crate::smallmat::{expm, symplectic_form, symplectic_inverse, Mat2};

const AXIS_TOL: f64 = 1e-12;

/// Symmetric 2×2 beam matrix in coefficient form.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct BeamMatrix2 {
    pub sigma0: f64,
    pub sigma: [f64; 2],
}

impl BeamMatrix2 {
    pub fn new(sigma0: f64, sigma1: f64, sigma2: f64) -> Self {
        BeamMatrix2 {
            sigma0,
            sigma: [sigma1, sigma2],
        }
    }

    pub fn representative(&self) -> Mat2 {
        CliffordElement2::new(self.sigma0, self.sigma[0], self.sigma[1], 0.0).compose()
    }

    pub fn from_matrix(m: &Mat2) -> Result<Self> {
        let tol = 1e-9 * m.max_abs().max(1.0);
        if !m.is_symmetric(tol) {
            return Err(Error::InvalidArgument(format!(
                "beam matrix is not symmetric (asymmetry {:.3e})",
                m.asymmetry()
            )));
        }
        let z = CliffordElement2::decompose(m);
        Ok(Self::new(z.z[0], z.z[1], z.z[2]))
    }

    /// `Σ₀² − Σ⃗²`, the determinant of the representative.
    pub fn det(&self) -> f64 {
        self.sigma0 * self.sigma0 - self.vec_norm_sq()
    }

    pub fn vec_norm(&self) -> f64 {
        self.vec_norm_sq().sqrt()
    }

    fn vec_norm_sq(&self) -> f64 {
        self.sigma[0] * self.sigma[0] + self.sigma[1] * self.sigma[1]
    }

    pub fn is_physical(&self) -> bool {
        self.sigma0 > 0.0 && self.det() > 0.0
    }
}

/// `ε = √(Σ₀² − Σ⃗²)`.
pub fn emittance2(s: &BeamMatrix2) -> Result<f64> {
    let d = s.det();
    if d < 0.0 || !d.is_finite() {
        return Err(Error::NonPhysical(format!(
            "Σ₀² − Σ⃗² = {d:.6e} is negative"
        )));
    }
    Ok(d.sqrt())
}

/// Elementary 1-DoF transform.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PauliTransform {
    /// `cosh χ + sinh χ (e⃗·β⃗)`.
    Boost { axis: [f64; 2], chi: f64 },
    /// `cos ψ + sin ψ γ`.
    Rotation { psi: f64 },
}

impl PauliTransform {
    pub fn boost(axis: [f64; 2], chi: f64) -> Result<Self> {
        let n = axis[0].hypot(axis[1]);
        if (n - 1.0).abs() > AXIS_TOL {
            return Err(Error::InvalidArgument(format!(
                "boost axis must be a unit vector, |e| = {n}"
            )));
        }
        Ok(PauliTransform::Boost { axis, chi })
    }

    pub fn rotation(psi: f64) -> Self {
        PauliTransform::Rotation { psi }
    }

    pub fn angle(&self) -> f64 {
        match *self {
            PauliTransform::Boost { chi, .. } => chi,
            PauliTransform::Rotation { psi } => psi,
        }
    }

    pub fn apply(&self, s: &BeamMatrix2) -> BeamMatrix2 {
        match *self {
            PauliTransform::Boost { axis, chi } => apply_boost2_unchecked(s, axis, chi),
            PauliTransform::Rotation { psi } => apply_rotation2(s, psi),
        }
    }
}

impl Transform<2> for PauliTransform {
    fn representative(&self) -> Mat2 {
        let one = Mat2::identity();
        match *self {
            PauliTransform::Boost { axis, chi } => {
                let eb = pauli_rep(PauliUnit::Beta1).scale(axis[0])
                    + pauli_rep(PauliUnit::Beta2).scale(axis[1]);
                one.scale(chi.cosh()) + eb.scale(chi.sinh())
            }
            PauliTransform::Rotation { psi } => {
                one.scale(psi.cos()) + pauli_rep(PauliUnit::Gamma).scale(psi.sin())
            }
        }
    }
}

pub type PauliPipeline = Pipeline<PauliTransform, 2>;

fn apply_boost2_unchecked(s: &BeamMatrix2, e: [f64; 2], chi: f64) -> BeamMatrix2 {
    let (ch, sh) = ((2.0 * chi).cosh(), (2.0 * chi).sinh());
    let par = e[0] * s.sigma[0] + e[1] * s.sigma[1];
    let perp = [s.sigma[0] - e[0] * par, s.sigma[1] - e[1] * par];
    let par2 = sh * s.sigma0 + ch * par;
    BeamMatrix2 {
        sigma0: ch * s.sigma0 + sh * par,
        sigma: [perp[0] + e[0] * par2, perp[1] + e[1] * par2],
    }
}

pub fn apply_boost2(s: &BeamMatrix2, e: [f64; 2], chi: f64) -> Result<BeamMatrix2> {
    Ok(PauliTransform::boost(e, chi)?.apply(s))
}

/// Rotates `Σ⃗` clockwise by `2ψ`.
pub fn apply_rotation2(s: &BeamMatrix2, psi: f64) -> BeamMatrix2 {
    let (c, sn) = ((2.0 * psi).cos(), (2.0 * psi).sin());
    let [s1, s2] = s.sigma;
    BeamMatrix2 {
        sigma0: s.sigma0,
        sigma: [c * s1 + sn * s2, c * s2 - sn * s1],
    }
}

/// Rotation that zeroes `Σ₂`, leaving `Σ₁ = |Σ⃗| ≥ 0`.
pub fn diagonalize2(s: &BeamMatrix2) -> (PauliTransform, BeamMatrix2) {
    let t = PauliTransform::rotation(half_atan2(s.sigma[1], s.sigma[0]));
    (t, t.apply(s))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum Normalize2Strategy {
    /// Diagonalize by a rotation, then boost along β₁.
    #[default]
    TwoStep,
    /// A single boost along `Σ⃗`.
    Direct,
}

/// Brings a physical beam to `(ε, (0, 0))`.
pub fn normalize2(
    s: &BeamMatrix2,
    strategy: Normalize2Strategy,
) -> Result<(PauliPipeline, BeamMatrix2)> {
    if !s.is_physical() {
        return Err(Error::NonPhysical(format!(
            "beam (Σ₀ = {}, Σ⃗ = {:?}) is not positive-definite",
            s.sigma0, s.sigma
        )));
    }
    let mut pipe = PauliPipeline::new();
    let mut cur = *s;
    match strategy {
        Normalize2Strategy::TwoStep => {
            if cur.sigma[1] != 0.0 {
                let (rot, next) = diagonalize2(&cur);
                pipe.push(rot);
                cur = next;
            }
            if cur.sigma[0] != 0.0 {
                let chi = half_atanh(-cur.sigma[0] / cur.sigma0)?;
                let b = PauliTransform::boost([1.0, 0.0], chi)?;
                pipe.push(b);
                cur = b.apply(&cur);
            }
        }
        Normalize2Strategy::Direct => {
            let n = cur.vec_norm();
            if n > 0.0 {
                let chi = half_atanh(-n / cur.sigma0)?;
                let b = PauliTransform::Boost {
                    axis: [cur.sigma[0] / n, cur.sigma[1] / n],
                    chi,
                };
                pipe.push(b);
                cur = b.apply(&cur);
            }
        }
    }
    Ok((pipe, cur))
}

/// `N exp(γψ) N⁻¹`, which leaves `Σ = N Σ̃ Nᵀ` invariant when `N`
/// normalizes `Σ`.
pub fn invariance2(n: &Mat2, psi: f64) -> Mat2 {
    let g = symplectic_form::<2>();
    *n * expm(&pauli_rep(PauliUnit::Gamma).scale(psi)) * symplectic_inverse(n, &g)
}

/// Determinant, eigenvalues and inverse of a Cockle quaternion.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CockleSpectrum {
    pub det: f64,
    pub eigenvalues: [Complex64; 2],
    pub inverse: CliffordElement2,
}

/// `det = Z₀² − Z₁² − Z₂² + Z₃²`.
pub fn cockle_det(z: &CliffordElement2) -> f64 {
    let [z0, z1, z2, z3] = z.z;
    z0 * z0 - z1 * z1 - z2 * z2 + z3 * z3
}

/// `λ± = Z₀ ± √(Z₁² + Z₂² − Z₃²)`, complex when the radicand is negative.
pub fn cockle_eigenvalues(z: &CliffordElement2) -> [Complex64; 2] {
    let [z0, z1, z2, z3] = z.z;
    let r = Complex64::new(z1 * z1 + z2 * z2 - z3 * z3, 0.0).sqrt();
    [z0 + r, z0 - r]
}

/// `Z⁻¹ = Z̄ / det Z`.
pub fn cockle_inverse(z: &CliffordElement2) -> Result<CliffordElement2> {
    let d = cockle_det(z);
    let scale = z.z.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    if d.abs() <= 1e-14 * scale * scale || d == 0.0 {
        return Err(Error::SingularMatrix(format!("Cockle determinant {d:e}")));
    }
    let c = z.conjugate();
    Ok(CliffordElement2 {
        z: c.z.map(|v| v / d),
    })
}

pub fn cockle_det_eig_inv(z: &CliffordElement2) -> Result<CockleSpectrum> {
    Ok(CockleSpectrum {
        det: cockle_det(z),
        eigenvalues: cockle_eigenvalues(z),
        inverse: cockle_inverse(z)?,
    })
}
