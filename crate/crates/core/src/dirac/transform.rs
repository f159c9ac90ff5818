use serde::{Deserialize, Serialize};

use super::BeamMatrix4;
use crate::clifford::{dirac_rep, DiracUnit};
use crate::error::{Error, Result};
use crate::pipeline::{Pipeline, Transform};
use crate::smallmat::Mat4;
use crate::vec3::{self, Vec3};

const AXIS_TOL: f64 = 1e-12;

/// The elementary symplectic maps of the 2-DoF calculus.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ElementaryTransform {
    /// `cos ψ + sin ψ (ζ⃗·e⃗)`: turns all three vectors clockwise about
    /// `e⃗` by `2ψ`.
    ZetaRot { axis: Vec3, psi: f64 },
    /// `cos φ + sin φ γ¹`: turns `Σ⃗²` into `Σ⃗³` by `2φ`.
    GammaRot { phi: f64 },
    /// `cosh χ + sinh χ (β⃗²·e⃗)`.
    Beta2Boost { axis: Vec3, chi: f64 },
    /// `cosh χ + sinh χ (β⃗³·e⃗)`.
    Beta3Boost { axis: Vec3, chi: f64 },
    /// `diag(f₁, f₂, f₃, f₄)` with `f₁f₂ = f₃f₄ = 1`.
    Scale { factors: [f64; 4] },
}

fn check_axis(e: Vec3) -> Result<()> {
    let n = vec3::norm(e);
    if (n - 1.0).abs() > AXIS_TOL || !n.is_finite() {
        return Err(Error::InvalidArgument(format!(
            "transform axis must be a unit vector, |e| = {n}"
        )));
    }
    Ok(())
}

impl ElementaryTransform {
    pub fn zeta(axis: Vec3, psi: f64) -> Result<Self> {
        check_axis(axis)?;
        Ok(Self::ZetaRot { axis, psi })
    }

    pub fn gamma(phi: f64) -> Self {
        Self::GammaRot { phi }
    }

    pub fn beta2(axis: Vec3, chi: f64) -> Result<Self> {
        check_axis(axis)?;
        Ok(Self::Beta2Boost { axis, chi })
    }

    pub fn beta3(axis: Vec3, chi: f64) -> Result<Self> {
        check_axis(axis)?;
        Ok(Self::Beta3Boost { axis, chi })
    }

    pub fn scale(factors: [f64; 4]) -> Result<Self> {
        let ok = factors.iter().all(|f| *f > 0.0 && f.is_finite())
            && (factors[0] * factors[1] - 1.0).abs() <= 1e-12
            && (factors[2] * factors[3] - 1.0).abs() <= 1e-12;
        if !ok {
            return Err(Error::InvalidArgument(format!(
                "scale factors {factors:?} are not a symplectic rescaling"
            )));
        }
        Ok(Self::Scale { factors })
    }

    /// Kind name as used in reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Self::ZetaRot { .. } => "zeta_rot",
            Self::GammaRot { .. } => "gamma_rot",
            Self::Beta2Boost { .. } => "beta2_boost",
            Self::Beta3Boost { .. } => "beta3_boost",
            Self::Scale { .. } => "scale",
        }
    }

    pub fn axis(&self) -> Option<Vec3> {
        match *self {
            Self::ZetaRot { axis, .. }
            | Self::Beta2Boost { axis, .. }
            | Self::Beta3Boost { axis, .. } => Some(axis),
            _ => None,
        }
    }

    pub fn angle(&self) -> Option<f64> {
        match *self {
            Self::ZetaRot { psi, .. } => Some(psi),
            Self::GammaRot { phi } => Some(phi),
            Self::Beta2Boost { chi, .. } | Self::Beta3Boost { chi, .. } => Some(chi),
            Self::Scale { .. } => None,
        }
    }

    /// Closed-form action on the beam components.
    pub fn apply(&self, s: &BeamMatrix4) -> BeamMatrix4 {
        match *self {
            Self::ZetaRot { axis, psi } => zeta_closed(s, axis, psi),
            Self::GammaRot { phi } => apply_gamma(s, phi),
            Self::Beta2Boost { axis, chi } => beta2_closed(s, axis, chi),
            Self::Beta3Boost { axis, chi } => beta3_closed(s, axis, chi),
            Self::Scale { .. } => {
                let m = self.representative().congruence(&s.representative());
                BeamMatrix4::from_matrix(&m).expect("congruence keeps symmetry")
            }
        }
    }
}

fn units_dot(e: Vec3, unit: impl Fn(usize) -> DiracUnit) -> Mat4 {
    (1..=3).fold(Mat4::zeros(), |acc, k| {
        acc + dirac_rep(unit(k)).scale(e[k - 1])
    })
}

impl Transform<4> for ElementaryTransform {
    fn representative(&self) -> Mat4 {
        let one = Mat4::identity();
        match *self {
            Self::ZetaRot { axis, psi } => {
                let g = units_dot(axis, |k| DiracUnit::zeta(k).expect("axis"));
                one.scale(psi.cos()) + g.scale(psi.sin())
            }
            Self::GammaRot { phi } => {
                let g = dirac_rep(DiracUnit::gamma(1).expect("axis"));
                one.scale(phi.cos()) + g.scale(phi.sin())
            }
            Self::Beta2Boost { axis, chi } => {
                let g = units_dot(axis, |k| DiracUnit::beta(2, k).expect("axis"));
                one.scale(chi.cosh()) + g.scale(chi.sinh())
            }
            Self::Beta3Boost { axis, chi } => {
                let g = units_dot(axis, |k| DiracUnit::beta(3, k).expect("axis"));
                one.scale(chi.cosh()) + g.scale(chi.sinh())
            }
            Self::Scale { factors } => Mat4::from_diag(factors),
        }
    }
}

pub type TransformPipeline = Pipeline<ElementaryTransform, 4>;

fn zeta_closed(s: &BeamMatrix4, e: Vec3, psi: f64) -> BeamMatrix4 {
    let (c, sn) = ((2.0 * psi).cos(), (2.0 * psi).sin());
    let rot = |v: Vec3| {
        let par = vec3::dot(e, v);
        let perp = vec3::sub(v, vec3::scale(e, par));
        vec3::combo(&[(par, e), (c, perp), (-sn, vec3::cross(e, v))])
    };
    BeamMatrix4::new(s.sigma00, rot(s.v1), rot(s.v2), rot(s.v3))
}

fn split(e: Vec3, v: Vec3) -> (f64, Vec3) {
    let par = vec3::dot(e, v);
    (par, vec3::sub(v, vec3::scale(e, par)))
}

fn beta2_closed(s: &BeamMatrix4, e: Vec3, chi: f64) -> BeamMatrix4 {
    let (ch, sh) = ((2.0 * chi).cosh(), (2.0 * chi).sinh());
    let (p1, q1) = split(e, s.v1);
    let (p2, q2) = split(e, s.v2);
    let (p3, q3) = split(e, s.v3);
    BeamMatrix4::new(
        ch * s.sigma00 + sh * p2,
        vec3::combo(&[(p1, e), (sh, vec3::cross(e, s.v3)), (ch, q1)]),
        vec3::combo(&[(sh * s.sigma00 + ch * p2, e), (1.0, q2)]),
        vec3::combo(&[(p3, e), (ch, q3), (-sh, vec3::cross(e, s.v1))]),
    )
}

fn beta3_closed(s: &BeamMatrix4, e: Vec3, chi: f64) -> BeamMatrix4 {
    let (ch, sh) = ((2.0 * chi).cosh(), (2.0 * chi).sinh());
    let (p1, q1) = split(e, s.v1);
    let (p2, q2) = split(e, s.v2);
    let (p3, q3) = split(e, s.v3);
    BeamMatrix4::new(
        ch * s.sigma00 + sh * p3,
        vec3::combo(&[(p1, e), (-sh, vec3::cross(e, s.v2)), (ch, q1)]),
        vec3::combo(&[(p2, e), (ch, q2), (sh, vec3::cross(e, s.v1))]),
        vec3::combo(&[(sh * s.sigma00 + ch * p3, e), (1.0, q3)]),
    )
}

/// ζ-rotation about the unit axis `e⃗` by `ψ`.
pub fn apply_zeta(s: &BeamMatrix4, e: Vec3, psi: f64) -> Result<BeamMatrix4> {
    check_axis(e)?;
    Ok(zeta_closed(s, e, psi))
}

/// γ¹-rotation: `Σ⃗²′ = cos2φ Σ⃗² + sin2φ Σ⃗³`, `Σ⃗³′ = −sin2φ Σ⃗² + cos2φ Σ⃗³`.
pub fn apply_gamma(s: &BeamMatrix4, phi: f64) -> BeamMatrix4 {
    let (c, sn) = ((2.0 * phi).cos(), (2.0 * phi).sin());
    BeamMatrix4::new(
        s.sigma00,
        s.v1,
        vec3::combo(&[(c, s.v2), (sn, s.v3)]),
        vec3::combo(&[(-sn, s.v2), (c, s.v3)]),
    )
}

pub fn apply_beta2(s: &BeamMatrix4, e: Vec3, chi: f64) -> Result<BeamMatrix4> {
    check_axis(e)?;
    Ok(beta2_closed(s, e, chi))
}

pub fn apply_beta3(s: &BeamMatrix4, e: Vec3, chi: f64) -> Result<BeamMatrix4> {
    check_axis(e)?;
    Ok(beta3_closed(s, e, chi))
}
