//! Parameter choices that make a single transform reach a goal.

use serde::{Deserialize, Serialize};

use super::{BeamMatrix4, ElementaryTransform};
use crate::angles::half_atanh;
use crate::error::{Error, Result};
use crate::vec3::{self, Vec3};

/// Below this (scaled) size a selector direction counts as zero.
pub(crate) const DEGENERATE_TOL: f64 = 1e-12;

const FALLBACK_AXIS: Vec3 = [0.0, 0.0, 1.0];

/// What a β-boost should achieve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BoostGoal {
    /// β² boost along `Σ⃗²` removing it.
    SuppressV2,
    /// β³ boost along `Σ⃗³` removing it.
    SuppressV3,
    /// β² boost making `Σ⃗²·Σ⃗¹ = 0`; keeps `Σ⃗³·Σ⃗¹`.
    KillV2DotV1,
    /// β³ boost making `Σ⃗³·Σ⃗¹ = 0`; keeps `Σ⃗²·Σ⃗¹`.
    KillV3DotV1,
    /// β² boost making `Σ⃗²·Σ⃗³ = 0`.
    KillV2DotV3ViaBeta2,
    /// β³ boost making `Σ⃗³·Σ⃗² = 0`.
    KillV3DotV2ViaBeta3,
}

impl BoostGoal {
    /// The quantity the boost drives to zero.
    pub fn residual(self, s: &BeamMatrix4) -> f64 {
        match self {
            Self::SuppressV2 => vec3::norm(s.v2),
            Self::SuppressV3 => vec3::norm(s.v3),
            Self::KillV2DotV1 => vec3::dot(s.v2, s.v1),
            Self::KillV3DotV1 => vec3::dot(s.v3, s.v1),
            Self::KillV2DotV3ViaBeta2 | Self::KillV3DotV2ViaBeta3 => vec3::dot(s.v2, s.v3),
        }
    }

    fn uses_beta2(self) -> bool {
        matches!(
            self,
            Self::SuppressV2 | Self::KillV2DotV1 | Self::KillV2DotV3ViaBeta2
        )
    }
}

fn scale2(s: &BeamMatrix4) -> f64 {
    let m = s.max_abs().max(1.0);
    m * m
}

fn boost(beta2: bool, axis: Vec3, chi: f64) -> ElementaryTransform {
    if beta2 {
        ElementaryTransform::Beta2Boost { axis, chi }
    } else {
        ElementaryTransform::Beta3Boost { axis, chi }
    }
}

/// Picks the boost axis and rapidity that meet `goal`.
///
/// When the selector direction is zero and the goal is already met the
/// identity boost is returned; when it is zero and the goal is not met the
/// call fails with [`Error::DegenerateDirection`].
pub fn select_boost(s: &BeamMatrix4, goal: BoostGoal) -> Result<ElementaryTransform> {
    let (dir, value) = match goal {
        BoostGoal::SuppressV2 | BoostGoal::SuppressV3 => {
            let v = if goal == BoostGoal::SuppressV2 {
                s.v2
            } else {
                s.v3
            };
            let n = vec3::norm(v);
            if n <= DEGENERATE_TOL * s.max_abs().max(1.0) {
                return Ok(boost(goal.uses_beta2(), FALLBACK_AXIS, 0.0));
            }
            if s.sigma00 <= 0.0 {
                return Err(Error::NonPhysical(format!(
                    "Σ⁰₀ = {} must be positive to suppress a vector",
                    s.sigma00
                )));
            }
            let chi = half_atanh(-n / s.sigma00)?;
            return Ok(boost(goal.uses_beta2(), vec3::scale(v, 1.0 / n), chi));
        }
        BoostGoal::KillV2DotV1 | BoostGoal::KillV3DotV1 => (
            vec3::sub(vec3::cross(s.v2, s.v3), vec3::scale(s.v1, s.sigma00)),
            goal.residual(s),
        ),
        BoostGoal::KillV2DotV3ViaBeta2 => (
            vec3::sub(vec3::cross(s.v1, s.v2), vec3::scale(s.v3, s.sigma00)),
            goal.residual(s),
        ),
        BoostGoal::KillV3DotV2ViaBeta3 => (
            vec3::sub(vec3::cross(s.v3, s.v1), vec3::scale(s.v2, s.sigma00)),
            goal.residual(s),
        ),
    };
    let n = vec3::norm(dir);
    let tol = DEGENERATE_TOL * scale2(s);
    if n <= tol {
        if value.abs() <= tol {
            return Ok(boost(goal.uses_beta2(), FALLBACK_AXIS, 0.0));
        }
        return Err(Error::DegenerateDirection(format!(
            "{goal:?}: selector direction vanishes while the goal residual is {value:.3e}"
        )));
    }
    let chi = half_atanh(value / n)?;
    Ok(boost(goal.uses_beta2(), vec3::scale(dir, 1.0 / n), chi))
}

/// γ-rotation angle making `Σ⃗²·Σ⃗³ = 0`:
/// `tan 4φ = 2Σ⃗²·Σ⃗³ / ((Σ⃗²)² − (Σ⃗³)²)`.
pub fn select_gamma_orthogonalize(s: &BeamMatrix4) -> f64 {
    let y = 2.0 * vec3::dot(s.v2, s.v3);
    let x = vec3::dot(s.v2, s.v2) - vec3::dot(s.v3, s.v3);
    0.25 * y.atan2(x)
}

/// ζ-rotation turning `Σ⃗^m` onto the m-axis by the smallest angle.
///
/// With `r` the length of the part of `Σ⃗^m` off the axis, the axis is
/// `e⃗^m × Σ⃗^m / r`-like and `tan 2ψ = −r / Σ^m_m`.
pub fn select_align(s: &BeamMatrix4, m: usize) -> Result<ElementaryTransform> {
    if !(1..=3).contains(&m) {
        return Err(Error::InvalidArgument(format!(
            "vector index {m} not in 1..=3"
        )));
    }
    let v = s.vector(m);
    let e = match m {
        1 => [0.0, v[2], -v[1]],
        2 => [-v[2], 0.0, v[0]],
        _ => [v[1], -v[0], 0.0],
    };
    let r = vec3::norm(e);
    if r <= DEGENERATE_TOL * s.max_abs().max(1.0) {
        return ElementaryTransform::zeta(FALLBACK_AXIS, 0.0);
    }
    let along = v[m - 1];
    let two_psi = if along == 0.0 {
        -std::f64::consts::FRAC_PI_2
    } else {
        (-r / along).atan()
    };
    ElementaryTransform::zeta(vec3::scale(e, 1.0 / r), 0.5 * two_psi)
}
