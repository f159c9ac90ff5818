//! Multi-step recipes: decoupling, diagonalization, normalization.

use serde::{Deserialize, Serialize};

use super::rotation3::{axis_angle_from_rotation, polar3, rotation_about};
use super::select::{
    select_align, select_boost, select_gamma_orthogonalize, BoostGoal, DEGENERATE_TOL,
};
use super::{emittances4, BeamMatrix4, ElementaryTransform, TransformPipeline};
use crate::clifford::{dirac_rep, DiracUnit};
use crate::error::{Error, Result};
use crate::smallmat::{expm, symplectic_form, symplectic_inverse, Mat3, Mat4};
use crate::vec3::{self, Vec3};

/// Which pairs of coordinates end up decoupled from each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Pairing {
    /// `x, x′` from `y, y′`.
    #[serde(rename = "XX_YY")]
    XxYy,
    /// `x, y` from `x′, y′`.
    #[serde(rename = "XY_XpYp")]
    XyXpYp,
    /// `x, y′` from `x′, y`.
    #[serde(rename = "XYp_XpY")]
    XypXpY,
}

fn unit(row: usize, col: usize) -> Mat4 {
    dirac_rep(DiracUnit::from_slot(row, col).expect("slot in range"))
}

impl Pairing {
    pub const ALL: [Pairing; 3] = [Pairing::XxYy, Pairing::XyXpYp, Pairing::XypXpY];

    pub fn name(self) -> &'static str {
        match self {
            Self::XxYy => "XX_YY",
            Self::XyXpYp => "XY_XpYp",
            Self::XypXpY => "XYp_XpY",
        }
    }

    /// Representative entries `(i, j)`, `i < j`, that vanish once decoupled.
    pub fn zero_pattern(self) -> [(usize, usize); 4] {
        match self {
            Self::XxYy => [(0, 2), (0, 3), (1, 2), (1, 3)],
            Self::XyXpYp => [(0, 1), (0, 3), (1, 2), (2, 3)],
            Self::XypXpY => [(0, 1), (0, 2), (1, 3), (2, 3)],
        }
    }

    /// Generators whose exponentials keep the zero pattern.
    pub fn stabilizer_generators(self) -> Vec<Mat4> {
        match self {
            Self::XxYy => vec![
                unit(1, 0),
                unit(0, 1),
                unit(2, 2),
                unit(3, 2),
                unit(2, 3),
                unit(3, 3),
            ],
            Self::XyXpYp => vec![unit(2, 0), unit(2, 2), unit(1, 3), unit(3, 3)],
            Self::XypXpY => vec![unit(3, 0), unit(1, 2), unit(2, 2), unit(3, 3)],
        }
    }

    fn steps(self) -> [BoostGoal; 2] {
        match self {
            Self::XxYy => [BoostGoal::KillV2DotV1, BoostGoal::KillV3DotV1],
            Self::XyXpYp => [BoostGoal::KillV2DotV1, BoostGoal::KillV3DotV2ViaBeta3],
            Self::XypXpY => [BoostGoal::KillV3DotV1, BoostGoal::KillV2DotV3ViaBeta2],
        }
    }

    fn aligned_vector(self) -> usize {
        match self {
            Self::XxYy => 1,
            Self::XyXpYp => 2,
            Self::XypXpY => 3,
        }
    }
}

/// One phase-space coordinate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Coordinate {
    X,
    Xp,
    Y,
    Yp,
}

impl Coordinate {
    pub const ALL: [Coordinate; 4] = [Coordinate::X, Coordinate::Xp, Coordinate::Y, Coordinate::Yp];

    /// Row of the coordinate in the representative.
    pub fn index(self) -> usize {
        match self {
            Self::X => 0,
            Self::Xp => 1,
            Self::Y => 2,
            Self::Yp => 3,
        }
    }

    pub fn zero_pattern(self) -> [(usize, usize); 3] {
        let k = self.index();
        let mut out = [(0, 0); 3];
        for (slot, j) in (0..4).filter(|&j| j != k).enumerate() {
            out[slot] = (k, j);
        }
        out
    }

    pub fn stabilizer_generators(self) -> Vec<Mat4> {
        let sign = match self {
            Self::X | Self::Xp => 1.0,
            Self::Y | Self::Yp => -1.0,
        };
        vec![
            unit(2, 2),
            unit(3, 3),
            (unit(1, 0) + unit(0, 1).scale(sign)).scale(0.5),
            (unit(3, 2) + unit(2, 3).scale(sign)).scale(0.5),
        ]
    }

    /// Axis of the extra half-turn ζ rotation after decoupling `x`.
    fn flip_axis(self) -> Option<usize> {
        match self {
            Self::X => None,
            Self::Xp => Some(0),
            Self::Y => Some(1),
            Self::Yp => Some(2),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DiagonalizeStrategy {
    /// Decouple `x, x′` from `y, y′` first, then finish each block.
    #[default]
    BlockFirst,
    /// Orthogonalize all three vectors, then rotate them onto the axes.
    Direct,
}

struct Run {
    pipeline: TransformPipeline,
    beam: BeamMatrix4,
}

impl Run {
    fn start(s: &BeamMatrix4) -> Result<Self> {
        emittances4(s)?;
        Ok(Run {
            pipeline: TransformPipeline::new(),
            beam: *s,
        })
    }

    fn push(&mut self, t: ElementaryTransform) {
        self.beam = t.apply(&self.beam);
        self.pipeline.push(t);
    }

    fn boost(&mut self, goal: BoostGoal) -> Result<()> {
        let t = select_boost(&self.beam, goal)?;
        self.push(t);
        Ok(())
    }

    fn finish(self) -> (TransformPipeline, BeamMatrix4) {
        (self.pipeline, self.beam)
    }
}

/// Two boosts and an alignment rotation that leave the pairing's 2×2
/// off-diagonal blocks zero.
pub fn decouple_pair(
    s: &BeamMatrix4,
    pairing: Pairing,
) -> Result<(TransformPipeline, BeamMatrix4)> {
    let mut run = Run::start(s)?;
    for goal in pairing.steps() {
        run.boost(goal)?;
    }
    let align = select_align(&run.beam, pairing.aligned_vector())?;
    run.push(align);
    Ok(run.finish())
}

/// Brings the representative to diagonal form, with `Σ⃗^k` along axis `k`.
pub fn diagonalize4(
    s: &BeamMatrix4,
    strategy: DiagonalizeStrategy,
) -> Result<(TransformPipeline, BeamMatrix4)> {
    match strategy {
        DiagonalizeStrategy::BlockFirst => block_first(s),
        DiagonalizeStrategy::Direct => direct(s),
    }
}

fn block_first(s: &BeamMatrix4) -> Result<(TransformPipeline, BeamMatrix4)> {
    let (pipeline, beam) = decouple_pair(s, Pairing::XxYy)?;
    let mut run = Run { pipeline, beam };
    run.push(ElementaryTransform::gamma(select_gamma_orthogonalize(
        &run.beam,
    )));
    let b = run.beam;
    let tol = DEGENERATE_TOL * b.max_abs().max(1.0);
    // Both vectors now lie in the 2-3 plane and are orthogonal.
    let two_psi = if vec3::norm(b.v2) > tol {
        b.v2[2].atan2(b.v2[1])
    } else if vec3::norm(b.v3) > tol {
        (-b.v3[1]).atan2(b.v3[2])
    } else {
        0.0
    };
    run.push(ElementaryTransform::zeta(vec3::axis(0), 0.5 * two_psi)?);
    Ok(run.finish())
}

/// Orthonormal frame whose columns follow `Σ⃗¹, Σ⃗², Σ⃗³` (already mutually
/// orthogonal). Missing directions are filled in; among the sign choices
/// the one with the largest trace wins, ties going to `+`.
fn frame(b: &BeamMatrix4) -> Mat3 {
    let tol = DEGENERATE_TOL * b.max_abs().max(1.0);
    let known: Vec<(usize, Vec3)> = b
        .vectors()
        .iter()
        .enumerate()
        .filter(|(_, v)| vec3::norm(**v) > tol)
        .map(|(m, v)| (m, vec3::scale(*v, 1.0 / vec3::norm(*v))))
        .collect();
    let used = &known[..known.len().min(2)];
    let mut best: Option<(f64, Mat3)> = None;
    for signs in 0..(1usize << used.len()) {
        let cols: Vec<(usize, Vec3)> = used
            .iter()
            .enumerate()
            .map(|(i, (m, u))| {
                let sg = if signs >> i & 1 == 1 { -1.0 } else { 1.0 };
                (*m, vec3::scale(*u, sg))
            })
            .collect();
        let t = complete_frame(&cols);
        let tr = t.trace();
        if best.as_ref().is_none_or(|(b, _)| tr > *b + 1e-15) {
            best = Some((tr, t));
        }
    }
    best.map(|(_, t)| t).unwrap_or_else(Mat3::identity)
}

fn complete_frame(cols: &[(usize, Vec3)]) -> Mat3 {
    let mut t = [vec3::ZERO; 3];
    match cols {
        [] => return Mat3::identity(),
        [(m, u)] => {
            let axis = vec3::axis(*m);
            let n = vec3::cross(axis, *u);
            let r = vec3::norm(n);
            let theta = vec3::dot(axis, *u).clamp(-1.0, 1.0).acos();
            return if r <= 1e-15 {
                if theta > 1.0 {
                    // Half turn about any axis orthogonal to `axis`.
                    rotation_about(vec3::axis((*m + 1) % 3), std::f64::consts::PI)
                } else {
                    Mat3::identity()
                }
            } else {
                rotation_about(vec3::scale(n, 1.0 / r), theta)
            };
        }
        [(i, a), (j, b), ..] => {
            t[*i] = *a;
            t[*j] = *b;
            let k = 3 - i - j;
            // Right-handed: t[k] = t[k+1] × t[k+2].
            t[k] = vec3::cross(t[(k + 1) % 3], t[(k + 2) % 3]);
        }
    }
    let mut m = Mat3::zeros();
    for (c, v) in t.iter().enumerate() {
        for r in 0..3 {
            m[(r, c)] = v[r];
        }
    }
    m
}

fn direct(s: &BeamMatrix4) -> Result<(TransformPipeline, BeamMatrix4)> {
    let mut run = Run::start(s)?;
    run.boost(BoostGoal::KillV2DotV1)?;
    run.boost(BoostGoal::KillV3DotV1)?;
    run.push(ElementaryTransform::gamma(select_gamma_orthogonalize(
        &run.beam,
    )));
    let t = frame(&run.beam);
    let (e, psi) = axis_angle_from_rotation(&t);
    run.push(ElementaryTransform::zeta(e, psi)?);
    Ok(run.finish())
}

/// Diagonalizes, then rescales each plane so the representative becomes
/// `diag(ε_I, ε_I, ε_II, ε_II)` up to the order of the two blocks.
pub fn normalize4(s: &BeamMatrix4) -> Result<(TransformPipeline, BeamMatrix4)> {
    let (pipeline, beam) = block_first(s)?;
    let d = beam.representative().diag();
    if d.iter().any(|v| *v <= 0.0) {
        return Err(Error::NonPhysical(format!(
            "diagonal form {d:?} is not positive"
        )));
    }
    let f = [
        (d[1] / d[0]).powf(0.25),
        (d[0] / d[1]).powf(0.25),
        (d[3] / d[2]).powf(0.25),
        (d[2] / d[3]).powf(0.25),
    ];
    let mut run = Run { pipeline, beam };
    run.push(ElementaryTransform::scale(f)?);
    Ok(run.finish())
}

/// Removes the correlations of one coordinate with all the others.
///
/// The polar decomposition `B = O S` of the vector block is undone with a
/// ζ rotation, which makes the block symmetric and decouples `x`. The other
/// coordinates follow with a half turn about one axis.
pub fn decouple_single(
    s: &BeamMatrix4,
    coord: Coordinate,
) -> Result<(TransformPipeline, BeamMatrix4)> {
    let mut run = Run::start(s)?;
    let (o, _) = polar3(&s.block())?;
    let (e, psi) = axis_angle_from_rotation(&o);
    run.push(ElementaryTransform::zeta(e, psi)?);
    if let Some(k) = coord.flip_axis() {
        run.push(ElementaryTransform::zeta(
            vec3::axis(k),
            std::f64::consts::FRAC_PI_2,
        )?);
    }
    Ok(run.finish())
}

/// `I(ψ, φ) = N exp(ζ₁ψ + γ¹φ) N⁻¹`, the maps fixing `Σ = N Σ_n Nᵀ`.
pub fn invariance4(n: &Mat4, psi: f64, phi: f64) -> Mat4 {
    let gen = unit(1, 0).scale(psi) + unit(0, 1).scale(phi);
    *n * expm(&gen) * symplectic_inverse(n, &symplectic_form::<4>())
}
