//! 3×3 rotations: polar decomposition and axis/angle extraction.

use crate::error::{Error, Result};
use crate::smallmat::{det_oracle, inv_oracle, Mat3};
use crate::vec3::{self, Vec3};

const POLAR_TOL: f64 = 1e-12;
const POLAR_MAX_ITER: usize = 100;
const SMALL_ANGLE: f64 = 1e-12;

/// Polar decomposition `M = O S` with `O` orthogonal and `S` symmetric.
///
/// `O` is found by averaging with the inverse transpose until it stops
/// moving. If `det M < 0` the orthogonal factor is negated, so `O` is
/// always a proper rotation (and `S` is then negative-definite).
pub fn polar3(m: &Mat3) -> Result<(Mat3, Mat3)> {
    let scale = m.max_abs();
    if !m.is_finite() || scale == 0.0 || det_oracle(m).abs() <= 1e-12 * scale.powi(3) {
        return Err(Error::SingularMatrix(
            "polar decomposition of a singular 3×3 block".into(),
        ));
    }
    let mut u = *m;
    for _ in 0..POLAR_MAX_ITER {
        let next = (u + inv_oracle(&u)?.transpose()).scale(0.5);
        let step = (next - u).max_abs();
        u = next;
        if step <= POLAR_TOL {
            break;
        }
    }
    if det_oracle(&u) < 0.0 {
        u = -u;
    }
    let s = (u.transpose() * *m).symmetrized();
    Ok((u, s))
}

/// Counter-clockwise rotation about the unit axis `e` by `theta`.
pub fn rotation_about(e: Vec3, theta: f64) -> Mat3 {
    let (c, s) = (theta.cos(), theta.sin());
    let mut r = Mat3::identity().scale(c);
    for i in 0..3 {
        for j in 0..3 {
            r[(i, j)] += (1.0 - c) * e[i] * e[j];
        }
    }
    r[(0, 1)] -= s * e[2];
    r[(0, 2)] += s * e[1];
    r[(1, 0)] += s * e[2];
    r[(1, 2)] -= s * e[0];
    r[(2, 0)] -= s * e[1];
    r[(2, 1)] += s * e[0];
    r
}

/// Axis `e` and half-angle `ψ ∈ [0, π/2]` with `O = rotation_about(e, 2ψ)`.
///
/// The identity gives `ψ = 0` about `(0, 0, 1)`. Past a quarter turn the
/// axis comes from the symmetric part, since the antisymmetric one fades
/// as `sin 2ψ → 0`.
pub fn axis_angle_from_rotation(o: &Mat3) -> (Vec3, f64) {
    let cos = ((o.trace() - 1.0) / 2.0).clamp(-1.0, 1.0);
    let w = [
        o[(2, 1)] - o[(1, 2)],
        o[(0, 2)] - o[(2, 0)],
        o[(1, 0)] - o[(0, 1)],
    ];
    let theta = (vec3::norm(w) / 2.0).atan2(cos);
    if theta <= SMALL_ANGLE && vec3::norm(w) <= SMALL_ANGLE {
        return ([0.0, 0.0, 1.0], 0.0);
    }
    let e = if cos >= -0.5 {
        vec3::scale(w, 1.0 / vec3::norm(w))
    } else {
        // e eᵀ = (S − cos θ) / (1 − cos θ)
        let s = o.symmetrized();
        let k = (0..3)
            .max_by(|&a, &b| s[(a, a)].total_cmp(&s[(b, b)]))
            .unwrap_or(0);
        let mut col = [s[(0, k)], s[(1, k)], s[(2, k)]];
        col[k] -= cos;
        let mut e = vec3::scale(col, 1.0 / vec3::norm(col));
        if vec3::dot(e, w) < 0.0 {
            e = vec3::scale(e, -1.0);
        }
        e
    };
    (e, theta / 2.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::f64::consts::PI;

    fn arb_rotation() -> impl Strategy<Value = (Vec3, f64)> {
        (prop::array::uniform3(-1.0..1.0f64), 0.0..PI)
            .prop_filter("axis", |(v, _)| vec3::norm(*v) > 0.1)
            .prop_map(|(v, t)| (vec3::scale(v, 1.0 / vec3::norm(v)), t))
    }

    #[test]
    fn identity_has_fixed_axis() {
        assert_eq!(
            axis_angle_from_rotation(&Mat3::identity()),
            ([0.0, 0.0, 1.0], 0.0)
        );
    }

    #[test]
    fn third_axis_rotation() {
        let o = rotation_about([0.0, 0.0, 1.0], PI / 3.0);
        let (e, psi) = axis_angle_from_rotation(&o);
        assert!(vec3::max_abs(vec3::sub(e, [0.0, 0.0, 1.0])) < 1e-14);
        assert!((2.0 * psi - PI / 3.0).abs() < 1e-14);
    }

    #[test]
    fn half_turn() {
        let e0 = [0.6, 0.0, 0.8];
        let (e, psi) = axis_angle_from_rotation(&rotation_about(e0, PI));
        assert!((psi - PI / 2.0).abs() < 1e-12);
        assert!((vec3::dot(e, e0).abs() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn polar_trivial_cases() {
        let r = rotation_about([1.0, 0.0, 0.0], 0.7);
        let (o, s) = polar3(&r).unwrap();
        assert!((o - r).max_abs() < 1e-12);
        assert!((s - Mat3::identity()).max_abs() < 1e-12);
        let p = Mat3::from_rows([[2.0, 0.5, 0.0], [0.5, 3.0, 0.1], [0.0, 0.1, 1.0]]);
        let (o, s) = polar3(&p).unwrap();
        assert!((o - Mat3::identity()).max_abs() < 1e-12);
        assert!((s - p).max_abs() < 1e-12);
    }

    #[test]
    fn singular_block_rejected() {
        let m = Mat3::from_rows([[1.0, 2.0, 3.0], [2.0, 4.0, 6.0], [0.0, 1.0, 0.0]]);
        assert!(matches!(polar3(&m), Err(Error::SingularMatrix(_))));
    }

    proptest! {
        #[test]
        fn axis_angle_reconstructs((e, t) in arb_rotation()) {
            let o = rotation_about(e, t);
            let (e2, psi) = axis_angle_from_rotation(&o);
            prop_assert!((0.0..=PI / 2.0).contains(&psi));
            prop_assert!((rotation_about(e2, 2.0 * psi) - o).max_abs() <= 1e-10);
        }

        #[test]
        fn polar_reconstructs(a in prop::array::uniform9(-2.0..2.0f64)) {
            let m = Mat3::from_rows([[a[0], a[1], a[2]], [a[3], a[4], a[5]], [a[6], a[7], a[8]]]);
            prop_assume!(det_oracle(&m).abs() > 1e-3);
            let (o, s) = polar3(&m).unwrap();
            prop_assert!((o * s - m).max_abs() <= 1e-10);
            prop_assert!((o.transpose() * o - Mat3::identity()).max_abs() <= 1e-10);
            prop_assert!(det_oracle(&o) > 0.0);
            prop_assert!(s.asymmetry() <= 1e-12);
        }
    }
}
