//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion
//! and exits nonzero if any fails.

use std::f64::consts::PI;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use nalgebra::{DMatrix, Matrix4};
use rand::{Rng, RngCore};
use rand_distr::StandardNormal;

use symplectica::bunch::{invariance6, normalize6, BunchMatrix6};
use symplectica::cli::{cmd_render, BeamFile};
use symplectica::clifford::{
    numbered_unit_map, dirac_rep, mul_units, pauli_rep, CliffordElement4, DiracUnit, PauliUnit, UnitId,
};
use symplectica::dirac::{
    apply_beta2, apply_beta3, apply_gamma, apply_zeta, decouple_pair, decouple_single,
    det_antisym4, det_general4, det_sym4, diagonalize4, emittances4, inv_antisym4, inv_general4,
    inv_sym4, invariance4, normalize4, BeamMatrix4, Coordinate, DiagonalizeStrategy,
    ElementaryTransform, Pairing, SkewA, TransformPipeline,
};
use symplectica::pauli::{invariance2, normalize2, BeamMatrix2, Normalize2Strategy};
use symplectica::pipeline::Transform;
use symplectica::random::{random_physical, seeded_rng};
use symplectica::smallmat::{symplectic_form, Mat2, Mat4, Mat6};
use symplectica::vec3::{self, cross, dot, Vec3};

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(elapsed: Duration, limit_s: f64) -> Result<(), String> {
    ensure(elapsed.as_secs_f64() < limit_s, || {
        format!("took {:.2} s, limit {limit_s} s", elapsed.as_secs_f64())
    })
}

fn reference_beam() -> BeamMatrix4 {
    BeamMatrix4::new(4.4, [-1.5, -1.5, 1.7], [-1.6, 0.7, -1.6], [0.9, -0.9, -2.6])
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(name)
}

fn normal(rng: &mut impl RngCore) -> f64 {
    rng.sample(StandardNormal)
}

fn random_vec(rng: &mut impl RngCore) -> Vec3 {
    [normal(rng), normal(rng), normal(rng)]
}

fn random_axis(rng: &mut impl RngCore) -> Vec3 {
    loop {
        let v = random_vec(rng);
        let n = vec3::norm(v);
        if n > 1e-3 {
            return vec3::scale(v, 1.0 / n);
        }
    }
}

fn random_beam(rng: &mut impl RngCore) -> BeamMatrix4 {
    BeamMatrix4::new(
        normal(rng),
        random_vec(rng),
        random_vec(rng),
        random_vec(rng),
    )
}

fn to_na(m: &Mat4) -> Matrix4<f64> {
    Matrix4::from_fn(|i, j| m[(i, j)])
}

// 1. Unit products and the numbered-unit map.

fn algebra_exactness() -> Check {
    let t = Instant::now();
    let mut products = 0;
    for a in PauliUnit::ALL {
        for b in PauliUnit::ALL {
            let p = mul_units(a.into(), b.into()).map_err(|e| e.to_string())?;
            let UnitId::Pauli(c) = p.unit else {
                return Err(format!("{a:?}·{b:?} left the algebra"));
            };
            let lhs = pauli_rep(a) * pauli_rep(b);
            ensure(lhs == pauli_rep(c).scale(p.sign as f64), || {
                format!("{a:?}·{b:?} ≠ {}·{c:?}", p.sign)
            })?;
            products += 1;
        }
    }
    for a in DiracUnit::all() {
        for b in DiracUnit::all() {
            let p = mul_units(a.into(), b.into()).map_err(|e| e.to_string())?;
            let UnitId::Dirac(c) = p.unit else {
                return Err(format!("{a:?}·{b:?} left the algebra"));
            };
            let lhs = dirac_rep(a) * dirac_rep(b);
            ensure(lhs == dirac_rep(c).scale(p.sign as f64), || {
                format!("{a:?}·{b:?} ≠ {}·{c:?}", p.sign)
            })?;
            products += 1;
        }
    }
    let mut seen = [false; 16];
    for n in 0..16 {
        let s = numbered_unit_map(n).map_err(|e| e.to_string())?;
        let UnitId::Dirac(u) = s.unit else {
            return Err(format!("unit {n} is not a Dirac unit"));
        };
        ensure(s.sign.abs() == 1, || {
            format!("unit {n} has sign {}", s.sign)
        })?;
        ensure(!seen[u.index()], || format!("unit {n} repeats {u:?}"))?;
        seen[u.index()] = true;
    }
    ensure(seen.iter().all(|&s| s), || {
        "numbered map misses a unit".into()
    })?;
    within(t.elapsed(), 1.0)?;
    Ok(format!("{products} products exact, 16-unit map bijective"))
}

// 2. Closed-form determinants and inverses against nalgebra.

fn closed_form_kernels() -> Check {
    let t = Instant::now();
    let mut rng = seeded_rng(2);
    let mut worst_det: f64 = 0.0;
    let mut worst_inv: f64 = 0.0;
    let mut check = |m: &Mat4, det: f64, inv: Option<Mat4>| -> Result<(), String> {
        let na = to_na(m);
        let want = na.determinant();
        let scale = m.max_abs().powi(4);
        let rel = (det - want).abs() / want.abs().max(scale);
        worst_det = worst_det.max(rel);
        ensure(rel <= 1e-10, || format!("det {det} vs {want}"))?;
        if let Some(inv) = inv {
            ensure(na.try_inverse().is_some(), || "oracle says singular".into())?;
            let r = (*m * inv - Mat4::identity()).max_abs();
            worst_inv = worst_inv.max(r);
            ensure(r <= 1e-9, || format!("M·M⁻¹ − I = {r:.3e}"))?;
        }
        Ok(())
    };
    for _ in 0..1000 {
        let s = random_beam(&mut rng);
        check(&s.representative(), det_sym4(&s), inv_sym4(&s).ok())?;
        let a = SkewA {
            a10: normal(&mut rng),
            a20: normal(&mut rng),
            a30: normal(&mut rng),
            avec0: random_vec(&mut rng),
        };
        check(&a.representative(), det_antisym4(&a), inv_antisym4(&a).ok())?;
        let mut c = [[0.0; 4]; 4];
        for row in c.iter_mut() {
            for x in row.iter_mut() {
                *x = normal(&mut rng);
            }
        }
        let z = CliffordElement4::from_components(c);
        check(&z.compose(), det_general4(&z), inv_general4(&z).ok())?;
    }
    within(t.elapsed(), 5.0)?;
    Ok(format!(
        "3×1000 matrices, det rel {worst_det:.1e}, inverse {worst_inv:.1e}"
    ))
}

// 3. Elementary transforms: closed forms against R Σ Rᵀ, and their invariants.

fn zeta_invariants(s: &BeamMatrix4, e: Vec3) -> Vec<(f64, i32)> {
    let mut out = vec![(s.sigma00, 1)];
    for l in 1..=3 {
        out.push((dot(e, s.vector(l)), 1));
        for m in l..=3 {
            out.push((dot(s.vector(l), s.vector(m)), 2));
        }
    }
    out
}

fn gamma_invariants(s: &BeamMatrix4) -> Vec<(f64, i32)> {
    let w = cross(s.v2, s.v3);
    vec![
        (s.sigma00, 1),
        (s.v1[0], 1),
        (s.v1[1], 1),
        (s.v1[2], 1),
        (w[0], 2),
        (w[1], 2),
        (w[2], 2),
        (dot(s.v2, s.v2) + dot(s.v3, s.v3), 2),
        (dot(s.v2, s.v1).powi(2) + dot(s.v3, s.v1).powi(2), 4),
    ]
}

/// `b` is the boosted vector (2 or 3), `o` the other one.
fn boost_invariants(s: &BeamMatrix4, e: Vec3, b: usize) -> Vec<(f64, i32)> {
    let o = 5 - b;
    let (vb, vo) = (s.vector(b), s.vector(o));
    let perp = vec3::sub(vb, vec3::scale(e, dot(e, vb)));
    let w = vec3::sub(cross(s.v2, s.v3), vec3::scale(s.v1, s.sigma00));
    vec![
        (dot(e, s.v1), 1),
        (perp[0], 1),
        (perp[1], 1),
        (perp[2], 1),
        (dot(e, vo), 1),
        (dot(vo, s.v1), 2),
        (s.sigma00.powi(2) - dot(vb, vb), 2),
        (dot(s.v1, s.v1) - dot(vo, vo), 2),
        (dot(w, w) - dot(vb, s.v1).powi(2), 4),
    ]
}

fn transform_equivalence() -> Check {
    let t = Instant::now();
    let mut rng = seeded_rng(3);
    let mut worst_form: f64 = 0.0;
    let mut worst_inv: f64 = 0.0;
    for _ in 0..1000 {
        let s = random_beam(&mut rng);
        let e = random_axis(&mut rng);
        let psi = rng.random_range(-PI..PI);
        let chi = rng.random_range(-1.0..1.0);
        let cases: [(ElementaryTransform, BeamMatrix4); 4] = [
            (
                ElementaryTransform::zeta(e, psi).unwrap(),
                apply_zeta(&s, e, psi).unwrap(),
            ),
            (ElementaryTransform::gamma(psi), apply_gamma(&s, psi)),
            (
                ElementaryTransform::beta2(e, chi).unwrap(),
                apply_beta2(&s, e, chi).unwrap(),
            ),
            (
                ElementaryTransform::beta3(e, chi).unwrap(),
                apply_beta3(&s, e, chi).unwrap(),
            ),
        ];
        for (tr, closed) in &cases {
            let conj =
                BeamMatrix4::from_matrix(&tr.representative().congruence(&s.representative()))
                    .map_err(|e| e.to_string())?;
            let scale = s.max_abs().max(closed.max_abs()).max(1.0);
            let d = closed.max_diff(&conj) / scale;
            worst_form = worst_form.max(d);
            ensure(d <= 1e-12, || format!("{tr:?}: closed form off by {d:.3e}"))?;
            let (before, after) = match tr {
                ElementaryTransform::ZetaRot { .. } => {
                    (zeta_invariants(&s, e), zeta_invariants(closed, e))
                }
                ElementaryTransform::GammaRot { .. } => {
                    (gamma_invariants(&s), gamma_invariants(closed))
                }
                ElementaryTransform::Beta2Boost { .. } => {
                    (boost_invariants(&s, e, 2), boost_invariants(closed, e, 2))
                }
                _ => (boost_invariants(&s, e, 3), boost_invariants(closed, e, 3)),
            };
            for (i, ((a, deg), (b, _))) in before.iter().zip(&after).enumerate() {
                let d = (a - b).abs() / scale.powi(*deg);
                worst_inv = worst_inv.max(d);
                ensure(d <= 1e-12, || {
                    format!("{}: invariant {i} moved by {d:.3e}", tr.kind())
                })?;
            }
        }
    }
    Ok(format!(
        "4×1000 transforms, closed form {worst_form:.1e}, invariants {worst_inv:.1e} (relative, {:.2} s)",
        t.elapsed().as_secs_f64()
    ))
}

// 4. Every 2-DoF recipe on random physical beams.

fn pattern_residual(b: &BeamMatrix4, idx: &[(usize, usize)]) -> f64 {
    let m = b.representative();
    idx.iter()
        .fold(0.0, |acc, &(i, j)| acc.max(m[(i, j)].abs()))
}

fn off_diagonal(b: &BeamMatrix4) -> f64 {
    let all: Vec<_> = (0..4)
        .flat_map(|i| (0..4).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    pattern_residual(b, &all)
}

fn recipe_correctness() -> Check {
    let t = Instant::now();
    let mut rng = seeded_rng(4);
    let (mut w_pat, mut w_emit, mut w_symp): (f64, f64, f64) = (0.0, 0.0, 0.0);
    for trial in 0..200 {
        let s = BeamMatrix4::from_matrix(&random_physical::<4, _>(&mut rng))
            .map_err(|e| e.to_string())?;
        let scale = s.max_abs().max(1.0);
        let (e1, e2) = emittances4(&s).map_err(|e| e.to_string())?;
        let mut runs: Vec<(String, TransformPipeline, BeamMatrix4, f64)> = Vec::new();
        let fail = |name: &str, e: symplectica::Error| format!("beam {trial}, {name}: {e}");
        for p in Pairing::ALL {
            let (pipe, out) = decouple_pair(&s, p).map_err(|e| fail(p.name(), e))?;
            let r = pattern_residual(&out, &p.zero_pattern());
            runs.push((p.name().into(), pipe, out, r));
        }
        for st in [DiagonalizeStrategy::BlockFirst, DiagonalizeStrategy::Direct] {
            let (pipe, out) = diagonalize4(&s, st).map_err(|e| fail("diagonalize", e))?;
            let r = off_diagonal(&out);
            runs.push((format!("diagonalize {st:?}"), pipe, out, r));
        }
        let (pipe, out) = normalize4(&s).map_err(|e| fail("normalize", e))?;
        // Either plane may carry the larger emittance.
        let r = out
            .max_diff(&BeamMatrix4::normal(e2, e1))
            .min(out.max_diff(&BeamMatrix4::normal(e1, e2)));
        runs.push(("normalize".into(), pipe, out, r));
        for c in Coordinate::ALL {
            let (pipe, out) = decouple_single(&s, c).map_err(|e| fail("single", e))?;
            let r = pattern_residual(&out, &c.zero_pattern());
            runs.push((format!("decouple {c:?}"), pipe, out, r));
        }
        for (name, pipe, out, r) in runs {
            let (f1, f2) = emittances4(&out).map_err(|e| fail(&name, e))?;
            let de = (f1 - e1).abs().max((f2 - e2).abs()) / scale;
            let sy = pipe.symplectic_residual();
            w_pat = w_pat.max(r / scale);
            w_emit = w_emit.max(de);
            w_symp = w_symp.max(sy);
            ensure(r / scale <= 1e-9, || {
                format!("beam {trial}, {name}: pattern {r:.3e}")
            })?;
            ensure(de <= 1e-10, || {
                format!("beam {trial}, {name}: emittance drift {de:.3e}")
            })?;
            ensure(sy <= 1e-9, || {
                format!("beam {trial}, {name}: symplectic {sy:.3e}")
            })?;
        }
    }
    within(t.elapsed(), 10.0)?;
    Ok(format!(
        "200 beams × 10 recipes, pattern {w_pat:.1e}, emittances {w_emit:.1e}, symplectic {w_symp:.1e}"
    ))
}

// 5. Regression against the published reference beam.

fn reference_regression() -> Check {
    let s = reference_beam();
    let (e1, e2) = emittances4(&s).map_err(|e| e.to_string())?;
    ensure((e1 - 5.0).abs() <= 0.3 && (e2 - 1.0).abs() <= 0.3, || {
        format!("emittances ({e1:.3}, {e2:.3})")
    })?;

    let steps = [
        BeamMatrix4::new(4.3, [-1.3, -1.6, 1.8], [-1.9, 0.6, -0.9], [0.7, -0.8, -2.7]),
        BeamMatrix4::new(
            3.5,
            [-1.1, -0.3, 2.1],
            [-1.6, 0.5, -0.7],
            [-0.5, -1.2, -0.4],
        ),
        BeamMatrix4::new(3.5, [-2.3, 0.0, 0.0], [0.0, 0.6, -1.7], [0.0, -1.1, -0.7]),
    ];
    let (pipe, _) = decouple_pair(&s, Pairing::XxYy).map_err(|e| e.to_string())?;
    ensure(pipe.len() == steps.len(), || {
        format!("{} steps", pipe.len())
    })?;
    let mut cur = s;
    let mut worst_step: f64 = 0.0;
    for (i, (t, want)) in pipe.steps().iter().zip(&steps).enumerate() {
        cur = t.apply(&cur);
        let d = cur.max_diff(want);
        worst_step = worst_step.max(d);
        ensure(d <= 0.15, || {
            format!("decoupling step {} off by {d:.3}", i + 1)
        })?;
    }

    let (_, n) = normalize4(&s).map_err(|e| e.to_string())?;
    let dn = n.max_diff(&BeamMatrix4::new(
        3.0,
        [-2.0, 0.0, 0.0],
        vec3::ZERO,
        vec3::ZERO,
    ));
    ensure(dn <= 0.3, || format!("normal form off by {dn:.3}"))?;

    let (_, x) = decouple_single(&s, Coordinate::X).map_err(|e| e.to_string())?;
    let want_x = BeamMatrix4::new(4.4, [2.6, -0.2, -0.8], [-0.2, 2.3, 0.4], [-0.8, 0.4, 2.8]);
    let dx = x.max_diff(&want_x);
    ensure(dx <= 0.2, || format!("x-decoupled beam off by {dx:.3}"))?;

    Ok(format!(
        "emittances ({e1:.3}, {e2:.3}), steps {worst_step:.3}, normal form {dn:.3}, x-decoupled {dx:.3}"
    ))
}

// 6. Three degrees of freedom.

fn eigen_emittances(s: &Mat6) -> Vec<f64> {
    let g = symplectic_form::<6>();
    let m = DMatrix::from_fn(6, 6, |i, j| (*s * g)[(i, j)]);
    let mut e: Vec<f64> = m
        .complex_eigenvalues()
        .iter()
        .filter(|z| z.im > 0.0)
        .map(|z| z.im)
        .collect();
    e.sort_by(|a, b| b.total_cmp(a));
    e
}

fn three_dof() -> Check {
    let t = Instant::now();
    let mut rng = seeded_rng(6);
    let (mut w_imag, mut w_symp, mut w_rec, mut w_diag, mut w_emit): (f64, f64, f64, f64, f64) =
        (0.0, 0.0, 0.0, 0.0, 0.0);
    for trial in 0..100 {
        let s = random_physical::<6, _>(&mut rng);
        BunchMatrix6::new(s).map_err(|e| e.to_string())?;
        let d = normalize6(&s).map_err(|e| format!("bunch {trial}: {e}"))?;
        let scale = s.max_abs().max(1.0);
        let rec = d.reconstruction_residual(&s) / scale;
        let e = &d.emittances;
        let diag = Mat6::from_diag([e[0], e[0], e[1], e[1], e[2], e[2]]);
        let dd = (d.normal_form - diag).max_abs() / scale;
        let want = eigen_emittances(&s);
        ensure(want.len() == 3, || {
            format!("bunch {trial}: oracle found {want:?}")
        })?;
        let de = e
            .iter()
            .zip(&want)
            .fold(0.0_f64, |m, (a, b)| m.max((a - b).abs()))
            / want[0];
        w_imag = w_imag.max(d.imag_residue);
        w_symp = w_symp.max(d.symplectic_residual());
        w_rec = w_rec.max(rec);
        w_diag = w_diag.max(dd);
        w_emit = w_emit.max(de);
        ensure(d.imag_residue <= 1e-9, || {
            format!("bunch {trial}: imaginary {:.3e}", d.imag_residue)
        })?;
        ensure(d.symplectic_residual() <= 1e-9, || {
            format!("bunch {trial}: symplectic {:.3e}", d.symplectic_residual())
        })?;
        ensure(rec <= 1e-8, || {
            format!("bunch {trial}: reconstruction {rec:.3e}")
        })?;
        ensure(dd <= 1e-8, || {
            format!("bunch {trial}: normal form {dd:.3e}")
        })?;
        ensure(de <= 1e-10, || {
            format!("bunch {trial}: emittances {e:?} vs {want:?}")
        })?;
    }
    within(t.elapsed(), 5.0)?;
    Ok(format!(
        "100 bunches, imag {w_imag:.1e}, symplectic {w_symp:.1e}, reconstruction {w_rec:.1e}, diagonal {w_diag:.1e}, emittances {w_emit:.1e}"
    ))
}

// 7. One degree of freedom and the invariance groups.

fn one_dof_and_invariance() -> Check {
    let mut rng = seeded_rng(7);
    let mut worst_agree: f64 = 0.0;
    let mut worst_inv: f64 = 0.0;
    for trial in 0..50 {
        let m: Mat2 = random_physical::<2, _>(&mut rng);
        let b = BeamMatrix2::from_matrix(&m).map_err(|e| e.to_string())?;
        let (p1, o1) = normalize2(&b, Normalize2Strategy::TwoStep).map_err(|e| e.to_string())?;
        let (_, o2) = normalize2(&b, Normalize2Strategy::Direct).map_err(|e| e.to_string())?;
        let scale = m.max_abs().max(1.0);
        let agree = (o1.representative() - o2.representative()).max_abs() / scale;
        let flat = o1.sigma[0].abs().max(o1.sigma[1].abs()) / scale;
        worst_agree = worst_agree.max(agree).max(flat);
        ensure(agree <= 1e-10, || {
            format!("beam {trial}: strategies differ by {agree:.3e}")
        })?;
        ensure(flat <= 1e-10, || {
            format!("beam {trial}: output vector {:?}", o1.sigma)
        })?;

        let psi = rng.random_range(-PI..PI);
        let i2 = invariance2(&p1.normalizer(), psi);
        let r2 = (i2.congruence(&m) - m).max_abs() / scale;

        let s4 = BeamMatrix4::from_matrix(&random_physical::<4, _>(&mut rng))
            .map_err(|e| e.to_string())?;
        let (p4, _) = normalize4(&s4).map_err(|e| e.to_string())?;
        let (a, c) = (rng.random_range(-PI..PI), rng.random_range(-PI..PI));
        let i4 = invariance4(&p4.normalizer(), a, c);
        let m4 = s4.representative();
        let r4 = (i4.congruence(&m4) - m4).max_abs() / m4.max_abs().max(1.0);

        let s6 = random_physical::<6, _>(&mut rng);
        let d6 = normalize6(&s6).map_err(|e| e.to_string())?;
        let angles = [
            rng.random_range(-PI..PI),
            rng.random_range(-PI..PI),
            rng.random_range(-PI..PI),
        ];
        let i6 = invariance6(&d6.n, angles);
        let r6 = (i6.congruence(&s6) - s6).max_abs() / s6.max_abs().max(1.0);

        for (order, r) in [(2, r2), (4, r4), (6, r6)] {
            worst_inv = worst_inv.max(r);
            ensure(r <= 1e-9, || {
                format!("tuple {trial}: order {order} invariance {r:.3e}")
            })?;
        }
    }
    Ok(format!(
        "50 beams, strategies agree {worst_agree:.1e}; 3×50 invariance tuples {worst_inv:.1e}"
    ))
}

// 8. Rendering.

fn render_determinism() -> Check {
    let text =
        std::fs::read_to_string(fixture("reference_beam.json")).map_err(|e| e.to_string())?;
    let file: BeamFile = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    let b = file.beam().map_err(|e| e.to_string())?;
    ensure(
        matches!(b, symplectica::cli::Beam::Two(x) if x.max_diff(&reference_beam()) < 1e-12),
        || "fixture is not the reference beam".into(),
    )?;
    let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| e.to_string())?;
    let first = cmd_render(&value).map_err(|e| e.to_string())?;
    let second = cmd_render(&value).map_err(|e| e.to_string())?;
    ensure(first == second, || "two runs differ".into())?;
    let golden =
        std::fs::read_to_string(fixture("reference_beam.svg")).map_err(|e| e.to_string())?;
    ensure(first.len() == 1 && first[0] == golden, || {
        "output differs from the committed SVG".into()
    })?;
    Ok(format!(
        "{} bytes, identical across runs and to golden",
        golden.len()
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("algebra exactness", algebra_exactness),
        ("closed-form kernels vs oracle", closed_form_kernels),
        (
            "transform equivalence and invariants",
            transform_equivalence,
        ),
        ("recipe correctness", recipe_correctness),
        ("reference beam regression", reference_regression),
        ("3-DoF normalization", three_dof),
        (
            "1-DoF normalization and invariance groups",
            one_dof_and_invariance,
        ),
        ("rendering determinism", render_determinism),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let ms = t.elapsed().as_millis();
        match outcome {
            Ok(detail) => println!("PASS {}. {name}: {detail} [{ms} ms]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {}. {name}: {why} [{ms} ms]", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
