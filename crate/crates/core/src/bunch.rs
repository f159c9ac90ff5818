//! Eigen-based normal form for any number of degrees of freedom.
//!
//! The eigenvalues of `Σγ` come in pairs `∓iε`, one pair per plane. The
//! eigenvectors for `−iε`, scaled so that `EᵀγE = γ` with the plain
//! transpose, give a real symplectic `N = E(1 + iβ)/√2` with
//! `Σ = N Σ̃ Nᵀ`. Everything here works at orders 2, 4 and 6.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::clifford::{pauli_rep, PauliUnit};
use crate::error::{Error, Result};
use crate::pipeline::matrix_rows;
use crate::smallmat::{
    expm, is_positive_definite, symplectic_form, symplectic_inverse, symplectic_residual, Mat2,
    Mat6, Matrix,
};

/// Relative gap below which two emittances count as equal.
pub const DEGENERATE_EMITTANCE_TOL: f64 = 1e-8;

type CVec<const N: usize> = [Complex64; N];

/// `blockdiag(b, b, …)` for a 2×2 block.
pub fn block_extension<const N: usize>(b: &Mat2) -> Matrix<N> {
    let mut m = Matrix::<N>::zeros();
    for p in (0..N).step_by(2) {
        for i in 0..2 {
            for j in 0..2 {
                m[(p + i, p + j)] = b[(i, j)];
            }
        }
    }
    m
}

/// The 6×6 extensions α, β, γ of the three non-scalar Pauli units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymplecticForm6 {
    pub alpha: Mat6,
    pub beta: Mat6,
    pub gamma: Mat6,
}

impl Default for SymplecticForm6 {
    fn default() -> Self {
        SymplecticForm6 {
            alpha: block_extension(&pauli_rep(PauliUnit::Beta1)),
            beta: block_extension(&pauli_rep(PauliUnit::Beta2)),
            gamma: block_extension(&pauli_rep(PauliUnit::Gamma)),
        }
    }
}

/// A symmetric matrix of second moments.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct BunchMatrix<const N: usize>(#[serde(with = "matrix_rows")] Matrix<N>);

pub type BunchMatrix6 = BunchMatrix<6>;

impl<const N: usize> BunchMatrix<N> {
    pub fn new(m: Matrix<N>) -> Result<Self> {
        let tol = 1e-9 * m.max_abs().max(1.0);
        if !m.is_finite() || !m.is_symmetric(tol) {
            return Err(Error::InvalidArgument(format!(
                "bunch matrix must be finite and symmetric (asymmetry {:.3e})",
                m.asymmetry()
            )));
        }
        Ok(BunchMatrix(m.symmetrized()))
    }

    pub fn matrix(&self) -> &Matrix<N> {
        &self.0
    }

    pub fn is_physical(&self) -> bool {
        is_positive_definite(&self.0)
    }
}

/// `N`, the emittances and the normal form `Σ̃` with `Σ = N Σ̃ Nᵀ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormalDecomposition<const N: usize> {
    #[serde(with = "matrix_rows")]
    pub n: Matrix<N>,
    /// Largest first.
    pub emittances: Vec<f64>,
    #[serde(with = "matrix_rows")]
    pub normal_form: Matrix<N>,
    /// Largest imaginary part dropped when `N` was made real.
    pub imag_residue: f64,
}

pub type NormalDecomposition6 = NormalDecomposition<6>;

impl<const N: usize> NormalDecomposition<N> {
    /// `max |NγNᵀ − γ|`.
    pub fn symplectic_residual(&self) -> f64 {
        symplectic_residual(&self.n, &symplectic_form::<N>())
    }

    /// `max |NΣ̃Nᵀ − Σ|`.
    pub fn reconstruction_residual(&self, sigma: &Matrix<N>) -> f64 {
        (self.n.congruence(&self.normal_form) - *sigma).max_abs()
    }
}

/// Coefficients `c₀ = 1, c₁, …, c_N` of `det(λ − M) = Σ c_k λ^(N−k)`,
/// by Faddeev–LeVerrier.
pub fn characteristic_polynomial<const N: usize>(m: &Matrix<N>) -> Vec<f64> {
    let mut c = vec![1.0];
    let mut mk = Matrix::<N>::zeros();
    for k in 1..=N {
        mk = *m * mk + Matrix::identity().scale(c[k - 1]);
        c.push(-(*m * mk).trace() / k as f64);
    }
    c
}

fn sigma_gamma<const N: usize>(s: &Matrix<N>) -> Matrix<N> {
    *s * symplectic_form::<N>()
}

fn check_order<const N: usize>() -> Result<()> {
    if !matches!(N, 2 | 4 | 6) {
        return Err(Error::InvalidArgument(format!(
            "order {N} not supported; expected 2, 4 or 6"
        )));
    }
    Ok(())
}

fn check_physical<const N: usize>(s: &Matrix<N>) -> Result<()> {
    check_order::<N>()?;
    if !s.is_finite() || !s.is_symmetric(1e-9 * s.max_abs().max(1.0)) {
        return Err(Error::InvalidArgument(
            "bunch matrix is not symmetric".into(),
        ));
    }
    if !is_positive_definite(s) {
        return Err(Error::NonPhysical(
            "bunch matrix is not positive-definite".into(),
        ));
    }
    Ok(())
}

fn eval(p: &[f64], x: f64) -> (f64, f64) {
    p.iter()
        .fold((0.0, 0.0), |(v, d), c| (v * x + c, d * x + v))
}

/// Real roots of a monic polynomial of degree 1..=3 (highest first).
fn real_roots(p: &[f64]) -> Result<Vec<f64>> {
    let complex = || Error::NonPhysical("squared emittances are complex".into());
    let mut roots = match p.len() - 1 {
        1 => vec![-p[1]],
        2 => {
            let (b, c) = (p[1], p[2]);
            let mut disc = b * b - 4.0 * c;
            if disc < 0.0 && disc >= -1e-12 * b * b {
                disc = 0.0;
            }
            if disc < 0.0 {
                return Err(complex());
            }
            let q = -0.5 * (b + b.signum() * disc.sqrt());
            if q == 0.0 {
                vec![0.0, 0.0]
            } else {
                vec![q, c / q]
            }
        }
        3 => {
            let (a, b, c) = (p[1], p[2], p[3]);
            let shift = a / 3.0;
            let pp = b - a * a / 3.0;
            let qq = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
            if pp >= 0.0 {
                // Only a triple root has real roots here.
                if qq.abs() > 1e-9 * (a * a * a).abs().max(1.0) {
                    return Err(complex());
                }
                vec![-shift; 3]
            } else {
                let r = 2.0 * (-pp / 3.0).sqrt();
                let mut arg = 3.0 * qq / (pp * r);
                if arg.abs() > 1.0 + 1e-7 {
                    return Err(complex());
                }
                arg = arg.clamp(-1.0, 1.0);
                let th = arg.acos() / 3.0;
                (0..3)
                    .map(|k| r * (th - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos() - shift)
                    .collect()
            }
        }
        d => {
            return Err(Error::InvalidArgument(format!(
                "no closed form for degree {d}"
            )))
        }
    };
    for x in roots.iter_mut() {
        for _ in 0..3 {
            let (v, d) = eval(p, *x);
            if d == 0.0 {
                break;
            }
            let next = *x - v / d;
            if eval(p, next).0.abs() < v.abs() {
                *x = next;
            } else {
                break;
            }
        }
    }
    roots.sort_by(|a, b| b.total_cmp(a));
    Ok(roots)
}

/// Squared emittances as the roots of the even characteristic polynomial
/// of `Σγ`, largest first.
fn squared_emittances<const N: usize>(s: &Matrix<N>) -> Result<Vec<f64>> {
    let c = characteristic_polynomial(&sigma_gamma(s));
    // Π(λ² + ν) has c_{2j} = e_j(ν); the ν are the roots of Σ(−1)^j e_j x^(n−j).
    let q: Vec<f64> = (0..=N / 2)
        .map(|j| if j % 2 == 0 { c[2 * j] } else { -c[2 * j] })
        .collect();
    let nu = real_roots(&q)?;
    if nu.iter().any(|v| *v <= 0.0) {
        return Err(Error::NonPhysical(format!(
            "squared emittances {nu:?} are not all positive"
        )));
    }
    Ok(nu)
}

/// The `N/2` emittances, largest first.
pub fn emittances<const N: usize>(s: &Matrix<N>) -> Result<Vec<f64>> {
    check_physical(s)?;
    Ok(squared_emittances(s)?.iter().map(|v| v.sqrt()).collect())
}

pub fn emittances6(s: &Mat6) -> Result<[f64; 3]> {
    let e = emittances(s)?;
    Ok([e[0], e[1], e[2]])
}

/// Eigenpairs of `Σγ`, ordered plane by plane (largest emittance first),
/// `−iε` before `+iε` within a plane; the second vector of a plane is the
/// conjugate of the first.
#[derive(Debug, Clone, PartialEq)]
pub struct EigenPairs<const N: usize> {
    pub values: Vec<Complex64>,
    pub vectors: Vec<CVec<N>>,
}

impl<const N: usize> EigenPairs<N> {
    /// `max |Σγ e − λ e|` over all pairs.
    pub fn residual(&self, s: &Matrix<N>) -> f64 {
        let m = sigma_gamma(s);
        let mut r: f64 = 0.0;
        for (lam, v) in self.values.iter().zip(&self.vectors) {
            for i in 0..N {
                let mv: Complex64 = (0..N).map(|j| v[j] * m[(i, j)]).sum();
                r = r.max((mv - lam * v[i]).norm());
            }
        }
        r
    }
}

/// Solves `(M − μ) x = b` by elimination with partial pivoting; tiny pivots
/// are nudged so that solving right at an eigenvalue still works.
fn solve_shifted<const N: usize>(m: &Matrix<N>, mu: Complex64, b: CVec<N>) -> CVec<N> {
    let scale = m.max_abs().max(1.0);
    let mut a = [[Complex64::new(0.0, 0.0); N]; N];
    for i in 0..N {
        for j in 0..N {
            a[i][j] = Complex64::new(m[(i, j)], 0.0);
        }
        a[i][i] -= mu;
    }
    let mut x = b;
    for col in 0..N {
        let piv = (col..N)
            .max_by(|&p, &q| a[p][col].norm().total_cmp(&a[q][col].norm()))
            .unwrap_or(col);
        a.swap(col, piv);
        x.swap(col, piv);
        if a[col][col].norm() < 1e-14 * scale {
            a[col][col] = Complex64::new(1e-14 * scale, 0.0);
        }
        for r in col + 1..N {
            let f = a[r][col] / a[col][col];
            let pivot_row = a[col];
            for (dst, src) in a[r][col..].iter_mut().zip(&pivot_row[col..]) {
                *dst -= f * src;
            }
            let t = x[col];
            x[r] -= f * t;
        }
    }
    for r in (0..N).rev() {
        let mut acc = x[r];
        for c in r + 1..N {
            acc -= a[r][c] * x[c];
        }
        x[r] = acc / a[r][r];
    }
    x
}

fn normalized<const N: usize>(v: CVec<N>) -> CVec<N> {
    let n = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.map(|z| z / n)
}

fn conj<const N: usize>(v: &CVec<N>) -> CVec<N> {
    v.map(|z| z.conj())
}

pub fn eig_sigma_gamma<const N: usize>(s: &Matrix<N>) -> Result<EigenPairs<N>> {
    check_physical(s)?;
    let eps: Vec<f64> = squared_emittances(s)?.iter().map(|v| v.sqrt()).collect();
    let m = sigma_gamma(s);
    let mut values = Vec::with_capacity(N);
    let mut vectors = Vec::with_capacity(N);
    for (r, e) in eps.iter().enumerate() {
        let lam = Complex64::new(0.0, -e);
        let mut v: CVec<N> = std::array::from_fn(|i| {
            let base = if i == 2 * r { 1.0 } else { 0.0 };
            Complex64::new(base + 0.1 + 0.03 * i as f64, 0.05 * i as f64)
        });
        for _ in 0..3 {
            v = normalized(solve_shifted(&m, lam, v));
        }
        values.push(lam);
        vectors.push(v);
        values.push(lam.conj());
        vectors.push(conj(&v));
    }
    Ok(EigenPairs { values, vectors })
}

fn pairing_scalar<const N: usize>(a: &CVec<N>, b: &CVec<N>) -> Complex64 {
    // aᵀ γ b with the plain transpose.
    (0..N)
        .step_by(2)
        .map(|i| a[i] * b[i + 1] - a[i + 1] * b[i])
        .sum()
}

/// Scales each column pair so that `EᵀγE = γ` (plain transpose).
pub fn symplectic_normalize_eigvecs<const N: usize>(e: &[CVec<N>]) -> Result<Vec<CVec<N>>> {
    if e.len() != N {
        return Err(Error::InvalidArgument(format!(
            "expected {N} eigenvectors, got {}",
            e.len()
        )));
    }
    let mut out = e.to_vec();
    for p in (0..N).step_by(2) {
        let h = pairing_scalar(&e[p], &e[p + 1]);
        let size = e[p]
            .iter()
            .chain(&e[p + 1])
            .map(|z| z.norm_sqr())
            .sum::<f64>();
        if h.norm() <= 1e-14 * size.max(f64::MIN_POSITIVE) {
            return Err(Error::DegenerateEigenvector(format!(
                "pairing scalar of columns {p}, {} vanishes",
                p + 1
            )));
        }
        let root = h.sqrt();
        out[p] = e[p].map(|z| z / root);
        out[p + 1] = e[p + 1].map(|z| z / root);
    }
    Ok(out)
}

/// Normal decomposition `Σ = N Σ̃ Nᵀ` at order 2, 4 or 6.
pub fn normalize_eigen<const N: usize>(s: &Matrix<N>) -> Result<NormalDecomposition<N>> {
    let pairs = eig_sigma_gamma(s)?;
    let emittances: Vec<f64> = pairs.values.iter().step_by(2).map(|l| -l.im).collect();
    let top = emittances[0];
    for w in emittances.windows(2) {
        if (w[0] - w[1]).abs() <= DEGENERATE_EMITTANCE_TOL * top {
            return Err(Error::DegenerateEmittance(format!(
                "emittances {} and {} coincide",
                w[0], w[1]
            )));
        }
    }
    for p in (0..N).step_by(2) {
        let h = pairing_scalar(&pairs.vectors[p], &pairs.vectors[p + 1]);
        if h.im <= 0.0 {
            return Err(Error::NonPhysical(format!(
                "eigenvector pairing scalar {h} has the wrong orientation"
            )));
        }
    }
    let e = symplectic_normalize_eigvecs(&pairs.vectors)?;
    let i = Complex64::new(0.0, 1.0);
    let k = std::f64::consts::FRAC_1_SQRT_2;
    let mut n = Matrix::<N>::zeros();
    let mut imag_residue: f64 = 0.0;
    for p in (0..N).step_by(2) {
        for row in 0..N {
            let c0 = (e[p][row] + i * e[p + 1][row]) * k;
            let c1 = (i * e[p][row] + e[p + 1][row]) * k;
            n[(row, p)] = c0.re;
            n[(row, p + 1)] = c1.re;
            imag_residue = imag_residue.max(c0.im.abs()).max(c1.im.abs());
        }
    }
    let mut diag = [0.0; N];
    for (r, eps) in emittances.iter().enumerate() {
        diag[2 * r] = *eps;
        diag[2 * r + 1] = *eps;
    }
    Ok(NormalDecomposition {
        n,
        emittances,
        normal_form: Matrix::from_diag(diag),
        imag_residue,
    })
}

pub fn normalize6(s: &Mat6) -> Result<NormalDecomposition6> {
    normalize_eigen(s)
}

/// `N exp(Σ_r γ^r ψ_r) N⁻¹`: independent phase rotations in each plane.
pub fn invariance_eigen<const N: usize>(n: &Matrix<N>, psi: &[f64]) -> Result<Matrix<N>> {
    if psi.len() != N / 2 {
        return Err(Error::InvalidArgument(format!(
            "expected {} angles, got {}",
            N / 2,
            psi.len()
        )));
    }
    let mut gen = Matrix::<N>::zeros();
    for (r, a) in psi.iter().enumerate() {
        gen[(2 * r, 2 * r + 1)] = *a;
        gen[(2 * r + 1, 2 * r)] = -a;
    }
    let g = symplectic_form::<N>();
    Ok(*n * expm(&gen) * symplectic_inverse(n, &g))
}

pub fn invariance6(n: &Mat6, psi: [f64; 3]) -> Mat6 {
    invariance_eigen(n, &psi).expect("three angles for three planes")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::smallmat::{make_symplectic_from_symmetric, Mat4};
    use approx::assert_relative_eq;
    use proptest::prelude::*;

    fn arb_bunch<const N: usize>() -> impl Strategy<Value = Matrix<N>> {
        (prop::collection::vec(-1.0..1.0f64, N * N), 0.3..1.5f64).prop_map(|(a, d)| {
            let mut m = Matrix::<N>::zeros();
            for i in 0..N {
                for j in 0..N {
                    m[(i, j)] = a[N * i + j];
                }
            }
            m * m.transpose() + Matrix::identity().scale(d)
        })
    }

    fn arb_symmetric<const N: usize>() -> impl Strategy<Value = Matrix<N>> {
        prop::collection::vec(-0.4..0.4f64, N * N).prop_map(|a| {
            let mut m = Matrix::<N>::zeros();
            for i in 0..N {
                for j in 0..N {
                    m[(i, j)] = a[N * i + j];
                }
            }
            (m + m.transpose()).scale(0.5)
        })
    }

    fn nalgebra_emittances<const N: usize>(s: &Matrix<N>) -> Vec<f64> {
        let m = sigma_gamma(s);
        let d = nalgebra::DMatrix::from_fn(N, N, |i, j| m[(i, j)]);
        let mut e: Vec<f64> = d
            .complex_eigenvalues()
            .iter()
            .filter(|z| z.im < 0.0)
            .map(|z| -z.im)
            .collect();
        e.sort_by(|a, b| b.total_cmp(a));
        e
    }

    #[test]
    fn unit_identities() {
        let f = SymplecticForm6::default();
        assert_eq!(f.alpha * f.beta, f.gamma);
        assert_eq!(f.alpha * f.alpha, Mat6::identity());
        assert_eq!(f.beta * f.beta, Mat6::identity());
        assert_eq!(f.gamma * f.gamma, -Mat6::identity());
        assert_eq!(f.gamma, symplectic_form::<6>());
    }

    #[test]
    fn emittance_examples() {
        let d = Mat6::from_diag([1.0, 1.0, 2.0, 2.0, 3.0, 3.0]);
        let e = emittances6(&d).unwrap();
        for (got, want) in e.iter().zip([3.0, 2.0, 1.0]) {
            assert_relative_eq!(*got, want, epsilon = 1e-12);
        }
        let e = emittances6(&Mat6::identity()).unwrap();
        for got in e {
            assert_relative_eq!(got, 1.0, epsilon = 1e-7);
        }
        assert!(matches!(
            emittances6(&Mat6::from_diag([1.0, -1.0, 1.0, 1.0, 1.0, 1.0])),
            Err(Error::NonPhysical(_))
        ));
    }

    #[test]
    fn eigenvalue_ordering() {
        let d = Mat6::from_diag([1.0, 1.0, 2.0, 2.0, 3.0, 3.0]);
        let p = eig_sigma_gamma(&d).unwrap();
        let im: Vec<f64> = p.values.iter().map(|z| z.im).collect();
        for (got, want) in im.iter().zip([-3.0, 3.0, -2.0, 2.0, -1.0, 1.0]) {
            assert!((got - want).abs() < 1e-12, "{im:?}");
        }
        let p = eig_sigma_gamma(&Mat6::identity()).unwrap();
        for z in p.values {
            assert!((z.norm() - 1.0).abs() < 1e-7 && z.re.abs() < 1e-12);
        }
    }

    #[test]
    fn normal_input() {
        let d = Mat6::from_diag([1.0, 1.0, 2.0, 2.0, 3.0, 3.0]);
        let nd = normalize6(&d).unwrap();
        let want = Mat6::from_diag([3.0, 3.0, 2.0, 2.0, 1.0, 1.0]);
        assert!((nd.normal_form - want).max_abs() <= 1e-12);
        assert!(nd.symplectic_residual() <= 1e-12);
        assert!(nd.reconstruction_residual(&d) <= 1e-12);
    }

    #[test]
    fn degenerate_emittances_rejected() {
        assert!(matches!(
            normalize6(&Mat6::identity()),
            Err(Error::DegenerateEmittance(_))
        ));
    }

    #[test]
    fn odd_orders_rejected() {
        let m = Matrix::<3>::identity();
        assert!(matches!(emittances(&m), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn eigvec_scaling_is_undone() {
        let s = Mat4::from_rows([
            [3.0, 0.5, 0.2, 0.1],
            [0.5, 2.0, 0.3, -0.2],
            [0.2, 0.3, 1.5, 0.4],
            [0.1, -0.2, 0.4, 1.0],
        ]);
        let p = eig_sigma_gamma(&s).unwrap();
        let e = symplectic_normalize_eigvecs(&p.vectors).unwrap();
        let again = symplectic_normalize_eigvecs(&e).unwrap();
        let mut scaled = p.vectors.clone();
        for v in scaled.iter_mut().take(2) {
            *v = v.map(|z| z * 2.5);
        }
        let back = symplectic_normalize_eigvecs(&scaled).unwrap();
        for (a, (b, c)) in e.iter().zip(again.iter().zip(&back)) {
            for i in 0..4 {
                assert!((a[i] - b[i]).norm() < 1e-12);
                assert!((a[i] - c[i]).norm() < 1e-12);
            }
        }
        let zero = vec![[Complex64::new(0.0, 0.0); 4]; 4];
        assert!(matches!(
            symplectic_normalize_eigvecs(&zero),
            Err(Error::DegenerateEigenvector(_))
        ));
    }

    #[test]
    fn invariance_trivial() {
        let n = Mat6::identity();
        assert!((invariance6(&n, [0.0; 3]) - Mat6::identity()).max_abs() < 1e-15);
        let d = Mat6::from_diag([1.0, 1.0, 2.0, 2.0, 3.0, 3.0]);
        let i = invariance6(&n, [0.3, -1.2, 2.0]);
        assert!((i.congruence(&d) - d).max_abs() < 1e-13);
    }

    fn check_decomposition<const N: usize>(
        s: &Matrix<N>,
    ) -> std::result::Result<(), TestCaseError> {
        let nd = normalize_eigen(s).map_err(|e| TestCaseError::fail(e.to_string()))?;
        prop_assert!(nd.imag_residue <= 1e-9, "imag {}", nd.imag_residue);
        prop_assert!(
            nd.symplectic_residual() <= 1e-9,
            "sympl {}",
            nd.symplectic_residual()
        );
        prop_assert!(nd.reconstruction_residual(s) <= 1e-8 * s.max_abs().max(1.0));
        let oracle = nalgebra_emittances(s);
        for (a, b) in nd.emittances.iter().zip(&oracle) {
            prop_assert!(
                (a - b).abs() <= 1e-10 * oracle[0].max(1.0),
                "{:?} vs {:?}",
                nd.emittances,
                oracle
            );
        }
        Ok(())
    }

    proptest! {
        #[test]
        fn characteristic_polynomial_is_even(s in arb_bunch::<6>()) {
            let c = characteristic_polynomial(&sigma_gamma(&s));
            let norm = s.max_abs() * 6.0;
            for k in (1..=6).step_by(2) {
                prop_assert!(c[k].abs() <= 1e-9 * norm.powi(k as i32));
            }
        }

        #[test]
        fn eigenpairs_are_accurate(s in arb_bunch::<6>()) {
            let p = eig_sigma_gamma(&s).unwrap();
            prop_assert!(p.residual(&s) <= 1e-10 * s.max_abs().max(1.0));
        }

        #[test]
        fn normalize_order_six(s in arb_bunch::<6>()) {
            check_decomposition(&s)?;
        }

        #[test]
        fn normalize_order_four(s in arb_bunch::<4>()) {
            check_decomposition(&s)?;
        }

        #[test]
        fn emittances_are_invariants(s in arb_bunch::<6>(), g in arb_symmetric::<6>()) {
            let r = make_symplectic_from_symmetric(&g, &symplectic_form::<6>()).unwrap();
            let a = emittances6(&s).unwrap();
            let b = emittances6(&r.congruence(&s)).unwrap();
            for (x, y) in a.iter().zip(&b) {
                prop_assert!((x - y).abs() <= 1e-9 * x);
            }
        }

        #[test]
        fn invariance_fixes_bunch(s in arb_bunch::<6>(), psi in prop::array::uniform3(-3.0..3.0f64)) {
            let nd = normalize6(&s).unwrap();
            let i = invariance6(&nd.n, psi);
            prop_assert!((i.congruence(&s) - s).max_abs() <= 1e-9 * s.max_abs());
        }
    }
}
