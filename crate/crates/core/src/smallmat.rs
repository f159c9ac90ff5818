//! Fixed-size dense matrices and brute-force kernels.
//!
//! Everything here is deliberately generic and unclever: partial-pivot LU for
//! determinants, Gauss-Jordan for inverses, scaling-and-squaring for the
//! exponential. These serve both as the numerical backbone of the 3-DoF path
//! and as oracles for the closed-form 2×2 / 4×4 formulas elsewhere.

use std::fmt;
use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// Default tolerance for symplecticity checks.
pub const SYMPLECTIC_TOL: f64 = 1e-9;
/// Default tolerance for agreement between a closed form and an oracle.
pub const ORACLE_TOL: f64 = 1e-10;

/// Square real matrix of order `N`, row-major.
#[derive(Clone, Copy, PartialEq)]
pub struct Matrix<const N: usize>(pub [[f64; N]; N]);

pub type Mat2 = Matrix<2>;
pub type Mat3 = Matrix<3>;
pub type Mat4 = Matrix<4>;
pub type Mat6 = Matrix<6>;

impl<const N: usize> Default for Matrix<N> {
    fn default() -> Self {
        Self::zeros()
    }
}

impl<const N: usize> fmt::Debug for Matrix<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix<{N}>[")?;
        for row in &self.0 {
            write!(f, "  ")?;
            for v in row {
                write!(f, "{v:>12.6} ")?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl<const N: usize> Matrix<N> {
    pub const ORDER: usize = N;

    pub const fn zeros() -> Self {
        Matrix([[0.0; N]; N])
    }

    pub fn identity() -> Self {
        Self::from_diag([1.0; N])
    }

    pub fn from_diag(d: [f64; N]) -> Self {
        let mut m = Self::zeros();
        for (i, v) in d.into_iter().enumerate() {
            m.0[i][i] = v;
        }
        m
    }

    pub const fn from_rows(rows: [[f64; N]; N]) -> Self {
        Matrix(rows)
    }

    /// Builds a matrix from a row-major slice of length `N*N`.
    pub fn from_row_major(values: &[f64]) -> Result<Self> {
        if values.len() != N * N {
            return Err(Error::InvalidArgument(format!(
                "expected {} entries for an order-{N} matrix, got {}",
                N * N,
                values.len()
            )));
        }
        let mut m = Self::zeros();
        for (k, v) in values.iter().enumerate() {
            m.0[k / N][k % N] = *v;
        }
        Ok(m)
    }

    pub fn to_row_major(&self) -> Vec<f64> {
        self.0.iter().flatten().copied().collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<f64>> {
        self.0.iter().map(|r| r.to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros();
        for i in 0..N {
            for j in 0..N {
                t.0[j][i] = self.0[i][j];
            }
        }
        t
    }

    pub fn trace(&self) -> f64 {
        (0..N).map(|i| self.0[i][i]).sum()
    }

    pub fn diag(&self) -> [f64; N] {
        let mut d = [0.0; N];
        for (i, v) in d.iter_mut().enumerate() {
            *v = self.0[i][i];
        }
        d
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut m = *self;
        m.0.iter_mut().flatten().for_each(|v| *v *= s);
        m
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.0.iter().flatten().fold(0.0, |a, v| a.max(v.abs()))
    }

    /// Maximum absolute column sum (induced 1-norm).
    pub fn norm1(&self) -> f64 {
        (0..N)
            .map(|j| (0..N).map(|i| self.0[i][j].abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn is_finite(&self) -> bool {
        self.0.iter().flatten().all(|v| v.is_finite())
    }

    /// Largest |M - Mᵀ| entry.
    pub fn asymmetry(&self) -> f64 {
        (*self - self.transpose()).max_abs()
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        self.asymmetry() <= tol
    }

    /// `(M + Mᵀ)/2`.
    pub fn symmetrized(&self) -> Self {
        (*self + self.transpose()).scale(0.5)
    }

    /// `M X Mᵀ`, the congruence that transports a beam matrix.
    pub fn congruence(&self, x: &Self) -> Self {
        *self * *x * self.transpose()
    }
}

impl<const N: usize> Index<(usize, usize)> for Matrix<N> {
    type Output = f64;
    fn index(&self, (i, j): (usize, usize)) -> &f64 {
        &self.0[i][j]
    }
}

impl<const N: usize> IndexMut<(usize, usize)> for Matrix<N> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut f64 {
        &mut self.0[i][j]
    }
}

impl<const N: usize> Add for Matrix<N> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl<const N: usize> AddAssign for Matrix<N> {
    fn add_assign(&mut self, rhs: Self) {
        for i in 0..N {
            for j in 0..N {
                self.0[i][j] += rhs.0[i][j];
            }
        }
    }
}

impl<const N: usize> Sub for Matrix<N> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<const N: usize> Neg for Matrix<N> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1.0)
    }
}

impl<const N: usize> Mul for Matrix<N> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::zeros();
        for i in 0..N {
            for k in 0..N {
                let a = self.0[i][k];
                if a == 0.0 {
                    continue;
                }
                for j in 0..N {
                    out.0[i][j] += a * rhs.0[k][j];
                }
            }
        }
        out
    }
}

impl<const N: usize> Mul<f64> for Matrix<N> {
    type Output = Self;
    fn mul(self, s: f64) -> Self {
        self.scale(s)
    }
}

impl<const N: usize> Mul<[f64; N]> for Matrix<N> {
    type Output = [f64; N];
    fn mul(self, v: [f64; N]) -> [f64; N] {
        let mut out = [0.0; N];
        for (i, o) in out.iter_mut().enumerate() {
            *o = (0..N).map(|j| self.0[i][j] * v[j]).sum();
        }
        out
    }
}

/// LU factorization with partial pivoting. Returns the packed factors,
/// the permutation and its sign, or `None` when a zero pivot is hit.
fn lu<const N: usize>(m: &Matrix<N>) -> Option<(Matrix<N>, [usize; N], f64)> {
    let mut a = *m;
    let mut perm = [0usize; N];
    for (i, p) in perm.iter_mut().enumerate() {
        *p = i;
    }
    let mut sign = 1.0;
    for k in 0..N {
        let p = (k..N)
            .max_by(|&x, &y| a.0[x][k].abs().total_cmp(&a.0[y][k].abs()))
            .unwrap_or(k);
        if a.0[p][k] == 0.0 {
            return None;
        }
        if p != k {
            a.0.swap(p, k);
            perm.swap(p, k);
            sign = -sign;
        }
        for i in k + 1..N {
            let f = a.0[i][k] / a.0[k][k];
            a.0[i][k] = f;
            for j in k + 1..N {
                a.0[i][j] -= f * a.0[k][j];
            }
        }
    }
    Some((a, perm, sign))
}

/// Determinant by partial-pivot LU.
pub fn det_oracle<const N: usize>(m: &Matrix<N>) -> f64 {
    match lu(m) {
        Some((a, _, sign)) => (0..N).fold(sign, |d, i| d * a.0[i][i]),
        None => 0.0,
    }
}

/// Inverse by Gauss-Jordan elimination with partial pivoting.
///
/// A pivot smaller than `1e-14 * max|M|` is treated as singular.
pub fn inv_oracle<const N: usize>(m: &Matrix<N>) -> Result<Matrix<N>> {
    let scale = m.max_abs();
    if scale == 0.0 || !m.is_finite() {
        return Err(Error::SingularMatrix("zero or non-finite matrix".into()));
    }
    let mut a = *m;
    let mut inv = Matrix::<N>::identity();
    for k in 0..N {
        let p = (k..N)
            .max_by(|&x, &y| a.0[x][k].abs().total_cmp(&a.0[y][k].abs()))
            .unwrap_or(k);
        if a.0[p][k].abs() <= 1e-14 * scale {
            return Err(Error::SingularMatrix(format!("pivot {k} vanishes")));
        }
        a.0.swap(p, k);
        inv.0.swap(p, k);
        let d = a.0[k][k];
        for j in 0..N {
            a.0[k][j] /= d;
            inv.0[k][j] /= d;
        }
        for i in 0..N {
            if i == k {
                continue;
            }
            let f = a.0[i][k];
            if f == 0.0 {
                continue;
            }
            for j in 0..N {
                a.0[i][j] -= f * a.0[k][j];
                inv.0[i][j] -= f * inv.0[k][j];
            }
        }
    }
    Ok(inv)
}

/// Matrix exponential by scaling and squaring with a diagonal [6/6] Padé
/// approximant.
pub fn expm<const N: usize>(m: &Matrix<N>) -> Matrix<N> {
    // Padé coefficients c_k = (2q-k)! q! / ((2q)! k! (q-k)!) for q = 6.
    const C: [f64; 7] = [
        1.0,
        0.5,
        5.0 / 44.0,
        1.0 / 66.0,
        1.0 / 792.0,
        1.0 / 15840.0,
        1.0 / 665280.0,
    ];
    let norm = m.norm1();
    let squarings = if norm > 0.5 {
        (norm / 0.5).log2().ceil() as i32
    } else {
        0
    };
    let a = m.scale(0.5f64.powi(squarings));
    let id = Matrix::<N>::identity();
    let mut num = id;
    let mut den = id;
    let mut power = id;
    for (k, c) in C.iter().enumerate().skip(1) {
        power = power * a;
        let term = power.scale(*c);
        num += term;
        den += if k % 2 == 0 { term } else { -term };
    }
    // den is well conditioned for ||a|| <= 0.5
    let mut e = inv_oracle(&den).expect("Padé denominator is nonsingular for ||A|| <= 1/2") * num;
    for _ in 0..squarings {
        e = e * e;
    }
    e
}

/// The block-diagonal symplectic form: one `[[0, 1], [-1, 0]]` block per
/// degree of freedom. `N` must be even.
pub fn symplectic_form<const N: usize>() -> Matrix<N> {
    assert!(N.is_multiple_of(2), "symplectic form needs even order");
    let mut g = Matrix::<N>::zeros();
    for i in (0..N).step_by(2) {
        g.0[i][i + 1] = 1.0;
        g.0[i + 1][i] = -1.0;
    }
    g
}

/// `max |R γ Rᵀ - γ|`.
pub fn symplectic_residual<const N: usize>(r: &Matrix<N>, form: &Matrix<N>) -> f64 {
    (r.congruence(form) - *form).max_abs()
}

pub fn is_symplectic<const N: usize>(r: &Matrix<N>, form: &Matrix<N>, tol: f64) -> bool {
    symplectic_residual(r, form) <= tol
}

/// Inverse of a symplectic map, `R⁻¹ = -γ Rᵀ γ`, valid when `γ² = -1`.
pub fn symplectic_inverse<const N: usize>(r: &Matrix<N>, form: &Matrix<N>) -> Matrix<N> {
    -(*form * r.transpose() * *form)
}

/// Exponentiates `γ S` for a symmetric `S`, which always yields a symplectic map.
pub fn make_symplectic_from_symmetric<const N: usize>(
    s: &Matrix<N>,
    form: &Matrix<N>,
) -> Result<Matrix<N>> {
    let tol = 1e-12 * s.max_abs().max(1.0);
    if !s.is_symmetric(tol) {
        return Err(Error::InvalidArgument(format!(
            "generator must be symmetric (asymmetry {:.3e})",
            s.asymmetry()
        )));
    }
    Ok(expm(&(*form * *s)))
}

/// Cholesky factor `L` with `M = L Lᵀ`; `None` unless `M` is positive-definite.
pub fn cholesky<const N: usize>(m: &Matrix<N>) -> Option<Matrix<N>> {
    let mut l = Matrix::<N>::zeros();
    for i in 0..N {
        for j in 0..=i {
            let s: f64 = (0..j).map(|k| l.0[i][k] * l.0[j][k]).sum();
            if i == j {
                let d = m.0[i][i] - s;
                if d <= 0.0 || !d.is_finite() {
                    return None;
                }
                l.0[i][i] = d.sqrt();
            } else {
                l.0[i][j] = (m.0[i][j] - s) / l.0[j][j];
            }
        }
    }
    Some(l)
}

pub fn is_positive_definite<const N: usize>(m: &Matrix<N>) -> bool {
    cholesky(m).is_some()
}

/// Kronecker product of two 2×2 matrices, laid out as in the usual block rule.
pub fn kron2(a: &Mat2, b: &Mat2) -> Mat4 {
    let mut out = Mat4::zeros();
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    out.0[2 * i + k][2 * j + l] = a.0[i][j] * b.0[k][l];
                }
            }
        }
    }
    out
}
