//! Unit algebras of the real Pauli (2×2) and real Dirac (4×4) matrices.
//!
//! Two algebras are covered:
//!
//! * `Cl(2,0)`, the Cockle quaternions, with units `1, β₁, β₂, γ`;
//! * `Cl(3,1)`, sixteen units `1, ζ_k, γ^m, β^m_k` (k, m = 1..3).
//!
//! Every real matrix of order 2 (4) is a unique real combination of the
//! units, and the representatives are orthogonal, so coefficients are read
//! off with a trace. The 4×4 coefficients are stored in the *component
//! matrix* `Z[k][l]`: `Z[0][0]` on `1`, `Z[k][0]` on `ζ_k`, `Z[0][m]` on
//! `γ^m`, and `Z[k][m]` on `β^m_k`. Column `m ≥ 1` of the lower 3×3 block is
//! therefore the vector `Z⃗^m`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::smallmat::{Mat2, Mat4};

type IntMat2 = [[i8; 2]; 2];
type IntMat4 = [[i8; 4]; 4];

const P_ONE: IntMat2 = [[1, 0], [0, 1]];
const P_BETA1: IntMat2 = [[1, 0], [0, -1]];
const P_BETA2: IntMat2 = [[0, 1], [1, 0]];
const P_GAMMA: IntMat2 = [[0, 1], [-1, 0]];

const fn kron(sign: i8, a: IntMat2, b: IntMat2) -> IntMat4 {
    let mut out = [[0i8; 4]; 4];
    let mut i = 0;
    while i < 4 {
        let mut j = 0;
        while j < 4 {
            out[i][j] = sign * a[i / 2][j / 2] * b[i % 2][j % 2];
            j += 1;
        }
        i += 1;
    }
    out
}

/// Dirac representatives indexed by component position `4*k + l`.
const DIRAC_REPS: [IntMat4; 16] = [
    // row 0: 1, γ¹, γ², γ³
    kron(1, P_ONE, P_ONE),
    kron(1, P_ONE, P_GAMMA),
    kron(1, P_GAMMA, P_BETA1),
    kron(1, P_GAMMA, P_BETA2),
    // row 1: ζ₁, β¹₁, β²₁, β³₁
    kron(-1, P_BETA1, P_GAMMA),
    kron(1, P_BETA1, P_ONE),
    kron(1, P_BETA2, P_BETA2),
    kron(-1, P_BETA2, P_BETA1),
    // row 2: ζ₂, β¹₂, β²₂, β³₂
    kron(-1, P_GAMMA, P_ONE),
    kron(-1, P_GAMMA, P_GAMMA),
    kron(1, P_ONE, P_BETA1),
    kron(1, P_ONE, P_BETA2),
    // row 3: ζ₃, β¹₃, β²₃, β³₃
    kron(-1, P_BETA2, P_GAMMA),
    kron(1, P_BETA2, P_ONE),
    kron(-1, P_BETA1, P_BETA2),
    kron(1, P_BETA1, P_BETA1),
];

/// Which unit algebra a unit belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Algebra {
    Cl20,
    Cl31,
}

/// Units of the Cockle quaternions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PauliUnit {
    One,
    Beta1,
    Beta2,
    Gamma,
}

impl PauliUnit {
    pub const ALL: [PauliUnit; 4] = [Self::One, Self::Beta1, Self::Beta2, Self::Gamma];

    /// Position in the coefficient vector `(1, β₁, β₂, γ)`.
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn is_complex(self) -> bool {
        self == Self::Gamma
    }

    fn int_rep(self) -> IntMat2 {
        match self {
            Self::One => P_ONE,
            Self::Beta1 => P_BETA1,
            Self::Beta2 => P_BETA2,
            Self::Gamma => P_GAMMA,
        }
    }
}

/// A unit of `Cl(3,1)`, identified by its slot `(row, col)` in the
/// component matrix.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DiracUnit {
    row: u8,
    col: u8,
}

impl DiracUnit {
    pub const ONE: DiracUnit = DiracUnit { row: 0, col: 0 };

    /// `ζ_k`, k = 1..3.
    pub fn zeta(k: usize) -> Result<Self> {
        Self::from_slot(check_axis(k)?, 0)
    }

    /// `γ^m`, m = 1..3.
    pub fn gamma(m: usize) -> Result<Self> {
        Self::from_slot(0, check_axis(m)?)
    }

    /// `β^m_k`, m, k = 1..3.
    pub fn beta(m: usize, k: usize) -> Result<Self> {
        Self::from_slot(check_axis(k)?, check_axis(m)?)
    }

    pub fn from_slot(row: usize, col: usize) -> Result<Self> {
        if row > 3 || col > 3 {
            return Err(Error::InvalidArgument(format!(
                "component slot ({row}, {col}) out of range"
            )));
        }
        Ok(DiracUnit {
            row: row as u8,
            col: col as u8,
        })
    }

    /// Unit number `4*row + col`, 0..15.
    pub fn from_index(i: usize) -> Result<Self> {
        if i >= 16 {
            return Err(Error::InvalidArgument(format!(
                "unit index {i} out of range"
            )));
        }
        Self::from_slot(i / 4, i % 4)
    }

    pub fn all() -> impl Iterator<Item = DiracUnit> {
        (0..16).map(|i| DiracUnit {
            row: (i / 4) as u8,
            col: (i % 4) as u8,
        })
    }

    pub fn row(self) -> usize {
        self.row as usize
    }

    pub fn col(self) -> usize {
        self.col as usize
    }

    pub fn index(self) -> usize {
        4 * self.row() + self.col()
    }

    /// ζ and γ units square to −1; everything else is bireal or the scalar.
    pub fn is_complex(self) -> bool {
        (self.row == 0) != (self.col == 0)
    }

    pub fn is_bireal(self) -> bool {
        self.row != 0 && self.col != 0
    }

    fn int_rep(self) -> &'static IntMat4 {
        &DIRAC_REPS[self.index()]
    }
}

impl fmt::Debug for DiracUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.row, self.col) {
            (0, 0) => write!(f, "1"),
            (k, 0) => write!(f, "ζ{k}"),
            (0, m) => write!(f, "γ^{m}"),
            (k, m) => write!(f, "β^{m}_{k}"),
        }
    }
}

impl fmt::Display for DiracUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

fn check_axis(i: usize) -> Result<usize> {
    if (1..=3).contains(&i) {
        Ok(i)
    } else {
        Err(Error::InvalidArgument(format!(
            "axis index {i} not in 1..=3"
        )))
    }
}

/// A unit of either algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum UnitId {
    Pauli(PauliUnit),
    Dirac(DiracUnit),
}

impl UnitId {
    pub fn algebra(self) -> Algebra {
        match self {
            UnitId::Pauli(_) => Algebra::Cl20,
            UnitId::Dirac(_) => Algebra::Cl31,
        }
    }

    pub fn is_complex(self) -> bool {
        match self {
            UnitId::Pauli(u) => u.is_complex(),
            UnitId::Dirac(u) => u.is_complex(),
        }
    }
}

impl From<PauliUnit> for UnitId {
    fn from(u: PauliUnit) -> Self {
        UnitId::Pauli(u)
    }
}

impl From<DiracUnit> for UnitId {
    fn from(u: DiracUnit) -> Self {
        UnitId::Dirac(u)
    }
}

/// A unit with a sign; products of units close up to sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SignedUnit {
    pub sign: i8,
    pub unit: UnitId,
}

impl SignedUnit {
    fn new(sign: i8, unit: impl Into<UnitId>) -> Self {
        SignedUnit {
            sign,
            unit: unit.into(),
        }
    }
}

/// Real representative of a unit, as an integer-valued matrix.
#[derive(Debug, Clone, PartialEq)]
pub enum UnitRep {
    Order2(Mat2),
    Order4(Mat4),
}

pub fn pauli_rep(u: PauliUnit) -> Mat2 {
    let r = u.int_rep();
    Mat2::from_rows([
        [r[0][0] as f64, r[0][1] as f64],
        [r[1][0] as f64, r[1][1] as f64],
    ])
}

pub fn dirac_rep(u: DiracUnit) -> Mat4 {
    let r = u.int_rep();
    let mut m = Mat4::zeros();
    for i in 0..4 {
        for j in 0..4 {
            m[(i, j)] = r[i][j] as f64;
        }
    }
    m
}

pub fn unit_rep(u: UnitId) -> UnitRep {
    match u {
        UnitId::Pauli(p) => UnitRep::Order2(pauli_rep(p)),
        UnitId::Dirac(d) => UnitRep::Order4(dirac_rep(d)),
    }
}

fn mul_pauli(a: PauliUnit, b: PauliUnit) -> (i8, PauliUnit) {
    use PauliUnit::*;
    match (a, b) {
        (One, x) | (x, One) => (1, x),
        (Beta1, Beta1) | (Beta2, Beta2) => (1, One),
        (Gamma, Gamma) => (-1, One),
        (Beta1, Beta2) => (1, Gamma),
        (Beta2, Beta1) => (-1, Gamma),
        (Beta1, Gamma) => (1, Beta2),
        (Gamma, Beta1) => (-1, Beta2),
        (Beta2, Gamma) => (-1, Beta1),
        (Gamma, Beta2) => (1, Beta1),
    }
}

/// Product of two of the quaternion-like index triples used for both the ζ
/// and the γ factors: `q_a q_b = −δ_ab − ε_abc q_c`.
fn mul_index(a: u8, b: u8) -> (i8, u8) {
    match (a, b) {
        (0, x) | (x, 0) => (1, x),
        _ if a == b => (-1, 0),
        _ => {
            let c = 6 - a - b;
            let cyclic = matches!((a, b), (1, 2) | (2, 3) | (3, 1));
            (if cyclic { -1 } else { 1 }, c)
        }
    }
}

fn mul_dirac(a: DiracUnit, b: DiracUnit) -> (i8, DiracUnit) {
    // β^m_k = ζ_k γ^m and the ζ's commute with the γ's, so rows and columns
    // multiply independently.
    let (s1, row) = mul_index(a.row, b.row);
    let (s2, col) = mul_index(a.col, b.col);
    (s1 * s2, DiracUnit { row, col })
}

/// Symbolic product of two units.
pub fn mul_units(a: UnitId, b: UnitId) -> Result<SignedUnit> {
    match (a, b) {
        (UnitId::Pauli(x), UnitId::Pauli(y)) => {
            let (s, u) = mul_pauli(x, y);
            Ok(SignedUnit::new(s, u))
        }
        (UnitId::Dirac(x), UnitId::Dirac(y)) => {
            let (s, u) = mul_dirac(x, y);
            Ok(SignedUnit::new(s, u))
        }
        _ => Err(Error::InvalidArgument(
            "cannot multiply units of different algebras".into(),
        )),
    }
}

/// The `γ_n` naming of the sixteen Dirac units used in much of the
/// accelerator literature.
pub fn numbered_unit_map(n: usize) -> Result<SignedUnit> {
    let (sign, row, col) = match n {
        0 => (1, 0, 1),
        1 => (1, 3, 2),
        2 => (1, 1, 2),
        3 => (-1, 2, 2),
        4 => (-1, 3, 3),
        5 => (-1, 1, 3),
        6 => (1, 2, 3),
        7 => (-1, 3, 0),
        8 => (-1, 1, 0),
        9 => (1, 2, 0),
        10 => (1, 0, 2),
        11 => (-1, 3, 1),
        12 => (-1, 1, 1),
        13 => (1, 2, 1),
        14 => (-1, 0, 3),
        15 => (1, 0, 0),
        _ => {
            return Err(Error::InvalidArgument(format!(
                "unit number {n} not in 0..=15"
            )))
        }
    };
    Ok(SignedUnit::new(sign, DiracUnit { row, col }))
}

/// A Cockle quaternion `z0·1 + z1·β₁ + z2·β₂ + z3·γ`.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct CliffordElement2 {
    pub z: [f64; 4],
}

impl CliffordElement2 {
    pub fn new(z0: f64, z1: f64, z2: f64, z3: f64) -> Self {
        CliffordElement2 {
            z: [z0, z1, z2, z3],
        }
    }

    pub fn coefficient(&self, u: PauliUnit) -> f64 {
        self.z[u.index()]
    }

    /// `[[z0+z1, z2+z3], [z2−z3, z0−z1]]`.
    pub fn compose(&self) -> Mat2 {
        let [z0, z1, z2, z3] = self.z;
        Mat2::from_rows([[z0 + z1, z2 + z3], [z2 - z3, z0 - z1]])
    }

    pub fn decompose(m: &Mat2) -> Self {
        let mut z = [0.0; 4];
        for u in PauliUnit::ALL {
            z[u.index()] = trace_product(&pauli_rep(u), m) / 2.0;
        }
        CliffordElement2 { z }
    }

    /// Conjugate `z0 − z1β₁ − z2β₂ − z3γ`; `Z Z̄ = det Z`.
    pub fn conjugate(&self) -> Self {
        let [z0, z1, z2, z3] = self.z;
        Self::new(z0, -z1, -z2, -z3)
    }

    pub fn transpose(&self) -> Self {
        let [z0, z1, z2, z3] = self.z;
        Self::new(z0, z1, z2, -z3)
    }
}

/// A 4×4 real matrix written in component form.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct CliffordElement4 {
    pub c: [[f64; 4]; 4],
}

impl CliffordElement4 {
    pub fn from_components(c: [[f64; 4]; 4]) -> Self {
        CliffordElement4 { c }
    }

    pub fn unit(u: DiracUnit) -> Self {
        let mut e = Self::default();
        e.c[u.row()][u.col()] = 1.0;
        e
    }

    pub fn coefficient(&self, u: DiracUnit) -> f64 {
        self.c[u.row()][u.col()]
    }

    pub fn as_matrix(&self) -> Mat4 {
        Mat4::from_rows(self.c)
    }

    /// Representative matrix `Σ Z[k][l] · rep(k, l)`.
    pub fn compose(&self) -> Mat4 {
        let mut m = Mat4::zeros();
        for u in DiracUnit::all() {
            let z = self.coefficient(u);
            if z == 0.0 {
                continue;
            }
            let r = u.int_rep();
            for i in 0..4 {
                for j in 0..4 {
                    m[(i, j)] += z * r[i][j] as f64;
                }
            }
        }
        m
    }

    pub fn decompose(m: &Mat4) -> Self {
        let mut e = Self::default();
        for u in DiracUnit::all() {
            let r = u.int_rep();
            let mut t = 0.0;
            for i in 0..4 {
                for j in 0..4 {
                    t += r[i][j] as f64 * m[(i, j)];
                }
            }
            e.c[u.row()][u.col()] = t / 4.0;
        }
        e
    }

    /// Component form of the transposed representative: the ζ and γ
    /// coefficients change sign.
    pub fn transpose(&self) -> Self {
        let mut e = *self;
        for u in DiracUnit::all().filter(|u| u.is_complex()) {
            e.c[u.row()][u.col()] = -e.c[u.row()][u.col()];
        }
        e
    }

    /// Largest coefficient on a ζ or γ unit.
    pub fn antisymmetric_part_max(&self) -> f64 {
        DiracUnit::all()
            .filter(|u| u.is_complex())
            .map(|u| self.coefficient(u).abs())
            .fold(0.0, f64::max)
    }

    /// Largest coefficient on a scalar or β unit.
    pub fn symmetric_part_max(&self) -> f64 {
        DiracUnit::all()
            .filter(|u| !u.is_complex())
            .map(|u| self.coefficient(u).abs())
            .fold(0.0, f64::max)
    }
}

fn trace_product<const N: usize>(
    a: &crate::smallmat::Matrix<N>,
    b: &crate::smallmat::Matrix<N>,
) -> f64 {
    let mut t = 0.0;
    for i in 0..N {
        for j in 0..N {
            t += a[(i, j)] * b[(i, j)];
        }
    }
    t
}

/// Scalar product `(A|B) = Re(AᵀB)`, the trace of `AᵀB` over the order.
pub fn scalar_product<const N: usize>(
    a: &crate::smallmat::Matrix<N>,
    b: &crate::smallmat::Matrix<N>,
) -> f64 {
    trace_product(a, b) / N as f64
}

/// Real part `Re Z = Tr Z / N`.
pub fn real_part<const N: usize>(z: &crate::smallmat::Matrix<N>) -> f64 {
    z.trace() / N as f64
}
