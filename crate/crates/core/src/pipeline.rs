use serde::{Deserialize, Serialize};

use crate::smallmat::{symplectic_form, symplectic_inverse, symplectic_residual, Matrix};

/// A single symplectic step with a matrix representative `R`, acting on a
/// beam matrix as `Σ ↦ R Σ Rᵀ`.
pub trait Transform<const N: usize> {
    fn representative(&self) -> Matrix<N>;
}

/// Ordered list of transforms together with their accumulated map.
///
/// `map()` is `R_n ⋯ R_1`, the map that takes the input beam to the output
/// beam. Its inverse, `normalizer()`, is the matrix `N` with `Σ = N Σ' Nᵀ`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Pipeline<T, const N: usize> {
    steps: Vec<T>,
    #[serde(with = "matrix_rows")]
    map: Matrix<N>,
}

impl<T: Transform<N>, const N: usize> Default for Pipeline<T, N> {
    fn default() -> Self {
        Self::new()
    }
}

impl<T: Transform<N>, const N: usize> Pipeline<T, N> {
    pub fn new() -> Self {
        Pipeline {
            steps: Vec::new(),
            map: Matrix::identity(),
        }
    }

    pub fn push(&mut self, step: T) {
        self.map = step.representative() * self.map;
        self.steps.push(step);
    }

    pub fn steps(&self) -> &[T] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn map(&self) -> Matrix<N> {
        self.map
    }

    pub fn normalizer(&self) -> Matrix<N> {
        symplectic_inverse(&self.map, &symplectic_form::<N>())
    }

    /// Recomputes the ordered product of the step representatives.
    pub fn recomputed_map(&self) -> Matrix<N> {
        self.steps
            .iter()
            .fold(Matrix::identity(), |acc, s| s.representative() * acc)
    }

    pub fn symplectic_residual(&self) -> f64 {
        symplectic_residual(&self.map, &symplectic_form::<N>())
    }

    pub fn apply_to(&self, sigma: &Matrix<N>) -> Matrix<N> {
        self.map.congruence(sigma)
    }
}

impl<T: Transform<N>, const N: usize> Extend<T> for Pipeline<T, N> {
    fn extend<I: IntoIterator<Item = T>>(&mut self, iter: I) {
        for s in iter {
            self.push(s);
        }
    }
}

pub(crate) mod matrix_rows {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    use crate::smallmat::Matrix;

    pub fn serialize<S: Serializer, const N: usize>(
        m: &Matrix<N>,
        s: S,
    ) -> Result<S::Ok, S::Error> {
        m.to_rows().serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>, const N: usize>(
        d: D,
    ) -> Result<Matrix<N>, D::Error> {
        let rows: Vec<Vec<f64>> = Vec::deserialize(d)?;
        let flat: Vec<f64> = rows.iter().flatten().copied().collect();
        if rows.len() != N || rows.iter().any(|r| r.len() != N) {
            return Err(serde::de::Error::custom(format!(
                "expected a {N}×{N} matrix"
            )));
        }
        Matrix::from_row_major(&flat).map_err(serde::de::Error::custom)
    }
}
