//! Seeded random physical beams.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::smallmat::{is_positive_definite, Matrix};

/// Smallest eigenvalue the generated beams are kept above.
pub const CONDITIONING_FLOOR: f64 = 0.05;

/// `A + Aᵀ` with standard normal entries, shifted by the identity until it
/// is safely positive-definite.
pub fn random_physical<const N: usize, R: Rng + ?Sized>(rng: &mut R) -> Matrix<N> {
    let mut a = Matrix::<N>::zeros();
    for i in 0..N {
        for j in 0..N {
            a[(i, j)] = rng.sample(StandardNormal);
        }
    }
    let mut s = a + a.transpose();
    let floor = Matrix::<N>::identity().scale(CONDITIONING_FLOOR);
    while !is_positive_definite(&(s - floor)) {
        s += Matrix::identity();
    }
    s
}

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Same seed, same matrix.
pub fn random_physical_seeded<const N: usize>(seed: u64) -> Matrix<N> {
    random_physical(&mut seeded_rng(seed))
}
