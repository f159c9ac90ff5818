use crate::error::{Error, Result};

/// Boosts with `|tanh 2χ|` this close to 1 are treated as nonphysical.
pub const TANH_LIMIT: f64 = 1.0 - 1e-12;

/// Solves `tanh(2χ) = t` for χ.
pub fn half_atanh(t: f64) -> Result<f64> {
    if !t.is_finite() || t.abs() >= TANH_LIMIT {
        return Err(Error::NonPhysical(format!(
            "boost needs tanh(2χ) = {t:.6}, outside (-1, 1)"
        )));
    }
    Ok(0.25 * ((1.0 + t) / (1.0 - t)).ln())
}

/// Solves `tan(2ψ) = y/x` for ψ with the quadrant taken from the signs.
pub fn half_atan2(y: f64, x: f64) -> f64 {
    0.5 * y.atan2(x)
}
