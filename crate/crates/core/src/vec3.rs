//! Plain `[f64; 3]` helpers.

pub type Vec3 = [f64; 3];

pub const ZERO: Vec3 = [0.0; 3];

pub fn axis(k: usize) -> Vec3 {
    let mut e = ZERO;
    e[k] = 1.0;
    e
}

pub fn dot(a: Vec3, b: Vec3) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub fn cross(a: Vec3, b: Vec3) -> Vec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub fn norm(a: Vec3) -> f64 {
    dot(a, a).sqrt()
}

pub fn scale(a: Vec3, s: f64) -> Vec3 {
    [a[0] * s, a[1] * s, a[2] * s]
}

pub fn add(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] + b[0], a[1] + b[1], a[2] + b[2]]
}

pub fn sub(a: Vec3, b: Vec3) -> Vec3 {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

/// `Σ cᵢ vᵢ`.
pub fn combo(terms: &[(f64, Vec3)]) -> Vec3 {
    terms
        .iter()
        .fold(ZERO, |acc, (c, v)| add(acc, scale(*v, *c)))
}

pub fn max_abs(a: Vec3) -> f64 {
    a.iter().fold(0.0, |m, v| m.max(v.abs()))
}
