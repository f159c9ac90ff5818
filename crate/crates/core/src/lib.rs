pub mod angles;
pub mod bunch;
pub mod cli;
pub mod clifford;
pub mod dirac;
pub mod error;
pub mod pauli;
pub mod pipeline;
pub mod random;
pub mod smallmat;
pub mod vec3;
pub mod viz;

pub use error::{Error, Result};
