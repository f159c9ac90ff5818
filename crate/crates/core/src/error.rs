use thiserror::Error;

/// Errors raised by the beam-optics kernels and recipes.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("singular matrix: {0}")]
    SingularMatrix(String),

    /// The beam/bunch matrix does not describe a real particle distribution
    /// (negative or complex emittance, or a boost rapidity with |tanh| >= 1).
    #[error("nonphysical beam: {0}")]
    NonPhysical(String),

    /// A recipe needs a direction that is 0/0 while its goal is not met.
    #[error("degenerate direction: {0}")]
    DegenerateDirection(String),

    #[error("degenerate emittances: {0}")]
    DegenerateEmittance(String),

    #[error("degenerate eigenvector pairing: {0}")]
    DegenerateEigenvector(String),
}

pub type Result<T> = std::result::Result<T, Error>;
