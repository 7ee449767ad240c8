use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("spacetime index {0} out of range 0..=3")]
    IndexOutOfRange(usize),

    #[error("mass must be positive and finite, got {0}")]
    NonPositiveMass(f64),

    #[error("polarization chart is singular at p = ({}, {}, {})", .0[0], .0[1], .0[2])]
    Pole([f64; 3]),

    #[error("helicity spinors are undefined at zero momentum")]
    ZeroMomentum,

    #[error("direction must be a unit vector, norm is {0}")]
    NotUnitVector(f64),

    #[error("matrix is not an element of the Dirac representation of SL(2,C)")]
    NotBlockStructured,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("profile vanishes along the filter direction")]
    VanishingProfile,

    #[error("integral diverges: {0}")]
    Divergent(String),

    #[error("observable `{0}` needs the profile gradient")]
    MissingGradient(String),

    #[error("profile norm on the grid is {0}, expected 1")]
    NotNormalized(f64),

    #[error("dispersion of `{0}` is {1}, below the clipping tolerance")]
    NegativeDispersion(String, f64),
}

pub type Result<T> = std::result::Result<T, Error>;
