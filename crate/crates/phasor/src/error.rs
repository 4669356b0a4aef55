//! Error type shared by all modules of the crate.

use num_complex::Complex64;
use thiserror::Error;

/// Errors produced by construction, arithmetic, solvers and I/O.
#[derive(Debug, Error)]
pub enum Error {
    /// Operand shapes are incompatible for the requested operation.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// An argument is outside its documented range.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A sampled matrix was singular or too badly conditioned to invert.
    #[error("singular or near-singular sample at t = {t} (condition estimate {cond:.3e})")]
    SingularSample { t: f64, cond: f64 },

    /// A LAPACK routine reported a nonzero info code.
    #[error("LAPACK {routine} failed with info = {info}")]
    Lapack { routine: &'static str, info: i32 },

    /// The coefficient operator pencil is singular (overlapping spectra).
    #[error("singular Sylvester operator: spectra of the coefficient operators overlap")]
    SpectralOverlap,

    /// A Lyapunov solve requires a Hurwitz harmonic state matrix.
    #[error("harmonic state matrix is not Hurwitz (worst exponent {0})")]
    NotHurwitz(Complex64),

    /// The initial gain handed to the Riccati iteration does not stabilize the plant.
    #[error("initial gain is not stabilizing (worst closed-loop exponent {0})")]
    NotStabilizing(Complex64),

    /// A serialized document does not match the documented schema.
    #[error("schema error: {0}")]
    Schema(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
