//! Harmonic-domain modeling, analysis and control of linear time-periodic
//! (LTP) systems.
//!
//! Periodic matrices are represented by truncated Fourier-coefficient arrays
//! ([`PhasorArray`]), lifted to truncated Toeplitz-block operators
//! ([`operators`]), and processed by harmonic Lyapunov/Sylvester/Riccati
//! solvers ([`solvers`]), Floquet spectral analysis ([`spectral`]), LMI
//! assembly with SDPA export ([`lmi`]) and time-domain simulation
//! ([`simulation`]).
//!
//! Start with the runnable programs under `examples/`; each one walks through
//! a single capability end to end.

pub mod demo;
pub mod error;
pub mod linalg;
pub mod lmi;
pub mod operators;
pub mod phasor;
pub mod simulation;
pub mod solvers;
pub mod spectral;
pub mod trajectory;
pub mod wave;

pub use error::{Error, Result};
pub use phasor::{InverseOptions, PhasorArray, ReduceMode, SliceOrder};
pub use trajectory::{sliding_fourier, sliding_fourier_scalar, PhasorTrajectory};
