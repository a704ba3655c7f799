//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    /// A matrix dimension outside what the kernel supports.
    #[error("dimension error: {0}")]
    Dimension(String),

    /// ‖M − M†‖_max exceeded the Hermiticity tolerance.
    #[error("matrix is not Hermitian: max |M - M†| = {deviation:.3e} exceeds 1e-10")]
    NotHermitian { deviation: f64 },

    /// Trace of a would-be density matrix is not 1.
    #[error("trace is {trace:.12} (|trace - 1| = {excess:.3e} exceeds 1e-10)")]
    TraceNotOne { trace: f64, excess: f64 },

    /// A would-be density matrix has a negative eigenvalue.
    #[error("matrix is not positive semidefinite: min eigenvalue {min_eigenvalue:.3e}")]
    NotPositive { min_eigenvalue: f64 },

    /// A state-family or measurement parameter outside its valid region.
    #[error("parameter error: {0}")]
    Parameter(String),

    /// An internal numerical guard tripped (broken state or failed optimizer).
    #[error("numerical error: {0}")]
    Numerical(String),
}

pub type Result<T> = std::result::Result<T, Error>;
