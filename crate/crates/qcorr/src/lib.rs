//! Two-qubit quantum correlation toolkit.
//!
//! Computes, for arbitrary validated two-qubit density matrices and for a
//! few built-in parameterized families (Werner states, real X-states,
//! diagonal classical states, and a symmetric-coherence family):
//!
//! - von Neumann entropies, mutual information
//! - classical correlation via optimization over projective measurements
//!   on qubit B, and quantum discord
//! - concurrence (entanglement)
//! - the product-average consistency test for the two commuting Pauli pairs
//!   {X⊗X, Y⊗Y} and {X⊗Y, Y⊗X}: the gap Δ = ⟨XX⟩⟨YY⟩ − ⟨XY⟩⟨YX⟩ that any
//!   assignment of predetermined local outcomes forces to zero
//!
//! The `examples/` directory walks through each capability; the `qcorr`
//! binary exposes `analyze`, `sweep`, and `verify` subcommands for batch
//! work and CSV/JSON emission.
//!
//! ```
//! use qcorr::states;
//! use qcorr::correlations::quantum_discord;
//! use qcorr::contextuality::noncontextuality_gap;
//!
//! let rho = states::werner(0.5).unwrap();
//! let report = quantum_discord(&rho).unwrap();
//! assert!(report.discord > 0.26 && report.discord < 0.27);
//! assert!((noncontextuality_gap(&rho).unwrap() - 0.25).abs() < 1e-12);
//! ```

pub mod cli;
pub mod contextuality;
pub mod correlations;
pub mod error;
pub mod linalg;
mod optimize;
pub mod states;
pub mod sweep;
pub mod verify;

pub use error::{Error, Result};
pub use linalg::{ComplexMatrix, HermitianEigenDecomposition, Subsystem};
pub use states::DensityMatrix;

pub use num_complex::Complex64;
