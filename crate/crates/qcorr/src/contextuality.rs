//! Pauli-pair expectation values and the product-average consistency test.
//!
//! Any assignment of predetermined ±1 outcomes (x_a, x_b, y_a, y_b) to the
//! local factors of the commuting pairs {X⊗X, Y⊗Y} and {X⊗Y, Y⊗X} forces
//!
//! ```text
//! ⟨X⊗X⟩⟨Y⊗Y⟩ = x_a x_b y_a y_b = x_a y_b y_a x_b = ⟨X⊗Y⟩⟨Y⊗X⟩
//! ```
//!
//! so the gap Δ = ⟨X⊗X⟩⟨Y⊗Y⟩ − ⟨X⊗Y⟩⟨Y⊗X⟩ must vanish. A state whose
//! quantum predictions leave Δ ≠ 0 is inconsistent with such an assignment
//! for these two specific operator pairs. The verdict is deliberately that
//! narrow: it is not a general contextuality certificate.

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::states::DensityMatrix;

/// Default tolerance for calling a gap zero: above accumulated trace noise,
/// far below any physically meaningful gap.
pub const DEFAULT_EPSILON: f64 = 1e-9;

/// Trace imaginary parts above this signal a broken (non-Hermitian) state.
const IMAGINARY_RESIDUE_TOL: f64 = 1e-12;

/// A single-qubit Pauli operator (or the identity).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PauliOp {
    I,
    X,
    Y,
    Z,
}

impl PauliOp {
    pub fn matrix(&self) -> ComplexMatrix {
        match self {
            PauliOp::I => ComplexMatrix::identity(2),
            PauliOp::X => ComplexMatrix::sigma_x(),
            PauliOp::Y => ComplexMatrix::sigma_y(),
            PauliOp::Z => ComplexMatrix::sigma_z(),
        }
    }
}

/// A two-qubit observable `first ⊗ second`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PauliPair {
    pub first: PauliOp,
    pub second: PauliOp,
}

impl PauliPair {
    pub fn new(first: PauliOp, second: PauliOp) -> Self {
        PauliPair { first, second }
    }

    pub fn xx() -> Self {
        Self::new(PauliOp::X, PauliOp::X)
    }

    pub fn yy() -> Self {
        Self::new(PauliOp::Y, PauliOp::Y)
    }

    pub fn xy() -> Self {
        Self::new(PauliOp::X, PauliOp::Y)
    }

    pub fn yx() -> Self {
        Self::new(PauliOp::Y, PauliOp::X)
    }

    /// The 4×4 operator matrix.
    pub fn operator(&self) -> ComplexMatrix {
        self.first
            .matrix()
            .tensor_product(&self.second.matrix())
            .expect("2x2 tensor 2x2 is 4x4")
    }
}

/// Hypothetical predetermined ±1 outcomes for the local X and Y
/// measurements on qubits a and b.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NoncontextualAssignment {
    x_a: i8,
    x_b: i8,
    y_a: i8,
    y_b: i8,
}

impl NoncontextualAssignment {
    pub fn new(x_a: i32, x_b: i32, y_a: i32, y_b: i32) -> Result<Self> {
        for (name, v) in [("x_a", x_a), ("x_b", x_b), ("y_a", y_a), ("y_b", y_b)] {
            if v != 1 && v != -1 {
                return Err(Error::Parameter(format!(
                    "assignment {name} = {v} must be +1 or -1"
                )));
            }
        }
        Ok(NoncontextualAssignment {
            x_a: x_a as i8,
            x_b: x_b as i8,
            y_a: y_a as i8,
            y_b: y_b as i8,
        })
    }

    /// All 16 possible assignments, in lexicographic (+1 before −1) order.
    pub fn all() -> Vec<Self> {
        let vals = [1, -1];
        let mut out = Vec::with_capacity(16);
        for &x_a in &vals {
            for &x_b in &vals {
                for &y_a in &vals {
                    for &y_b in &vals {
                        out.push(Self::new(x_a, x_b, y_a, y_b).unwrap());
                    }
                }
            }
        }
        out
    }
}

/// The two product averages a predetermined assignment implies:
/// `lhs = (x_a·x_b)·(y_a·y_b)` for {X⊗X, Y⊗Y} and `rhs = (x_a·y_b)·(y_a·x_b)`
/// for {X⊗Y, Y⊗X}. Ordinary numbers commute, so lhs = rhs always — which is
/// exactly what the gap test probes against the quantum predictions.
pub fn assignment_identity(n: &NoncontextualAssignment) -> (f64, f64) {
    let lhs = (n.x_a * n.x_b * n.y_a * n.y_b) as f64;
    let rhs = (n.x_a * n.y_b * n.y_a * n.x_b) as f64;
    (lhs, rhs)
}

/// Expectation value Tr(ρ·Ô) of a Pauli-pair observable.
pub fn expectation(rho: &DensityMatrix, obs: &PauliPair) -> Result<f64> {
    expectation_of(rho.matrix(), obs)
}

fn expectation_of(matrix: &ComplexMatrix, obs: &PauliPair) -> Result<f64> {
    let op = obs.operator();
    let mut acc = num_complex::Complex64::new(0.0, 0.0);
    for i in 0..4 {
        for j in 0..4 {
            acc += matrix.get(i, j) * op.get(j, i);
        }
    }
    if acc.im.abs() > IMAGINARY_RESIDUE_TOL {
        return Err(Error::Numerical(format!(
            "expectation value has imaginary residue {:.3e}",
            acc.im
        )));
    }
    Ok(acc.re)
}

/// The gap Δ = ⟨X⊗X⟩⟨Y⊗Y⟩ − ⟨X⊗Y⟩⟨Y⊗X⟩.
pub fn noncontextuality_gap(rho: &DensityMatrix) -> Result<f64> {
    Ok(classify(rho, DEFAULT_EPSILON)?.gap)
}

/// The four Pauli-pair expectations, the gap, and whether the state is
/// consistent with a predetermined-outcome assignment at tolerance ε.
#[derive(Debug, Clone, Copy)]
pub struct ContextualityVerdict {
    pub exp_xx: f64,
    pub exp_yy: f64,
    pub exp_xy: f64,
    pub exp_yx: f64,
    pub gap: f64,
    pub epsilon: f64,
    pub consistent: bool,
}

/// Evaluate the gap test at tolerance `epsilon` (> 0).
pub fn classify(rho: &DensityMatrix, epsilon: f64) -> Result<ContextualityVerdict> {
    if epsilon.is_nan() || epsilon <= 0.0 {
        return Err(Error::Parameter(format!(
            "epsilon = {epsilon} must be positive"
        )));
    }
    let exp_xx = expectation(rho, &PauliPair::xx())?;
    let exp_yy = expectation(rho, &PauliPair::yy())?;
    let exp_xy = expectation(rho, &PauliPair::xy())?;
    let exp_yx = expectation(rho, &PauliPair::yx())?;
    let gap = exp_xx * exp_yy - exp_xy * exp_yx;
    Ok(ContextualityVerdict {
        exp_xx,
        exp_yy,
        exp_xy,
        exp_yx,
        gap,
        epsilon,
        consistent: gap.abs() <= epsilon,
    })
}
