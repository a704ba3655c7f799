//! Construction and validation of two-qubit density matrices.
//!
//! Families provided:
//! - [`werner`]: (1−c)/4·I + c·|Ψ⁻⟩⟨Ψ⁻| for c ∈ [−1/3, 1]
//! - [`x_state`]: real X-states (diagonal plus anti-diagonal coherences)
//! - [`classical`]: diagonal states in the computational basis
//! - [`counterexample`]: diag(1/4+α, 1/4+β, 1/4−β, 1/4−α) with all four
//!   anti-diagonal coherences equal — separable, mostly discordant, and
//!   always gap-free under the Pauli-pair product test

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, Subsystem};

/// |Tr(ρ) − 1| tolerance for a valid density matrix.
pub const TRACE_TOL: f64 = 1e-10;
/// Minimum-eigenvalue tolerance: λ_min ≥ −PSD_TOL.
pub const PSD_TOL: f64 = 1e-10;
/// Tolerance on parameter sums (e.g. a+b+c+d = 1).
const PARAM_SUM_TOL: f64 = 1e-12;
/// Slack on parameter-region inequalities so exact-boundary grid points
/// survive floating-point rounding; two orders below the PSD tolerance.
const PARAM_SLACK: f64 = 1e-12;

/// A validated two-qubit state: Hermitian, unit-trace, positive semidefinite.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DensityMatrix {
    matrix: ComplexMatrix,
}

impl DensityMatrix {
    /// The underlying 4×4 matrix.
    pub fn matrix(&self) -> &ComplexMatrix {
        &self.matrix
    }

    /// Reduced state of one qubit.
    pub fn reduced(&self, keep: Subsystem) -> ComplexMatrix {
        let traced_out = match keep {
            Subsystem::A => Subsystem::B,
            Subsystem::B => Subsystem::A,
        };
        self.matrix
            .partial_trace(traced_out)
            .expect("density matrix is 4x4")
    }
}

/// Parameters of a real X-state, laid out as
///
/// ```text
/// [ a  0  0  w ]
/// [ 0  b  z  0 ]
/// [ 0  z  c  0 ]
/// [ w  0  0  d ]
/// ```
///
/// (This `c` is a diagonal population, unrelated to the Werner parameter.)
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct XStateParams {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub w: f64,
    pub z: f64,
}

/// Parameters of the [`counterexample`] family: population offsets α, β from
/// the maximally mixed state and a common anti-diagonal coherence z.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CounterexampleParams {
    pub alpha: f64,
    pub beta: f64,
    pub z: f64,
}

/// Werner state (1−c)/4·I + c·|Ψ⁻⟩⟨Ψ⁻| with the singlet
/// |Ψ⁻⟩ = (|01⟩ − |10⟩)/√2, valid for c ∈ [−1/3, 1].
pub fn werner(c: f64) -> Result<DensityMatrix> {
    if !c.is_finite() || !(-1.0 / 3.0 - PARAM_SLACK..=1.0 + PARAM_SLACK).contains(&c) {
        return Err(Error::Parameter(format!(
            "werner parameter c = {c} outside [-1/3, 1]"
        )));
    }
    let u = (1.0 - c) / 4.0;
    let h = c / 2.0;
    let m = ComplexMatrix::from_real_rows4([
        [u, 0.0, 0.0, 0.0],
        [0.0, u + h, -h, 0.0],
        [0.0, -h, u + h, 0.0],
        [0.0, 0.0, 0.0, u],
    ]);
    validate(m)
}

/// Real X-state from populations (a, b, c, d) and coherences (w, z).
pub fn x_state(p: &XStateParams) -> Result<DensityMatrix> {
    let sum = p.a + p.b + p.c + p.d;
    if (sum - 1.0).abs() > PARAM_SUM_TOL {
        return Err(Error::Parameter(format!(
            "diagonal populations sum to {sum}, expected 1"
        )));
    }
    for (name, v) in [("a", p.a), ("b", p.b), ("c", p.c), ("d", p.d)] {
        if v.is_nan() || v < 0.0 {
            return Err(Error::Parameter(format!(
                "diagonal population {name} = {v} is negative"
            )));
        }
    }
    if p.a * p.d - p.w * p.w < -PARAM_SLACK {
        return Err(Error::Parameter(format!(
            "outer block not PSD: a*d = {} < w^2 = {}",
            p.a * p.d,
            p.w * p.w
        )));
    }
    if p.b * p.c - p.z * p.z < -PARAM_SLACK {
        return Err(Error::Parameter(format!(
            "inner block not PSD: b*c = {} < z^2 = {}",
            p.b * p.c,
            p.z * p.z
        )));
    }
    let m = ComplexMatrix::from_real_rows4([
        [p.a, 0.0, 0.0, p.w],
        [0.0, p.b, p.z, 0.0],
        [0.0, p.z, p.c, 0.0],
        [p.w, 0.0, 0.0, p.d],
    ]);
    validate(m)
}

/// Diagonal (classical) state diag(a, b, c, d).
pub fn classical(a: f64, b: f64, c: f64, d: f64) -> Result<DensityMatrix> {
    x_state(&XStateParams {
        a,
        b,
        c,
        d,
        w: 0.0,
        z: 0.0,
    })
}

/// Separable-but-discordant family
/// diag(1/4+α, 1/4+β, 1/4−β, 1/4−α) with all anti-diagonal entries z.
///
/// Positivity requires α² + z² ≤ 1/16 and β² + z² ≤ 1/16 (each anti-diagonal
/// 2×2 block must be PSD).
pub fn counterexample(p: &CounterexampleParams) -> Result<DensityMatrix> {
    let z2 = p.z * p.z;
    if p.alpha * p.alpha + z2 > 1.0 / 16.0 + PARAM_SLACK {
        return Err(Error::Parameter(format!(
            "alpha^2 + z^2 = {} exceeds 1/16",
            p.alpha * p.alpha + z2
        )));
    }
    if p.beta * p.beta + z2 > 1.0 / 16.0 + PARAM_SLACK {
        return Err(Error::Parameter(format!(
            "beta^2 + z^2 = {} exceeds 1/16",
            p.beta * p.beta + z2
        )));
    }
    x_state(&XStateParams {
        a: 0.25 + p.alpha,
        b: 0.25 + p.beta,
        c: 0.25 - p.beta,
        d: 0.25 - p.alpha,
        w: p.z,
        z: p.z,
    })
}

/// Validate a raw 4×4 matrix as a density matrix.
///
/// Checks Hermiticity (‖ρ − ρ†‖_max ≤ 1e−10), unit trace (±1e−10), and
/// positivity (min eigenvalue ≥ −1e−10, via the Hermitian eigensolver);
/// each failure reports the offending magnitude.
pub fn validate(matrix: ComplexMatrix) -> Result<DensityMatrix> {
    if matrix.dim() != 4 {
        return Err(Error::Dimension(format!(
            "a two-qubit density matrix is 4x4, got {0}x{0}",
            matrix.dim()
        )));
    }
    let deviation = matrix.hermiticity_deviation();
    if deviation > crate::linalg::HERMITICITY_TOL {
        return Err(Error::NotHermitian { deviation });
    }
    let trace = matrix.trace();
    let excess = (trace.re - 1.0).hypot(trace.im);
    if excess > TRACE_TOL {
        return Err(Error::TraceNotOne {
            trace: trace.re,
            excess,
        });
    }
    let eigen = matrix.hermitian_eigen()?;
    let min_eigenvalue = eigen.eigenvalues()[0];
    if min_eigenvalue < -PSD_TOL {
        return Err(Error::NotPositive { min_eigenvalue });
    }
    Ok(DensityMatrix { matrix })
}

/// Projector onto the singlet |Ψ⁻⟩ = (|01⟩ − |10⟩)/√2; equals `werner(1)`.
pub fn singlet_projector() -> ComplexMatrix {
    ComplexMatrix::from_real_rows4([
        [0.0, 0.0, 0.0, 0.0],
        [0.0, 0.5, -0.5, 0.0],
        [0.0, -0.5, 0.5, 0.0],
        [0.0, 0.0, 0.0, 0.0],
    ])
}

/// Maximally mixed two-qubit state I/4.
pub fn maximally_mixed() -> DensityMatrix {
    DensityMatrix {
        matrix: ComplexMatrix::identity(4).scale(Complex64::new(0.25, 0.0)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::test_support::assert_close;

    #[test]
    fn werner_zero_is_maximally_mixed() {
        let rho = werner(0.0).unwrap();
        assert_eq!(rho, maximally_mixed());
    }

    #[test]
    fn werner_one_is_singlet_projector() {
        let rho = werner(1.0).unwrap();
        assert!(rho.matrix().max_abs_diff(&singlet_projector()) <= 1e-16);
    }

    #[test]
    fn werner_boundary_spectrum() {
        let rho = werner(-1.0 / 3.0).unwrap();
        let eigen = rho.matrix().hermitian_eigen().unwrap();
        let expected = [0.0, 1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0];
        for (got, want) in eigen.eigenvalues().iter().zip(expected) {
            assert_close(*got, want, 1e-14);
        }
    }

    #[test]
    fn werner_eigenvalue_formula_on_grid() {
        for i in 0..=100 {
            let c = -1.0 / 3.0 + (4.0 / 3.0) * (i as f64) / 100.0;
            let c = c.min(1.0);
            let eigen = werner(c).unwrap().matrix().hermitian_eigen().unwrap();
            let mut expected = [(1.0 - c) / 4.0, (1.0 - c) / 4.0, (1.0 - c) / 4.0, (1.0 + 3.0 * c) / 4.0];
            expected.sort_by(|x, y| x.partial_cmp(y).unwrap());
            for (got, want) in eigen.eigenvalues().iter().zip(expected) {
                assert_close(*got, want, 1e-12);
            }
        }
    }

    #[test]
    fn werner_out_of_range_rejected() {
        assert!(matches!(werner(2.0), Err(Error::Parameter(_))));
        assert!(matches!(werner(-0.34), Err(Error::Parameter(_))));
    }

    #[test]
    fn x_state_maximally_mixed() {
        let rho = x_state(&XStateParams { a: 0.25, b: 0.25, c: 0.25, d: 0.25, w: 0.0, z: 0.0 }).unwrap();
        assert_eq!(rho, maximally_mixed());
    }

    #[test]
    fn x_state_phi_plus_is_rank_one() {
        let rho = x_state(&XStateParams { a: 0.5, b: 0.0, c: 0.0, d: 0.5, w: 0.5, z: 0.0 }).unwrap();
        let eigen = rho.matrix().hermitian_eigen().unwrap();
        let expected = [0.0, 0.0, 0.0, 1.0];
        for (got, want) in eigen.eigenvalues().iter().zip(expected) {
            assert_close(*got, want, 1e-13);
        }
    }

    #[test]
    fn x_state_generic_valid() {
        // 0.09 >= 0.01 and 0.04 >= 0.0025
        assert!(x_state(&XStateParams { a: 0.3, b: 0.2, c: 0.2, d: 0.3, w: 0.1, z: 0.05 }).is_ok());
    }

    #[test]
    fn x_state_names_violated_block() {
        let err = x_state(&XStateParams { a: 0.1, b: 0.4, c: 0.4, d: 0.1, w: 0.2, z: 0.0 }).unwrap_err();
        match err {
            Error::Parameter(msg) => assert!(msg.contains("outer block"), "got: {msg}"),
            other => panic!("expected Parameter, got {other:?}"),
        }
        let err = x_state(&XStateParams { a: 0.4, b: 0.1, c: 0.1, d: 0.4, w: 0.0, z: 0.2 }).unwrap_err();
        match err {
            Error::Parameter(msg) => assert!(msg.contains("inner block"), "got: {msg}"),
            other => panic!("expected Parameter, got {other:?}"),
        }
    }

    #[test]
    fn x_state_trace_violation_rejected() {
        let err = x_state(&XStateParams { a: 0.3, b: 0.3, c: 0.3, d: 0.3, w: 0.0, z: 0.0 }).unwrap_err();
        assert!(matches!(err, Error::Parameter(_)));
    }

    #[test]
    fn classical_families() {
        assert_eq!(classical(0.25, 0.25, 0.25, 0.25).unwrap(), maximally_mixed());
        let pure = classical(1.0, 0.0, 0.0, 0.0).unwrap();
        assert_close(pure.matrix().get(0, 0).re, 1.0, 0.0);
        assert!(classical(0.5, 0.0, 0.0, 0.5).is_ok());
        assert!(matches!(classical(-0.1, 0.5, 0.3, 0.3), Err(Error::Parameter(_))));
        assert!(matches!(classical(0.5, 0.5, 0.5, 0.5), Err(Error::Parameter(_))));
    }

    #[test]
    fn classical_equals_x_state_without_coherences() {
        let via_classical = classical(0.4, 0.3, 0.2, 0.1).unwrap();
        let via_x = x_state(&XStateParams { a: 0.4, b: 0.3, c: 0.2, d: 0.1, w: 0.0, z: 0.0 }).unwrap();
        assert_eq!(via_classical, via_x);
    }

    #[test]
    fn counterexample_reduces_to_x_state_bit_identically() {
        let p = CounterexampleParams { alpha: 0.2, beta: -0.2, z: 0.1 };
        let direct = counterexample(&p).unwrap();
        let via_x = x_state(&XStateParams {
            a: 0.25 + p.alpha,
            b: 0.25 + p.beta,
            c: 0.25 - p.beta,
            d: 0.25 - p.alpha,
            w: p.z,
            z: p.z,
        })
        .unwrap();
        assert_eq!(direct, via_x);
    }

    #[test]
    fn counterexample_members() {
        assert_eq!(
            counterexample(&CounterexampleParams { alpha: 0.0, beta: 0.0, z: 0.0 }).unwrap(),
            maximally_mixed()
        );
        // 0.04 + 0.01 <= 0.0625 on both blocks
        assert!(counterexample(&CounterexampleParams { alpha: 0.2, beta: -0.2, z: 0.1 }).is_ok());
        let boundary = counterexample(&CounterexampleParams { alpha: 0.25, beta: 0.0, z: 0.0 }).unwrap();
        let diag: Vec<f64> = (0..4).map(|i| boundary.matrix().get(i, i).re).collect();
        assert_eq!(diag, vec![0.5, 0.25, 0.25, 0.0]);
        assert!(matches!(
            counterexample(&CounterexampleParams { alpha: 0.25, beta: 0.0, z: 0.01 }),
            Err(Error::Parameter(_))
        ));
    }

    #[test]
    fn validate_accepts_and_rejects() {
        assert!(validate(ComplexMatrix::identity(4).scale_re(0.25)).is_ok());

        let psd_bad = ComplexMatrix::from_real_diag(&[0.5, 0.6, -0.05, -0.05]);
        match validate(psd_bad) {
            Err(Error::NotPositive { min_eigenvalue }) => assert_close(min_eigenvalue, -0.05, 1e-14),
            other => panic!("expected NotPositive, got {other:?}"),
        }

        let half_trace = ComplexMatrix::identity(4).scale_re(0.125);
        match validate(half_trace) {
            Err(Error::TraceNotOne { trace, .. }) => assert_close(trace, 0.5, 1e-15),
            other => panic!("expected TraceNotOne, got {other:?}"),
        }

        let mut lop = ComplexMatrix::identity(4).scale_re(0.25);
        lop.set(0, 1, num_complex::Complex64::new(0.3, 0.0));
        assert!(matches!(validate(lop), Err(Error::NotHermitian { .. })));
    }

    #[test]
    fn constructors_pass_validation() {
        for c in [-1.0 / 3.0, -0.1, 0.0, 0.3, 0.9, 1.0] {
            assert!(validate(*werner(c).unwrap().matrix()).is_ok());
        }
        let p = XStateParams { a: 0.3, b: 0.2, c: 0.2, d: 0.3, w: 0.1, z: 0.05 };
        assert!(validate(*x_state(&p).unwrap().matrix()).is_ok());
        assert!(validate(*classical(0.1, 0.2, 0.3, 0.4).unwrap().matrix()).is_ok());
        let q = CounterexampleParams { alpha: 0.15, beta: 0.05, z: 0.12 };
        assert!(validate(*counterexample(&q).unwrap().matrix()).is_ok());
    }

    #[test]
    fn werner_marginals_are_maximally_mixed() {
        for c in [-1.0 / 3.0, 0.0, 0.5, 1.0] {
            let rho = werner(c).unwrap();
            for side in [Subsystem::A, Subsystem::B] {
                let reduced = rho.reduced(side);
                assert!(reduced.max_abs_diff(&ComplexMatrix::identity(2).scale_re(0.5)) <= 1e-15);
            }
        }
    }
}
