//! Entropies, mutual information, measurement-conditioned states, classical
//! correlation, quantum discord, and concurrence.
//!
//! Discord follows the measurement-on-B convention: the classical
//! correlation is max over rank-1 projective measurements of qubit B of
//! `S(ρ_A) − Σ_k p_k S(ρ_A|k)`, and discord is the mutual information minus
//! that maximum. The search is a deterministic (θ, φ) grid followed by
//! Nelder-Mead refinement from the best grid points, so identical inputs
//! give bit-identical results. For the A-side variant, swap the qubits
//! before calling.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{ComplexMatrix, Subsystem};
use crate::optimize;
use crate::states::DensityMatrix;

use std::f64::consts::PI;

/// Eigenvalues in [−1e−10, 0) are treated as exact zeros; anything below
/// raises a positivity error.
pub const EIGENVALUE_CLAMP: f64 = 1e-10;
/// Measurement outcomes with probability below this carry the maximally
/// mixed conditional state and contribute nothing to averages.
pub const PROBABILITY_FLOOR: f64 = 1e-14;
/// Discord values in [−1e−7, 0) are clamped to 0; larger violations are
/// reported as numerical errors instead of being hidden.
pub const DISCORD_CLAMP: f64 = 1e-7;

const SIMPLEX_DIAMETER_TOL: f64 = 1e-10;
const SIMPLEX_MAX_ITER: usize = 500;

/// A rank-1 projective measurement direction on the Bloch sphere:
/// n̂ = (sinθ cosφ, sinθ sinφ, cosθ) with θ ∈ [0, π], φ ∈ [0, 2π).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MeasurementSetting {
    theta: f64,
    phi: f64,
}

impl MeasurementSetting {
    pub fn new(theta: f64, phi: f64) -> Result<Self> {
        if !(0.0..=PI).contains(&theta) {
            return Err(Error::Parameter(format!(
                "theta = {theta} outside [0, pi]"
            )));
        }
        if !(0.0..2.0 * PI).contains(&phi) {
            return Err(Error::Parameter(format!(
                "phi = {phi} outside [0, 2*pi)"
            )));
        }
        Ok(MeasurementSetting { theta, phi })
    }

    /// Wrap arbitrary angles onto the canonical ranges (the sphere is
    /// 2π-periodic; θ beyond π folds back with a φ half-turn).
    pub(crate) fn canonical(theta: f64, phi: f64) -> Self {
        let mut theta = theta.rem_euclid(2.0 * PI);
        let mut phi = phi;
        if theta > PI {
            theta = 2.0 * PI - theta;
            phi += PI;
        }
        let mut phi = phi.rem_euclid(2.0 * PI);
        if phi >= 2.0 * PI {
            phi = 0.0;
        }
        MeasurementSetting { theta, phi }
    }

    pub fn theta(&self) -> f64 {
        self.theta
    }

    pub fn phi(&self) -> f64 {
        self.phi
    }

    pub fn bloch_vector(&self) -> [f64; 3] {
        let (st, ct) = (self.theta.sin(), self.theta.cos());
        let (sp, cp) = (self.phi.sin(), self.phi.cos());
        [st * cp, st * sp, ct]
    }
}

/// One outcome of a projective measurement on B: its probability and the
/// conditional state left on A.
#[derive(Debug, Clone, Copy)]
pub struct ConditionedOutcome {
    pub probability: f64,
    pub conditional_state_a: ComplexMatrix,
}

/// Everything the toolkit knows about one state's correlations, in bits.
#[derive(Debug, Clone, Copy)]
pub struct CorrelationReport {
    pub entropy_a: f64,
    pub entropy_b: f64,
    pub entropy_total: f64,
    pub mutual_information: f64,
    pub classical_correlation: f64,
    pub discord: f64,
    pub concurrence: f64,
    pub optimal_setting: MeasurementSetting,
}

/// Grid resolution and refinement policy for the measurement search.
#[derive(Debug, Clone, Copy)]
pub struct OptimizerConfig {
    /// θ samples: i·π/theta_steps for i in 0..theta_steps (the θ=π pole is
    /// the same measurement as θ=0, so the half-open grid loses nothing).
    pub theta_steps: usize,
    /// φ samples: j·2π/phi_steps for j in 0..phi_steps.
    pub phi_steps: usize,
    /// Run Nelder-Mead from the best 5 grid points after the scan.
    pub refine: bool,
}

impl Default for OptimizerConfig {
    fn default() -> Self {
        OptimizerConfig {
            theta_steps: 64,
            phi_steps: 128,
            refine: true,
        }
    }
}

/// Von Neumann entropy −Σ λ log₂ λ of a Hermitian PSD unit-trace matrix
/// (dimension 2 or 4), in bits. Eigenvalues in [−1e−10, 0) count as zero.
pub fn von_neumann_entropy(m: &ComplexMatrix) -> Result<f64> {
    let eigen = m.hermitian_eigen()?;
    let mut s = 0.0;
    for &lambda in eigen.eigenvalues() {
        if lambda < -EIGENVALUE_CLAMP {
            return Err(Error::NotPositive {
                min_eigenvalue: lambda,
            });
        }
        if lambda > 0.0 {
            s -= lambda * lambda.log2();
        }
    }
    Ok(s)
}

/// Mutual information I(ρ) = S(ρ_A) + S(ρ_B) − S(ρ), in bits.
pub fn mutual_information(rho: &DensityMatrix) -> Result<f64> {
    let s_a = von_neumann_entropy(&rho.reduced(Subsystem::A))?;
    let s_b = von_neumann_entropy(&rho.reduced(Subsystem::B))?;
    let s = von_neumann_entropy(rho.matrix())?;
    Ok(s_a + s_b - s)
}

/// Projector (I ± n̂·σ)/2 on one qubit.
fn bloch_projector(n: [f64; 3], sign: f64) -> ComplexMatrix {
    let mut p = ComplexMatrix::zeros(2);
    p.set(0, 0, Complex64::new((1.0 + sign * n[2]) / 2.0, 0.0));
    p.set(1, 1, Complex64::new((1.0 - sign * n[2]) / 2.0, 0.0));
    p.set(0, 1, Complex64::new(sign * n[0] / 2.0, -sign * n[1] / 2.0));
    p.set(1, 0, Complex64::new(sign * n[0] / 2.0, sign * n[1] / 2.0));
    p
}

/// Unnormalized conditional state on A after projecting B with `proj`:
/// `T = Tr_B[(I⊗Π) ρ (I⊗Π)]`, which for a projector Π reduces to
/// `T[i,j] = Σ_{k,l} ρ[(i,k),(j,l)] Π[l,k]`. Returns (probability, T).
fn conditioned_on_b(rho: &ComplexMatrix, proj: &ComplexMatrix) -> (f64, ComplexMatrix) {
    let mut t = ComplexMatrix::zeros(2);
    for i in 0..2 {
        for j in 0..2 {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in 0..2 {
                for l in 0..2 {
                    acc += rho.get(2 * i + k, 2 * j + l) * proj.get(l, k);
                }
            }
            t.set(i, j, acc);
        }
    }
    let p = (t.get(0, 0) + t.get(1, 1)).re;
    (p, t)
}

/// Project qubit B along the given direction and return both outcomes
/// (+n̂ first). Probabilities sum to 1; an outcome with probability below
/// 1e−14 carries I/2 as its conditional state.
pub fn measure_b(rho: &DensityMatrix, setting: &MeasurementSetting) -> [ConditionedOutcome; 2] {
    let n = setting.bloch_vector();
    let mut out = [ConditionedOutcome {
        probability: 0.0,
        conditional_state_a: ComplexMatrix::identity(2).scale_re(0.5),
    }; 2];
    for (slot, sign) in [(0usize, 1.0), (1usize, -1.0)] {
        let proj = bloch_projector(n, sign);
        let (p, t) = conditioned_on_b(rho.matrix(), &proj);
        let p = p.clamp(0.0, 1.0);
        out[slot].probability = p;
        if p >= PROBABILITY_FLOOR {
            out[slot].conditional_state_a = t.scale_re(1.0 / p);
        }
    }
    out
}

/// Closed-form entropy of an (unnormalized) Hermitian PSD 2×2 matrix with
/// trace `p`, after normalization. Used in the optimizer's inner loop; a
/// unit test pins it against [`von_neumann_entropy`].
fn entropy2_normalized(t: &ComplexMatrix, p: f64) -> f64 {
    let a = t.get(0, 0).re / p;
    let d = t.get(1, 1).re / p;
    let q = t.get(0, 1) / p;
    let tr = a + d;
    let det = a * d - q.norm_sqr();
    let disc = (tr * tr - 4.0 * det).max(0.0).sqrt();
    let l1 = (tr + disc) / 2.0;
    let l2 = (tr - disc) / 2.0;
    let mut s = 0.0;
    for l in [l1, l2] {
        if l > 0.0 {
            s -= l * l.log2();
        }
    }
    s
}

struct BObjective<'a> {
    rho: &'a ComplexMatrix,
    entropy_a: f64,
}

impl BObjective<'_> {
    /// S(ρ_A) − Σ_k p_k S(ρ_A|k) for the two outcomes along (θ, φ).
    fn eval(&self, theta: f64, phi: f64) -> f64 {
        let (st, ct) = (theta.sin(), theta.cos());
        let (sp, cp) = (phi.sin(), phi.cos());
        let n = [st * cp, st * sp, ct];
        let mut j = self.entropy_a;
        for sign in [1.0, -1.0] {
            let proj = bloch_projector(n, sign);
            let (p, t) = conditioned_on_b(self.rho, &proj);
            if p >= PROBABILITY_FLOOR {
                j -= p * entropy2_normalized(&t, p);
            }
        }
        j
    }
}

/// Classical correlation: the maximum over projective measurements on B of
/// `S(ρ_A) − Σ_k p_k S(ρ_A|k)`, with the maximizing setting.
///
/// Deterministic search: a uniform 64×128 (θ, φ) grid, then Nelder-Mead
/// refinement (reflection 1, expansion 2, contraction 0.5, shrink 0.5;
/// simplex diameter tolerance 1e−10) from the best 5 grid points.
pub fn classical_correlation(rho: &DensityMatrix) -> Result<(f64, MeasurementSetting)> {
    classical_correlation_with(rho, &OptimizerConfig::default())
}

/// [`classical_correlation`] with an explicit grid/refinement policy.
pub fn classical_correlation_with(
    rho: &DensityMatrix,
    config: &OptimizerConfig,
) -> Result<(f64, MeasurementSetting)> {
    if config.theta_steps == 0 || config.phi_steps == 0 {
        return Err(Error::Parameter(
            "measurement grid must have at least one point per axis".into(),
        ));
    }
    let entropy_a = von_neumann_entropy(&rho.reduced(Subsystem::A))?;
    let objective = BObjective {
        rho: rho.matrix(),
        entropy_a,
    };

    let theta_step = PI / config.theta_steps as f64;
    let phi_step = 2.0 * PI / config.phi_steps as f64;
    let mut scored: Vec<(f64, usize)> = Vec::with_capacity(config.theta_steps * config.phi_steps);
    for i in 0..config.theta_steps {
        let theta = i as f64 * theta_step;
        for j in 0..config.phi_steps {
            let phi = j as f64 * phi_step;
            scored.push((objective.eval(theta, phi), i * config.phi_steps + j));
        }
    }
    // best first; grid order breaks ties so the result is reproducible
    scored.sort_by(|a, b| b.0.partial_cmp(&a.0).unwrap().then(a.1.cmp(&b.1)));

    let angles_of = |idx: usize| {
        (
            (idx / config.phi_steps) as f64 * theta_step,
            (idx % config.phi_steps) as f64 * phi_step,
        )
    };
    let (mut best_value, best_idx) = scored[0];
    let mut best_angles = angles_of(best_idx);

    if config.refine {
        for &(_, idx) in scored.iter().take(5) {
            let (theta, phi) = angles_of(idx);
            let outcome = optimize::maximize_2d(
                |t, p| objective.eval(t, p),
                [theta, phi],
                [theta_step, phi_step],
                SIMPLEX_DIAMETER_TOL,
                SIMPLEX_MAX_ITER,
            )
            .ok_or_else(|| {
                Error::Numerical(format!(
                    "measurement search did not converge within {SIMPLEX_MAX_ITER} iterations"
                ))
            })?;
            if outcome.value > best_value {
                best_value = outcome.value;
                best_angles = (outcome.x[0], outcome.x[1]);
            }
        }
    }

    Ok((
        best_value.max(0.0),
        MeasurementSetting::canonical(best_angles.0, best_angles.1),
    ))
}

/// Full correlation report: entropies, mutual information, classical
/// correlation, discord (clamped at zero), and concurrence.
pub fn quantum_discord(rho: &DensityMatrix) -> Result<CorrelationReport> {
    quantum_discord_with(rho, &OptimizerConfig::default())
}

/// [`quantum_discord`] with an explicit measurement-search policy.
pub fn quantum_discord_with(
    rho: &DensityMatrix,
    config: &OptimizerConfig,
) -> Result<CorrelationReport> {
    let entropy_a = von_neumann_entropy(&rho.reduced(Subsystem::A))?;
    let entropy_b = von_neumann_entropy(&rho.reduced(Subsystem::B))?;
    let entropy_total = von_neumann_entropy(rho.matrix())?;
    let mutual_information = entropy_a + entropy_b - entropy_total;
    let (classical_correlation, optimal_setting) = classical_correlation_with(rho, config)?;
    let raw = mutual_information - classical_correlation;
    if raw < -DISCORD_CLAMP {
        return Err(Error::Numerical(format!(
            "discord came out {raw:.3e}, below the -1e-7 clamp window"
        )));
    }
    Ok(CorrelationReport {
        entropy_a,
        entropy_b,
        entropy_total,
        mutual_information,
        classical_correlation,
        discord: raw.max(0.0),
        concurrence: concurrence(rho),
        optimal_setting,
    })
}

/// Square root of a Hermitian PSD matrix via its eigendecomposition,
/// clamping sub-tolerance negative eigenvalues to zero.
fn sqrt_psd(m: &ComplexMatrix) -> ComplexMatrix {
    let eigen = m.hermitian_eigen().expect("input is Hermitian");
    let v = eigen.eigenvectors();
    let roots: Vec<f64> = eigen
        .eigenvalues()
        .iter()
        .map(|&l| l.max(0.0).sqrt())
        .collect();
    ComplexMatrix::from_fn(m.dim(), |i, j| {
        (0..m.dim())
            .map(|k| v.get(i, k) * roots[k] * v.get(j, k).conj())
            .sum()
    })
}

/// Concurrence C = max(0, λ₁ − λ₂ − λ₃ − λ₄), where the λᵢ are the
/// descending square roots of the eigenvalues of ρ·(Y⊗Y)ρ*(Y⊗Y).
///
/// The spectrum of that product is computed through the equivalent
/// Hermitian form √ρ·ρ̃·√ρ, which shares its nonzero eigenvalues.
pub fn concurrence(rho: &DensityMatrix) -> f64 {
    let yy = ComplexMatrix::sigma_y()
        .tensor_product(&ComplexMatrix::sigma_y())
        .expect("2x2 times 2x2");
    let rho_tilde = yy.mul(&rho.matrix().conjugate()).mul(&yy);
    let root = sqrt_psd(rho.matrix());
    let m = root.mul(&rho_tilde).mul(&root);
    // symmetrize away rounding residue before the eigensolver
    let m = ComplexMatrix::from_fn(4, |i, j| (m.get(i, j) + m.get(j, i).conj()) * 0.5);
    let eigen = m.hermitian_eigen().expect("symmetrized product is Hermitian");
    let mut lambdas: Vec<f64> = eigen
        .eigenvalues()
        .iter()
        .map(|&l| l.max(0.0).sqrt())
        .collect();
    lambdas.sort_by(|a, b| b.partial_cmp(a).unwrap());
    (lambdas[0] - lambdas[1] - lambdas[2] - lambdas[3]).clamp(0.0, 1.0)
}

/// Smallest eigenvalue of the partial transpose over B. Negative exactly
/// when the state is entangled (two-qubit PPT criterion); used as an
/// independent cross-check on [`concurrence`].
pub fn ppt_min_eigenvalue(rho: &DensityMatrix) -> f64 {
    let pt = rho
        .matrix()
        .partial_transpose(Subsystem::B)
        .expect("density matrix is 4x4");
    pt.hermitian_eigen()
        .expect("partial transpose of Hermitian is Hermitian")
        .eigenvalues()[0]
}
