//! Self-verification battery: the numbered checks behind `qcorr verify`
//! and the `acceptance` integration test suite.
//!
//! Every check is deterministic (seeded RNG where randomness is called
//! for), reports the extreme values it saw, and enforces its own runtime
//! budget where one applies.

use std::time::Instant;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::contextuality::{self, NoncontextualAssignment};
use crate::correlations::{self, OptimizerConfig};
use crate::linalg::ComplexMatrix;
use crate::states::{self, CounterexampleParams, XStateParams};
use crate::sweep::{self, Family, ParamRange, SweepSpec};

/// Outcome of one verification check.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub id: &'static str,
    pub label: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl CheckReport {
    pub fn line(&self) -> String {
        format!(
            "[{}] {} — {} ({:.2} s)",
            if self.passed { "PASS" } else { "FAIL" },
            self.label,
            self.detail,
            self.seconds
        )
    }
}

struct Checker {
    passed: bool,
    failures: Vec<String>,
}

impl Checker {
    fn new() -> Self {
        Checker {
            passed: true,
            failures: Vec::new(),
        }
    }

    fn require(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok {
            self.passed = false;
            if self.failures.len() < 4 {
                self.failures.push(what());
            }
        }
    }

    fn finish(
        self,
        id: &'static str,
        label: &'static str,
        started: Instant,
        budget: Option<f64>,
        ok_detail: String,
    ) -> CheckReport {
        let seconds = started.elapsed().as_secs_f64();
        let mut passed = self.passed;
        let mut detail = if passed {
            ok_detail
        } else {
            self.failures.join("; ")
        };
        if let Some(limit) = budget {
            if seconds >= limit {
                passed = false;
                detail = format!("{detail}; runtime {seconds:.2} s exceeded {limit} s budget");
            }
        }
        CheckReport {
            id,
            label,
            passed,
            detail,
            seconds,
        }
    }
}

fn werner_grid() -> Vec<f64> {
    let range = ParamRange::new(-1.0 / 3.0, 1.0, 101).unwrap();
    (0..101).map(|i| range.value(i)).collect()
}

/// Check 1: the Werner gap equals c² across the parameter range.
pub fn check_werner_gap_law() -> CheckReport {
    let start = Instant::now();
    let mut checker = Checker::new();
    let mut worst = 0.0f64;
    for c in werner_grid() {
        let gap = contextuality::noncontextuality_gap(&states::werner(c).unwrap()).unwrap();
        let err = (gap - c * c).abs();
        worst = worst.max(err);
        checker.require(err <= 1e-12, || format!("|gap - c^2| = {err:.2e} at c = {c}"));
    }
    checker.finish(
        "werner-gap-law",
        "check 1: werner gap equals c^2 on 101-point grid",
        start,
        Some(1.0),
        format!("max |gap - c^2| = {worst:.2e}"),
    )
}

/// Check 2: the discord-versus-c curve — zero only at c = 0, one at c = 1,
/// monotone in |c| on each side.
pub fn check_werner_discord_curve() -> CheckReport {
    let start = Instant::now();
    let mut checker = Checker::new();

    let at_zero = correlations::quantum_discord(&states::werner(0.0).unwrap())
        .unwrap()
        .discord;
    checker.require(at_zero <= 1e-7, || format!("discord at c=0 is {at_zero:.2e}"));

    let at_one = correlations::quantum_discord(&states::werner(1.0).unwrap())
        .unwrap()
        .discord;
    checker.require((at_one - 1.0).abs() <= 1e-6, || {
        format!("discord at c=1 is {at_one}")
    });

    let grid = werner_grid();
    let discords: Vec<f64> = grid
        .iter()
        .map(|&c| {
            correlations::quantum_discord(&states::werner(c).unwrap())
                .unwrap()
                .discord
        })
        .collect();

    let mut min_away = f64::INFINITY;
    for (&c, &d) in grid.iter().zip(&discords) {
        if c.abs() >= 0.05 {
            min_away = min_away.min(d);
            checker.require(d >= 1e-4, || format!("discord {d:.2e} at |c| = {:.3}", c.abs()));
        }
    }

    // monotone nondecreasing in |c| on each side, within slack
    let mut neg: Vec<(f64, f64)> = grid
        .iter()
        .zip(&discords)
        .filter(|(&c, _)| c < 0.0)
        .map(|(&c, &d)| (c.abs(), d))
        .collect();
    neg.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    let pos: Vec<(f64, f64)> = grid
        .iter()
        .zip(&discords)
        .filter(|(&c, _)| c >= 0.0)
        .map(|(&c, &d)| (c, d))
        .collect();
    for side in [neg, pos] {
        for pair in side.windows(2) {
            checker.require(pair[1].1 >= pair[0].1 - 1e-6, || {
                format!(
                    "discord drops from {} to {} between |c| = {} and {}",
                    pair[0].1, pair[1].1, pair[0].0, pair[1].0
                )
            });
        }
    }

    checker.finish(
        "werner-discord-curve",
        "check 2: discord vs c is zero only at c=0 and reaches 1 at c=1",
        start,
        Some(30.0),
        format!("discord(0) = {at_zero:.1e}, discord(1) = {at_one:.9}, min away from 0 = {min_away:.2e}"),
    )
}

/// Check 3: random diagonal states have zero gap and zero discord.
pub fn check_classical_states() -> CheckReport {
    let start = Instant::now();
    let mut checker = Checker::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0003);
    let mut max_gap = 0.0f64;
    let mut max_discord = 0.0f64;
    for _ in 0..1000 {
        let mut p = [0.0f64; 4];
        let mut sum = 0.0;
        for x in &mut p {
            *x = rng.gen::<f64>();
            sum += *x;
        }
        for x in &mut p {
            *x /= sum;
        }
        let rho = states::classical(p[0], p[1], p[2], p[3]).unwrap();
        let gap = contextuality::noncontextuality_gap(&rho).unwrap();
        let discord = correlations::quantum_discord(&rho).unwrap().discord;
        max_gap = max_gap.max(gap.abs());
        max_discord = max_discord.max(discord);
        checker.require(gap.abs() <= 1e-12, || format!("|gap| = {:.2e}", gap.abs()));
        checker.require(discord <= 1e-6, || format!("discord = {discord:.2e}"));
    }
    checker.finish(
        "classical-states",
        "check 3: 1000 random diagonal states have zero gap and zero discord",
        start,
        Some(30.0),
        format!("max |gap| = {max_gap:.2e}, max discord = {max_discord:.2e}"),
    )
}

/// Check 4: the separable counterexample family over its 9×9×7 grid —
/// zero gap everywhere, discord under 0.3 but above 1e-3 somewhere,
/// vanishing along alpha = beta and z = 0, and no entanglement at all.
pub fn check_counterexample_family() -> CheckReport {
    let start = Instant::now();
    let mut checker = Checker::new();
    let alphas = ParamRange::new(-0.2, 0.2, 9).unwrap();
    let betas = ParamRange::new(-0.2, 0.2, 9).unwrap();
    let zs = ParamRange::new(0.0, 0.15, 7).unwrap();

    let mut max_gap = 0.0f64;
    let mut max_discord = 0.0f64;
    let mut max_symmetric_discord = 0.0f64;
    let mut max_concurrence = 0.0f64;
    let mut any_discordant = false;
    let mut valid_cells = 0usize;

    for i in 0..9 {
        for j in 0..9 {
            for k in 0..7 {
                let p = CounterexampleParams {
                    alpha: alphas.value(i),
                    beta: betas.value(j),
                    z: zs.value(k),
                };
                let rho = match states::counterexample(&p) {
                    Ok(rho) => rho,
                    Err(_) => continue, // outside the PSD region
                };
                valid_cells += 1;

                let gap = contextuality::noncontextuality_gap(&rho).unwrap();
                max_gap = max_gap.max(gap.abs());
                checker.require(gap.abs() <= 1e-12, || {
                    format!("|gap| = {:.2e} at ({}, {}, {})", gap.abs(), p.alpha, p.beta, p.z)
                });

                let report = correlations::quantum_discord(&rho).unwrap();
                max_discord = max_discord.max(report.discord);
                if report.discord >= 1e-3 {
                    any_discordant = true;
                }
                if i == j || k == 0 {
                    max_symmetric_discord = max_symmetric_discord.max(report.discord);
                    checker.require(report.discord <= 1e-6, || {
                        format!(
                            "discord = {:.2e} at symmetric cell ({}, {}, {})",
                            report.discord, p.alpha, p.beta, p.z
                        )
                    });
                }

                max_concurrence = max_concurrence.max(report.concurrence);
                checker.require(report.concurrence <= 1e-9, || {
                    format!("concurrence = {:.2e} at ({}, {}, {})", report.concurrence, p.alpha, p.beta, p.z)
                });
            }
        }
    }

    checker.require(max_discord < 0.3, || format!("max discord = {max_discord}"));
    checker.require(any_discordant, || "no cell reached discord 1e-3".to_string());

    checker.finish(
        "counterexample-family",
        "check 4: counterexample grid is gap-free, separable, discordant under 0.3",
        start,
        Some(60.0),
        format!(
            "{valid_cells} cells: max |gap| = {max_gap:.2e}, max discord = {max_discord:.4}, \
symmetric max = {max_symmetric_discord:.2e}, max concurrence = {max_concurrence:.2e}"
        ),
    )
}

/// Check 5: the refinement stage only sharpens the grid answer — discord
/// from the coarse grid alone agrees within 1e-5 and never comes out lower.
pub fn check_grid_refinement_agreement() -> CheckReport {
    let start = Instant::now();
    let mut checker = Checker::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    let grid_only = OptimizerConfig {
        refine: false,
        ..OptimizerConfig::default()
    };
    let refined_cfg = OptimizerConfig::default();
    let mut worst = 0.0f64;
    for _ in 0..100 {
        let p = random_x_state_params(&mut rng);
        let rho = states::x_state(&p).unwrap();
        let coarse = correlations::quantum_discord_with(&rho, &grid_only)
            .unwrap()
            .discord;
        let refined = correlations::quantum_discord_with(&rho, &refined_cfg)
            .unwrap()
            .discord;
        let gain = coarse - refined; // refinement can only lower discord
        worst = worst.max(gain.abs());
        checker.require(refined <= coarse + 1e-12, || {
            format!("refined discord {refined} above grid discord {coarse}")
        });
        checker.require(gain.abs() <= 1e-5, || {
            format!("grid/refined disagree by {gain:.2e}")
        });
    }
    checker.finish(
        "grid-refinement-agreement",
        "check 5: grid-only and refined discord agree to 1e-5 on 100 random X-states",
        start,
        None,
        format!("max |grid - refined| = {worst:.2e}"),
    )
}

/// Check 6: kernel facts — exact entropy of I/4, vanishing pure-state
/// entropy, the 16 assignment identities, and eigensolver reconstruction.
pub fn check_kernel_properties() -> CheckReport {
    let start = Instant::now();
    let mut checker = Checker::new();

    let s_mixed =
        correlations::von_neumann_entropy(states::maximally_mixed().matrix()).unwrap();
    checker.require(s_mixed == 2.0, || format!("entropy of I/4 = {s_mixed:?}, want exactly 2"));

    let mut max_pure = 0.0f64;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    for rho in pure_state_collection(&mut rng) {
        let s = correlations::von_neumann_entropy(rho.matrix()).unwrap();
        max_pure = max_pure.max(s);
        checker.require(s <= 1e-10, || format!("pure-state entropy {s:.2e}"));
    }

    for n in NoncontextualAssignment::all() {
        let (lhs, rhs) = contextuality::assignment_identity(&n);
        checker.require(lhs == rhs, || format!("assignment identity broke: {lhs} vs {rhs}"));
    }

    let mut worst_recon = 0.0f64;
    for _ in 0..1000 {
        let m = random_hermitian(&mut rng);
        let eigen = m.hermitian_eigen().unwrap();
        let err = eigen.reconstruct().max_abs_diff(&m);
        worst_recon = worst_recon.max(err);
        checker.require(err <= 1e-12, || format!("reconstruction error {err:.2e}"));
        let vtv = eigen.eigenvectors().adjoint().mul(eigen.eigenvectors());
        let ortho = vtv.max_abs_diff(&ComplexMatrix::identity(4));
        checker.require(ortho <= 1e-12, || format!("orthonormality error {ortho:.2e}"));
    }

    checker.finish(
        "kernel-properties",
        "check 6: entropy anchors, assignment identities, eigensolver reconstruction",
        start,
        None,
        format!(
            "entropy(I/4) = 2 exactly, max pure entropy = {max_pure:.1e}, \
max reconstruction error = {worst_recon:.2e} over 1000 matrices"
        ),
    )
}

/// Check 7: the default 101-step Werner sweep is byte-identical across runs.
pub fn check_sweep_determinism() -> CheckReport {
    let start = Instant::now();
    let mut checker = Checker::new();
    let spec = SweepSpec::default_for(Family::Werner);
    let (csv1, _) = sweep::run_sweep(&spec).unwrap();
    let (csv2, _) = sweep::run_sweep(&spec).unwrap();
    checker.require(csv1 == csv2, || "two sweep runs differ".to_string());
    let rows = csv1.lines().count();
    checker.require(rows == 102, || format!("expected 102 lines, got {rows}"));
    checker.finish(
        "sweep-determinism",
        "check 7: repeated werner sweeps produce byte-identical CSV",
        start,
        None,
        format!("{} bytes, {} lines, identical", csv1.len(), rows),
    )
}

/// Run the whole battery in order.
pub fn run_all() -> Vec<CheckReport> {
    vec![
        check_werner_gap_law(),
        check_werner_discord_curve(),
        check_classical_states(),
        check_counterexample_family(),
        check_grid_refinement_agreement(),
        check_kernel_properties(),
        check_sweep_determinism(),
    ]
}

fn random_x_state_params(rng: &mut ChaCha8Rng) -> XStateParams {
    let mut p = [0.0f64; 4];
    let mut sum = 0.0;
    for x in &mut p {
        *x = rng.gen::<f64>().max(1e-9);
        sum += *x;
    }
    for x in &mut p {
        *x /= sum;
    }
    let w = (2.0 * rng.gen::<f64>() - 1.0) * (p[0] * p[3]).sqrt() * 0.999;
    let z = (2.0 * rng.gen::<f64>() - 1.0) * (p[1] * p[2]).sqrt() * 0.999;
    XStateParams {
        a: p[0],
        b: p[1],
        c: p[2],
        d: p[3],
        w,
        z,
    }
}

fn random_hermitian(rng: &mut ChaCha8Rng) -> ComplexMatrix {
    let raw = ComplexMatrix::from_fn(4, |_, _| {
        Complex64::new(2.0 * rng.gen::<f64>() - 1.0, 2.0 * rng.gen::<f64>() - 1.0)
    });
    ComplexMatrix::from_fn(4, |i, j| (raw.get(i, j) + raw.get(j, i).conj()) * 0.5)
}

fn pure_qubit(theta: f64, phi: f64) -> [Complex64; 2] {
    [
        Complex64::new((theta / 2.0).cos(), 0.0),
        Complex64::from_polar((theta / 2.0).sin(), phi),
    ]
}

fn pure_state_collection(rng: &mut ChaCha8Rng) -> Vec<states::DensityMatrix> {
    let mut out = vec![
        // computational basis projectors
        states::classical(1.0, 0.0, 0.0, 0.0).unwrap(),
        states::classical(0.0, 1.0, 0.0, 0.0).unwrap(),
        states::classical(0.0, 0.0, 1.0, 0.0).unwrap(),
        states::classical(0.0, 0.0, 0.0, 1.0).unwrap(),
        // Bell projectors
        states::werner(1.0).unwrap(),
        states::x_state(&XStateParams { a: 0.5, b: 0.0, c: 0.0, d: 0.5, w: 0.5, z: 0.0 }).unwrap(),
        states::x_state(&XStateParams { a: 0.5, b: 0.0, c: 0.0, d: 0.5, w: -0.5, z: 0.0 }).unwrap(),
        states::x_state(&XStateParams { a: 0.0, b: 0.5, c: 0.5, d: 0.0, w: 0.0, z: 0.5 }).unwrap(),
    ];
    // random product states
    for _ in 0..20 {
        let qa = pure_qubit(
            rng.gen::<f64>() * std::f64::consts::PI,
            rng.gen::<f64>() * 2.0 * std::f64::consts::PI,
        );
        let qb = pure_qubit(
            rng.gen::<f64>() * std::f64::consts::PI,
            rng.gen::<f64>() * 2.0 * std::f64::consts::PI,
        );
        let amp = |i: usize| qa[i / 2] * qb[i % 2];
        let m = ComplexMatrix::from_fn(4, |i, j| amp(i) * amp(j).conj());
        out.push(states::validate(m).unwrap());
    }
    out
}
