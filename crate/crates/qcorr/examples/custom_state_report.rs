//! Validating a hand-built density matrix and producing the full report,
//! including the JSON emitted by `qcorr analyze`.
//!
//! ```bash
//! cargo run -p qcorr --example custom_state_report
//! ```

use qcorr::states::{self, XStateParams};
use qcorr::sweep::{analyze, StateParams};
use qcorr::{Complex64, ComplexMatrix};

fn main() {
    // Validation catches broken inputs with the offending magnitude.
    let bad_trace = ComplexMatrix::identity(4).scale_re(0.125);
    println!("diag(1/8,...): {}", states::validate(bad_trace).unwrap_err());

    let indefinite = ComplexMatrix::from_real_diag(&[0.5, 0.6, -0.05, -0.05]);
    println!("indefinite:    {}", states::validate(indefinite).unwrap_err());

    let mut lopsided = ComplexMatrix::identity(4).scale_re(0.25);
    lopsided.set(0, 3, Complex64::new(0.1, 0.05));
    println!("non-Hermitian: {}", states::validate(lopsided).unwrap_err());
    println!();

    // A well-formed X-state, built entry by entry and revalidated.
    let p = XStateParams {
        a: 0.32,
        b: 0.18,
        c: 0.22,
        d: 0.28,
        w: 0.20,
        z: 0.10,
    };
    let rho = states::x_state(&p).unwrap();
    assert!(states::validate(*rho.matrix()).is_ok());

    let record = analyze(&StateParams::XState(p), 1e-9, &Default::default()).unwrap();
    println!("entropy S(AB)         = {:.6} bits", record.report.entropy_total);
    println!("mutual information I  = {:.6} bits", record.report.mutual_information);
    println!("classical correlation = {:.6} bits", record.report.classical_correlation);
    println!("discord               = {:.6} bits", record.report.discord);
    println!("concurrence           = {:.6}", record.report.concurrence);
    println!(
        "best B measurement    = (theta {:.4}, phi {:.4})",
        record.report.optimal_setting.theta(),
        record.report.optimal_setting.phi()
    );
    println!(
        "gap Δ = {:.4}  → consistent with predetermined outcomes: {}",
        record.verdict.gap, record.verdict.consistent
    );
    println!();
    println!("as emitted by `qcorr analyze xstate ...`:");
    println!("{}", record.to_json());
}
