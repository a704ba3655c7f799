//! Projective measurements on qubit B: outcome probabilities, conditional
//! states on A, and the search for the most informative measurement.
//!
//! ```bash
//! cargo run -p qcorr --example measurement_on_b
//! ```

use qcorr::correlations::{classical_correlation, measure_b, MeasurementSetting};
use qcorr::states;

fn main() {
    let singlet = states::werner(1.0).unwrap();
    let z_axis = MeasurementSetting::new(0.0, 0.0).unwrap();

    println!("measuring B of the singlet along z:");
    for (label, outcome) in ["+z", "-z"].iter().zip(measure_b(&singlet, &z_axis)) {
        println!(
            "  outcome {label}: p = {:.3}, conditional A state diag = ({:.3}, {:.3})",
            outcome.probability,
            outcome.conditional_state_a.get(0, 0).re,
            outcome.conditional_state_a.get(1, 1).re,
        );
    }
    println!("  perfect anticorrelation: B up forces A down and vice versa.");
    println!();

    // The most informative measurement of a classical mixture is the basis
    // it is diagonal in; for diag(1/2,0,0,1/2) that is the z axis.
    let mixture = states::classical(0.5, 0.0, 0.0, 0.5).unwrap();
    let (j, setting) = classical_correlation(&mixture).unwrap();
    println!("diag(1/2,0,0,1/2): classical correlation = {j:.6} bits");
    println!(
        "  best setting theta = {:.6}, phi = {:.6} (the z axis)",
        setting.theta(),
        setting.phi()
    );
    println!();

    // For a discordant state no measurement extracts all of I.
    let werner = states::werner(0.5).unwrap();
    let (j, setting) = classical_correlation(&werner).unwrap();
    println!("werner(0.5): classical correlation = {j:.6} bits");
    println!(
        "  best setting theta = {:.4}, phi = {:.4} (every direction ties here)",
        setting.theta(),
        setting.phi()
    );
}
