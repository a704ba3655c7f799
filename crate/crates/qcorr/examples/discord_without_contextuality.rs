//! Discord and the gap test pull apart: a scan of the separable family
//! diag(1/4+α, 1/4+β, 1/4−β, 1/4−α) with common coherence z.
//!
//! Every member keeps the product-average gap at zero (consistent with
//! predetermined local outcomes for these operator pairs), yet most members
//! carry nonzero discord — vanishing only along α = β, z = 0, or at the
//! maximally mixed point.
//!
//! ```bash
//! cargo run -p qcorr --example discord_without_contextuality
//! ```

use qcorr::correlations::quantum_discord;
use qcorr::contextuality::noncontextuality_gap;
use qcorr::states::{self, CounterexampleParams};

fn main() {
    let z = 0.1;
    println!("discord across the (α, β) plane at z = {z}  (· < 1e-6, digits = 100×discord)");
    println!();

    let steps = 17;
    let mut max_discord: f64 = 0.0;
    let mut max_gap: f64 = 0.0;
    for i in 0..steps {
        let alpha = -0.2 + 0.4 * (i as f64) / ((steps - 1) as f64);
        let mut row = String::new();
        for j in 0..steps {
            let beta = -0.2 + 0.4 * (j as f64) / ((steps - 1) as f64);
            match states::counterexample(&CounterexampleParams { alpha, beta, z }) {
                Ok(rho) => {
                    let report = quantum_discord(&rho).unwrap();
                    let gap = noncontextuality_gap(&rho).unwrap();
                    max_discord = max_discord.max(report.discord);
                    max_gap = max_gap.max(gap.abs());
                    if report.discord < 1e-6 {
                        row.push_str("  ·");
                    } else {
                        row.push_str(&format!("{:>3.0}", 100.0 * report.discord));
                    }
                }
                Err(_) => row.push_str("   "),
            }
        }
        println!("α={alpha:>6.3} {row}");
    }

    println!();
    println!("max discord over the scan : {max_discord:.4}  (stays under 0.3)");
    println!("max |gap| over the scan   : {max_gap:.1e}   (identically zero)");
    println!("the silent diagonal is α = β; z = 0 planes are silent too");
}
