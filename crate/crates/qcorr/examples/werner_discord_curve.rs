//! The discord-versus-c curve for the Werner family: zero only at the
//! maximally mixed point c = 0, rising to 1 bit at the singlet.
//!
//! Prints a small table plus an ASCII sketch; the CSV behind a full-detail
//! figure comes from `qcorr sweep werner --steps 101 --out werner.csv`.
//!
//! ```bash
//! cargo run -p qcorr --example werner_discord_curve
//! ```

use qcorr::correlations::quantum_discord;
use qcorr::states;

fn main() {
    let steps = 25;
    println!("{:>9} {:>10} {:>10} {:>10}", "c", "I", "J", "discord");
    let mut curve = Vec::new();
    for i in 0..=steps {
        let c = -1.0 / 3.0 + (4.0 / 3.0) * (i as f64) / (steps as f64);
        let c = c.min(1.0);
        let report = quantum_discord(&states::werner(c).unwrap()).unwrap();
        println!(
            "{c:>9.4} {:>10.6} {:>10.6} {:>10.6}",
            report.mutual_information, report.classical_correlation, report.discord
        );
        curve.push((c, report.discord));
    }

    println!();
    let width = 56;
    for (c, d) in curve {
        let bar = "#".repeat((d * width as f64).round() as usize);
        println!("c = {c:>7.3} |{bar}");
    }
    println!("{:>12}0{:>width$}", "", "1 bit", width = width);
}
