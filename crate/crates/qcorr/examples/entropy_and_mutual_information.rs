//! Von Neumann entropy and mutual information for a few notable states.
//!
//! ```bash
//! cargo run -p qcorr --example entropy_and_mutual_information
//! ```

use qcorr::correlations::{mutual_information, von_neumann_entropy};
use qcorr::states;
use qcorr::Subsystem;

fn main() {
    let cases = [
        ("maximally mixed I/4", states::maximally_mixed()),
        ("singlet |Ψ⁻⟩⟨Ψ⁻|", states::werner(1.0).unwrap()),
        ("werner(1/3)", states::werner(1.0 / 3.0).unwrap()),
        (
            "classically correlated diag(1/2,0,0,1/2)",
            states::classical(0.5, 0.0, 0.0, 0.5).unwrap(),
        ),
        (
            "product diag(0.28,0.42,0.12,0.18)",
            states::classical(0.7 * 0.4, 0.7 * 0.6, 0.3 * 0.4, 0.3 * 0.6).unwrap(),
        ),
    ];

    println!("{:<42} {:>8} {:>8} {:>8} {:>8}", "state", "S(A)", "S(B)", "S(AB)", "I");
    for (name, rho) in cases {
        let s_a = von_neumann_entropy(&rho.reduced(Subsystem::A)).unwrap();
        let s_b = von_neumann_entropy(&rho.reduced(Subsystem::B)).unwrap();
        let s = von_neumann_entropy(rho.matrix()).unwrap();
        let i = mutual_information(&rho).unwrap();
        println!("{name:<42} {s_a:>8.4} {s_b:>8.4} {s:>8.4} {i:>8.4}");
    }

    println!();
    println!("A maximally entangled pure state carries I = 2 bits with zero total");
    println!("entropy; a product state carries none; the classical mixture sits at 1.");
}
