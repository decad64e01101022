// Digamma and trigamma with a running error bound.

use gamma_sharp::special_fn::{psi, trigamma};
use gamma_sharp::AccuracyPolicy;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let policy = AccuracyPolicy::default();
    println!(
        "{:>8}  {:>24}  {:>10}  {:>24}",
        "x", "psi(x)", "err", "trigamma(x)"
    );
    for x in [0.1, 0.5, 1.0, 2.0, 15.5, 16.0, 100.0, 1e6] {
        let p = psi(x, &policy)?;
        let t = trigamma(x, &policy)?;
        println!(
            "{x:>8}  {:>24.17}  {:>10.1e}  {:>24.17}",
            p.value, p.abs_error_bound, t.value
        );
    }

    // ψ(1) = −γ and ψ′(1) = π²/6
    let g = -psi(1.0, &policy)?.value;
    let z2 = trigamma(1.0, &policy)?.value;
    assert!((g - 0.577_215_664_901_532_9).abs() < 1e-15);
    assert!((z2 - std::f64::consts::PI.powi(2) / 6.0).abs() < 1e-14);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
