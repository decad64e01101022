// γ(a) = ln a − ψ(a) across several decades of `a`.

use gamma_sharp::sequences::gamma_a;
use gamma_sharp::AccuracyPolicy;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let policy = AccuracyPolicy::default();
    for a in [0.01, 0.1, 0.5, 1.0, 2.0, 10.0, 1000.0] {
        let g = gamma_a(a, &policy)?;
        // For large a, γ(a) ≈ 1/(2a) + 1/(12a²).
        let leading = 0.5 / a + 1.0 / (12.0 * a * a);
        println!(
            "a = {a:<7} gamma(a) = {:.17} ± {:.1e}   1/(2a)+1/(12a^2) = {leading:.6e}",
            g.value, g.abs_error_bound
        );
    }
    let g2 = gamma_a(2.0, &policy)?;
    assert!((g2.value - (2f64.ln() - 1.0 + 0.577_215_664_901_532_9)).abs() < 1e-14);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
