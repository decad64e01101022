// The sharp constants as functions of `a`.

use gamma_sharp::sharp_bounds::best_constants;
use gamma_sharp::AccuracyPolicy;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let policy = AccuracyPolicy::default();
    println!(
        "{:>6}  {:>12}  {:>12}  {:>12}  {:>12}  {:>4}",
        "a", "alpha1", "alpha2", "alpha3", "beta4", "n*"
    );
    for a in [0.05, 0.1, 0.2, 13.0 / 30.0, 0.5, 1.0, 2.0, 5.0, 10.0, 100.0] {
        let c = best_constants(a, &policy)?;
        println!(
            "{a:>6.3}  {:>12.9}  {:>12.9}  {:>12.9}  {:>12.9}  {:>4}{}",
            c.alpha1,
            c.alpha2,
            c.alpha3,
            c.beta4,
            c.argmax_n,
            if c.d_tie { " (tie)" } else { "" }
        );
    }

    // At a = 1 the y-side constants reduce to the classical ones.
    let gamma = 0.577_215_664_901_532_9;
    let c = best_constants(1.0, &policy)?;
    assert!((2.0 - c.alpha2 - (2.0 * gamma - 1.0) / (1.0 - gamma)).abs() < 1e-12);
    assert!((c.beta4 + (gamma - 0.5)).abs() < 1e-12);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
