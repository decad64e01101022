// Monotonicity, convexity, sign and limit certificates for the auxiliary
// functions, plus the four truncated-series inequalities for ψ and ψ′.

use gamma_sharp::proof_certificates::{
    chen_certificates, default_chen_grid, lemma_suite, monotonicity_scan, poly_f1, poly_f2,
    MonotonicityTarget,
};
use gamma_sharp::AccuracyPolicy;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let policy = AccuracyPolicy::default();
    println!(
        "F1(1) = {}, F1(2) = {}, F2(2) = {}",
        poly_f1(1.0),
        poly_f1(2.0),
        poly_f2(2.0)
    );

    for target in MonotonicityTarget::ALL {
        let r = monotonicity_scan(target, &target.default_grid(), &policy)?;
        println!(
            "{:<20} points {:>5}  checks {:>5}  inconclusive {:>3}  passed {}",
            target.name(),
            r.points_checked,
            r.checks,
            r.inconclusive,
            r.passed
        );
    }

    let chen = chen_certificates(&default_chen_grid(), &policy)?;
    println!(
        "chen: {} points, max violation {:.3e}",
        chen.points_checked, chen.max_violation
    );

    let all = lemma_suite(&policy)?;
    for o in &all.observations {
        println!("{} = {:.6e}", o.name, o.value);
    }
    assert!(all.passed && chen.passed);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
