// Each sharp constant is attained at a small index; the opposite one is
// approached monotonically as n → ∞.

use gamma_sharp::sharp_bounds::{sharpness_scan, Family};
use gamma_sharp::AccuracyPolicy;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let policy = AccuracyPolicy::default();
    for a in [0.3, 1.0, 4.0] {
        for family in Family::SHARP {
            let report = sharpness_scan(a, family, 1_000_000, 1e-12, &policy)?;
            let gap = report
                .observations
                .iter()
                .find(|o| o.name == "final_gap")
                .map(|o| o.value)
                .unwrap_or(f64::NAN);
            println!(
                "a = {a:<4} {:<8} passed = {:<5} checks = {:>4}  final gap = {gap:.3e}",
                family.name(),
                report.passed,
                report.checks
            );
            assert!(report.passed);
        }
    }

    // Below a ≈ 0.1026 the strict upper bound 5/3 of THM13_Y fails at n = 1.
    let report = sharpness_scan(0.1, Family::Thm13Y, 1000, 1e-12, &policy)?;
    for f in &report.failures {
        println!(
            "a = 0.1 THM13_Y: {} at {} (gap {:.3e})",
            f.check, f.location, f.gap
        );
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
