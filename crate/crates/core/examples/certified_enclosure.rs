// Certified enclosures of Euler's constant from x_n, y_n and the sharp bounds.

use gamma_sharp::sharp_bounds::{enclose, Method};
use gamma_sharp::AccuracyPolicy;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let policy = AccuracyPolicy::default();
    for n in [1, 10, 100, 1000, 10_000] {
        for method in Method::ALL {
            let e = match enclose(1.0, n, method, &policy) {
                Ok(e) => e,
                Err(err) => {
                    println!("n = {n:>5} {method:<9} skipped: {err}");
                    continue;
                }
            };
            println!(
                "n = {n:>5} {method:<9} {}{:.17}, {:.17}{}  width {:.3e}",
                if e.lo_closed { '[' } else { '(' },
                e.lo,
                e.hi,
                if e.hi_closed { ']' } else { ')' },
                e.width()
            );
            assert!(e.contains(EULER_GAMMA));
        }
    }
    let e = enclose(1.0, 10_000, Method::Thm14X, &policy)?;
    assert!(e.width() <= 2e-11);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
