// The sharp bounds next to earlier ones for the same residual.

use gamma_sharp::sequences::{residual_x, residual_y};
use gamma_sharp::sharp_bounds::{bound_residual, Family, Residual, Side};
use gamma_sharp::AccuracyPolicy;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let policy = AccuracyPolicy::default();
    let (a, n) = (1.0, 10);
    let rx = residual_x(a, n, &policy)?;
    let ry = residual_y(a, n, &policy)?;
    println!("a = {a}, n = {n}: res_x = {rx:.12e}, res_y = {ry:.12e}");
    for family in Family::ALL {
        let res = match family.residual() {
            Residual::X => rx,
            Residual::Y => ry,
        };
        let lo = bound_residual(a, n, family, Side::Lo, &policy)?;
        let hi = bound_residual(a, n, family, Side::Hi, &policy).ok();
        let width = hi
            .map(|h| format!("{:.3e}", h - lo))
            .unwrap_or_else(|| "-".into());
        println!(
            "{:<8} lo slack {:>11.3e}  hi slack {:>11}  width {width}",
            family.name(),
            res - lo,
            hi.map(|h| format!("{:.3e}", h - res))
                .unwrap_or_else(|| "-".into()),
        );
        assert!(lo <= res);
    }
    let thm = bound_residual(a, n, Family::Thm13X, Side::Lo, &policy)?;
    let bm = bound_residual(a, n, Family::Bm11X, Side::Lo, &policy)?;
    assert!(thm > bm);
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
