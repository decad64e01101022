// x_n increases and y_n decreases to γ(a). The closed forms agree with
// compensated direct summation.

use gamma_sharp::sequences::{gamma_a, table, x_n_direct, y_n_direct};
use gamma_sharp::AccuracyPolicy;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let policy = AccuracyPolicy::default();
    let a = 0.5;
    let gamma = gamma_a(a, &policy)?.value;
    println!("gamma({a}) = {gamma:.17}");
    println!(
        "{:>4}  {:>20}  {:>20}  {:>12}  {:>12}",
        "n", "x_n", "y_n", "res_x", "res_y"
    );
    let rows = table(a, 12, &policy)?;
    for r in &rows {
        println!(
            "{:>4}  {:>20.17}  {:>20.17}  {:>12.4e}  {:>12.4e}",
            r.n, r.x_n, r.y_n, r.res_x, r.res_y
        );
        let dx = (r.x_n - x_n_direct(a, r.n, &policy)?).abs();
        let dy = (r.y_n - y_n_direct(a, r.n, &policy)?).abs();
        assert!(dx < 1e-13 && dy < 1e-13);
        assert!(r.x_n < gamma && gamma < r.y_n);
    }
    assert!(rows
        .windows(2)
        .all(|w| w[0].x_n < w[1].x_n && w[0].y_n > w[1].y_n));
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
