// Tuning the shift-then-series evaluator, and what happens when the
// requested accuracy is out of reach.

use gamma_sharp::special_fn::psi;
use gamma_sharp::{AccuracyPolicy, Error};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let x = 0.25;
    for terms in [4, 6, 8, 12, 20] {
        let policy = AccuracyPolicy::default().with_series_terms(terms)?;
        let v = psi(x, &policy)?;
        println!(
            "terms = {terms:>2}: psi({x}) = {:.17} ± {:.1e}",
            v.value, v.abs_error_bound
        );
    }

    // A low cutoff with few terms cannot reach 1e-13 relative accuracy.
    let coarse = AccuracyPolicy::new(10.0, 3, 1e-13)?;
    match psi(x, &coarse) {
        Err(Error::Accuracy { truncation, .. }) => {
            println!("cutoff 10, 3 terms: refused, truncation bound {truncation:.1e}")
        }
        other => return Err(format!("expected an accuracy error, got {other:?}").into()),
    }
    let loose = AccuracyPolicy::new(10.0, 3, 1e-8)?;
    println!("cutoff 10, 3 terms, target 1e-8: {}", psi(x, &loose)?);

    assert!(AccuracyPolicy::new(5.0, 8, 1e-13).is_err());
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
