// Remainders of the asymptotic expansions of ln x − ψ(x) and ψ′(x). Their
// signs alternate with the number of terms kept.

use gamma_sharp::special_fn::{bernoulli, ln_minus_psi_tail, trigamma_tail};
use gamma_sharp::AccuracyPolicy;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let policy = AccuracyPolicy::default();
    for k in 1..=6 {
        let (num, den) = bernoulli::even_exact(k);
        println!("B_{} = {num}/{den}", 2 * k);
    }
    for x in [1.0, 4.0, 20.0, 1e3] {
        let tails: Vec<String> = (0..4)
            .map(|m| ln_minus_psi_tail(x, m, &policy).map(|t| format!("{:+.3e}", t.value)))
            .collect::<Result<_, _>>()?;
        println!("x = {x:<6} ln x - psi(x) remainders: {}", tails.join("  "));
        for m in 0..4 {
            let r = ln_minus_psi_tail(x, m, &policy)?.value;
            assert_eq!(r > 0.0, m % 2 == 0);
            let t = trigamma_tail(x, m, &policy)?.value;
            assert_eq!(t > 0.0, m % 2 == 0);
        }
    }
    Ok(())
}

fn main() -> Result<(), Box<dyn std::error::Error>> {
    run_example()
}
