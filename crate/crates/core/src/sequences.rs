//! The generalized Euler–Mascheroni constant γ(a) and its two approximating
//! sequences
//!
//! ```text
//! x_n = Σ_{k=0}^{n-1} 1/(a+k) − ln((a+n)/a)
//! y_n = Σ_{k=0}^{n-1} 1/(a+k) − ln((a+n−1)/a)
//! ```
//!
//! Closed forms go through ψ; the direct forms sum the harmonic-type series
//! with Neumaier compensation and serve as an independent check.

use serde::Serialize;

use crate::error::{require_index, require_positive, Error, Result};
use crate::special_fn::{self, index_sum, AccuracyPolicy, EvalResult};

/// Largest `n` accepted by the direct-summation paths and by [`table`].
pub const SUMMATION_GUARD: u64 = 10_000_000;

/// γ(a) = ln a − ψ(a).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GeneralizedGamma {
    pub a: f64,
    pub value: f64,
    pub abs_error_bound: f64,
}

/// One row of the convergence table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SeqPoint {
    pub a: f64,
    pub n: u64,
    pub x_n: f64,
    pub y_n: f64,
    /// γ(a) − x_n
    pub res_x: f64,
    /// y_n − γ(a)
    pub res_y: f64,
}

/// Kahan–Babuška–Neumaier accumulator.
#[derive(Debug, Default, Clone, Copy)]
pub struct NeumaierSum {
    sum: f64,
    compensation: f64,
}

impl NeumaierSum {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn total(&self) -> f64 {
        self.sum + self.compensation
    }
}

pub fn gamma_a(a: f64, policy: &AccuracyPolicy) -> Result<GeneralizedGamma> {
    require_positive("a", a)?;
    let v = special_fn::ln_minus_psi(a, policy)?;
    Ok(GeneralizedGamma {
        a,
        value: v.value,
        abs_error_bound: v.abs_error_bound,
    })
}

fn check_args(a: f64, n: u64) -> Result<()> {
    require_positive("a", a)?;
    require_index("n", n)
}

fn guard(n: u64) -> Result<()> {
    if n > SUMMATION_GUARD {
        Err(Error::Resource {
            n,
            limit: SUMMATION_GUARD,
        })
    } else {
        Ok(())
    }
}

/// ψ(n+a) − ψ(a) − ln(1 + steps/a), shared by both closed forms.
fn closed_form(a: f64, n: u64, log_steps: u64, policy: &AccuracyPolicy) -> Result<EvalResult> {
    let psi_na = special_fn::psi_at(index_sum(n as f64, a), policy)?;
    let psi_a = special_fn::psi(a, policy)?;
    let log = (EvalResult::exact(log_steps as f64) / a).ln_1p();
    Ok(psi_na - psi_a - log)
}

pub(crate) fn x_n_eval(a: f64, n: u64, policy: &AccuracyPolicy) -> Result<EvalResult> {
    check_args(a, n)?;
    closed_form(a, n, n, policy)
}

pub(crate) fn y_n_eval(a: f64, n: u64, policy: &AccuracyPolicy) -> Result<EvalResult> {
    check_args(a, n)?;
    closed_form(a, n, n - 1, policy)
}

/// x_n = ψ(n+a) − ψ(a) − ln((n+a)/a).
pub fn x_n_closed(a: f64, n: u64, policy: &AccuracyPolicy) -> Result<f64> {
    x_n_eval(a, n, policy).map(|v| v.value)
}

/// y_n = ψ(n+a) − ψ(a) − ln((n+a−1)/a).
pub fn y_n_closed(a: f64, n: u64, policy: &AccuracyPolicy) -> Result<f64> {
    y_n_eval(a, n, policy).map(|v| v.value)
}

fn partial_sum(a: f64, n: u64) -> f64 {
    let mut acc = NeumaierSum::default();
    for k in 0..n {
        acc.add(1.0 / (a + k as f64));
    }
    acc.total()
}

pub fn x_n_direct(a: f64, n: u64, _policy: &AccuracyPolicy) -> Result<f64> {
    check_args(a, n)?;
    guard(n)?;
    Ok(partial_sum(a, n) - (n as f64 / a).ln_1p())
}

pub fn y_n_direct(a: f64, n: u64, _policy: &AccuracyPolicy) -> Result<f64> {
    check_args(a, n)?;
    guard(n)?;
    Ok(partial_sum(a, n) - ((n - 1) as f64 / a).ln_1p())
}

pub(crate) fn residual_x_eval(a: f64, n: u64, policy: &AccuracyPolicy) -> Result<EvalResult> {
    check_args(a, n)?;
    special_fn::ln_minus_psi_at(index_sum(n as f64, a), policy)
}

pub(crate) fn residual_y_eval(a: f64, n: u64, policy: &AccuracyPolicy) -> Result<EvalResult> {
    check_args(a, n)?;
    special_fn::psi_shift1_minus_ln_at(index_sum((n - 1) as f64, a), policy)
}

/// γ(a) − x_n = ln(n+a) − ψ(n+a).
pub fn residual_x(a: f64, n: u64, policy: &AccuracyPolicy) -> Result<f64> {
    residual_x_eval(a, n, policy).map(|v| v.value)
}

/// y_n − γ(a) = ψ(n+a) − ln(n+a−1).
pub fn residual_y(a: f64, n: u64, policy: &AccuracyPolicy) -> Result<f64> {
    residual_y_eval(a, n, policy).map(|v| v.value)
}

pub fn seq_point(a: f64, n: u64, policy: &AccuracyPolicy) -> Result<SeqPoint> {
    Ok(SeqPoint {
        a,
        n,
        x_n: x_n_closed(a, n, policy)?,
        y_n: y_n_closed(a, n, policy)?,
        res_x: residual_x(a, n, policy)?,
        res_y: residual_y(a, n, policy)?,
    })
}

/// Rows for `n = 1..=n_max`, ordered by `n`.
pub fn table(a: f64, n_max: u64, policy: &AccuracyPolicy) -> Result<Vec<SeqPoint>> {
    require_positive("a", a)?;
    require_index("n_max", n_max)?;
    guard(n_max)?;
    (1..=n_max).map(|n| seq_point(a, n, policy)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p() -> AccuracyPolicy {
        AccuracyPolicy::default()
    }

    #[test]
    fn gamma_at_one_and_two() {
        let g1 = gamma_a(1.0, &p()).unwrap();
        assert!((g1.value - 0.5772156649).abs() < 1e-10);
        let g2 = gamma_a(2.0, &p()).unwrap();
        let oracle = 0.270_362_845_461_478_17;
        assert!((g2.value - oracle).abs() <= g2.abs_error_bound);
        assert!((g2.value - oracle).abs() < 4e-15);
        let g1000 = gamma_a(1000.0, &p()).unwrap();
        assert!((g1000.value - (5e-4 + 1.0 / 12e6 - 1.0 / 120e12)).abs() < 1e-18);
    }

    #[test]
    fn closed_forms_small_n() {
        let p = p();
        assert!((x_n_closed(1.0, 1, &p).unwrap() - (1.0 - 2f64.ln())).abs() < 1e-15);
        for a in [0.1, 0.5, 3.0, 17.0] {
            let x1 = x_n_closed(a, 1, &p).unwrap();
            assert!(
                (x1 - (1.0 / a - ((a + 1.0) / a).ln())).abs() < 1e-13,
                "a = {a}"
            );
            assert!((y_n_closed(a, 1, &p).unwrap() - 1.0 / a).abs() < 1e-13 * (1.0 / a));
        }
        assert!((y_n_closed(0.5, 1, &p).unwrap() - 2.0).abs() < 1e-14);
    }

    #[test]
    fn harmonic_spot_values() {
        let p = p();
        let h10 = 7381.0 / 2520.0;
        assert!((x_n_closed(1.0, 10, &p).unwrap() - (h10 - 11f64.ln())).abs() < 1e-14);
        assert!((y_n_closed(1.0, 10, &p).unwrap() - (h10 - 10f64.ln())).abs() < 1e-14);
        assert!((residual_x(1.0, 10, &p).unwrap() - 0.0461426837).abs() < 1e-10);
        assert!((residual_y(1.0, 10, &p).unwrap() - 0.0491674961).abs() < 1e-10);
    }

    #[test]
    fn direct_sums() {
        let p = p();
        assert!((x_n_direct(1.0, 2, &p).unwrap() - (1.5 - 3f64.ln())).abs() < 1e-15);
        assert!((y_n_direct(1.0, 2, &p).unwrap() - (1.5 - 2f64.ln())).abs() < 1e-15);
        assert!((y_n_direct(3.0, 1, &p).unwrap() - 1.0 / 3.0).abs() < 1e-16);
    }

    #[test]
    fn direct_guard_and_domain() {
        let p = p();
        assert!(matches!(
            x_n_direct(1.0, SUMMATION_GUARD + 1, &p),
            Err(Error::Resource { .. })
        ));
        assert!(matches!(
            table(1.0, SUMMATION_GUARD + 1, &p),
            Err(Error::Resource { .. })
        ));
        assert!(x_n_closed(0.0, 3, &p).is_err());
        assert!(y_n_closed(1.0, 0, &p).is_err());
        assert!(residual_y(-2.0, 1, &p).is_err());
        // closed form has no guard
        assert!(x_n_closed(1.0, SUMMATION_GUARD * 100, &p).is_ok());
    }

    #[test]
    fn residual_n1_values() {
        let p = p();
        assert!((residual_x(1.0, 1, &p).unwrap() - 0.2703628455).abs() < 1e-10);
        assert!((residual_y(1.0, 1, &p).unwrap() - 0.4227843351).abs() < 1e-10);
    }

    #[test]
    fn residual_limit() {
        let p = p();
        let n = 1_000_000;
        let r = residual_x(2.5, n, &p).unwrap();
        assert!((r * 2.0 * (n as f64 + 2.5) - 1.0).abs() < 1e-6);
    }

    #[test]
    fn table_rows() {
        let p = p();
        let one = table(1.0, 1, &p).unwrap();
        assert_eq!(one.len(), 1);
        assert!((one[0].x_n - 0.3068528194).abs() < 1e-10);
        assert!((one[0].y_n - 1.0).abs() < 1e-15);

        let three = table(2.0, 3, &p).unwrap();
        assert!(three.windows(2).all(|w| w[1].res_x < w[0].res_x));

        for row in table(0.7, 10, &p).unwrap() {
            let na = row.n as f64 + 0.7;
            let gap = (na / (na - 1.0)).ln();
            assert!((row.res_x + row.res_y - gap).abs() < 1e-14);
        }
    }

    #[test]
    fn neumaier_recovers_cancelled_terms() {
        let mut s = NeumaierSum::default();
        for x in [1.0, 1e100, 1.0, -1e100] {
            s.add(x);
        }
        assert_eq!(s.total(), 2.0);
    }
}
