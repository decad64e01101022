//! Digamma, trigamma and the cancellation-free residuals `ln x − ψ(x)` and
//! `ψ(x+1) − ln x`.
//!
//! All evaluations shift the argument upward with the recurrence
//! `ψ(x+1) = ψ(x) + 1/x` until it reaches the policy's cutoff, then apply the
//! asymptotic expansion
//!
//! ```text
//! ψ(z) ~ ln z − 1/(2z) − Σ_{k≥1} B_{2k} / (2k z^{2k})
//! ```
//!
//! For real `z > 0` the expansion is enveloping: the truncation error is
//! bounded by the first omitted term, which is what every returned
//! [`EvalResult`] charges in addition to per-operation rounding.

pub mod bernoulli;
mod eval;

pub use eval::EvalResult;

use crate::error::{require_positive, Error, Result};

/// Working configuration for every special-function evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AccuracyPolicy {
    shift_cutoff: f64,
    series_terms: usize,
    target_rel_error: f64,
}

impl Default for AccuracyPolicy {
    fn default() -> Self {
        Self {
            shift_cutoff: 16.0,
            series_terms: 8,
            target_rel_error: 1e-13,
        }
    }
}

impl AccuracyPolicy {
    pub const MIN_SHIFT_CUTOFF: f64 = 10.0;
    pub const MIN_SERIES_TERMS: usize = 3;
    pub const MAX_SERIES_TERMS: usize = 30;

    pub fn new(shift_cutoff: f64, series_terms: usize, target_rel_error: f64) -> Result<Self> {
        if !(shift_cutoff.is_finite() && shift_cutoff >= Self::MIN_SHIFT_CUTOFF) {
            return Err(Error::Policy(format!(
                "shift_cutoff must be >= {}, got {shift_cutoff}",
                Self::MIN_SHIFT_CUTOFF
            )));
        }
        if !(Self::MIN_SERIES_TERMS..=Self::MAX_SERIES_TERMS).contains(&series_terms) {
            return Err(Error::Policy(format!(
                "series_terms must lie in {}..={}, got {series_terms}",
                Self::MIN_SERIES_TERMS,
                Self::MAX_SERIES_TERMS
            )));
        }
        if !(target_rel_error.is_finite() && target_rel_error > 0.0) {
            return Err(Error::Policy(format!(
                "target_rel_error must be > 0, got {target_rel_error}"
            )));
        }
        Ok(Self {
            shift_cutoff,
            series_terms,
            target_rel_error,
        })
    }

    pub fn with_series_terms(self, series_terms: usize) -> Result<Self> {
        Self::new(self.shift_cutoff, series_terms, self.target_rel_error)
    }

    pub fn with_shift_cutoff(self, shift_cutoff: f64) -> Result<Self> {
        Self::new(shift_cutoff, self.series_terms, self.target_rel_error)
    }

    pub fn shift_cutoff(&self) -> f64 {
        self.shift_cutoff
    }

    pub fn series_terms(&self) -> usize {
        self.series_terms
    }

    pub fn target_rel_error(&self) -> f64 {
        self.target_rel_error
    }

    fn shift_steps(&self, x: f64) -> usize {
        if x >= self.shift_cutoff {
            0
        } else {
            (self.shift_cutoff - x).ceil() as usize
        }
    }

    fn check(&self, x: f64, truncation: f64, scale: f64) -> Result<()> {
        if truncation <= self.target_rel_error * scale.abs() {
            Ok(())
        } else {
            Err(Error::Accuracy {
                x,
                truncation,
                target: self.target_rel_error,
                scale,
            })
        }
    }
}

/// Partial sum plus the bound on everything left out.
struct Series {
    sum: EvalResult,
    truncation: f64,
}

impl Series {
    fn value(&self) -> EvalResult {
        self.sum.widen(self.truncation)
    }
}

fn bernoulli_even(k: usize) -> EvalResult {
    let b = bernoulli::even(k);
    EvalResult::new(b, 2.0 * f64::EPSILON * b.abs())
}

/// Range of expansion indices `k` summed when the first `skip` corrections
/// are removed; the last entry is the first omitted index.
fn term_range(skip: usize, policy: &AccuracyPolicy) -> (usize, usize) {
    let last = (skip + policy.series_terms).min(bernoulli::MAX_INDEX - 1);
    (skip + 1, last)
}

/// Remainders (`skip > 0`) are small compared with the function itself, so
/// near the cutoff they may need a few terms beyond `series_terms` to reach
/// the target relative accuracy. `next` is the index about to be added.
fn extend(skip: usize, next: usize, truncation: f64, sum: f64, policy: &AccuracyPolicy) -> bool {
    skip > 0 && next < bernoulli::MAX_INDEX && truncation > policy.target_rel_error * sum.abs()
}

/// `Σ_{k=skip+1}^{skip+K} B_{2k} / (2k z^{2k})`, i.e. `ln z − ψ(z) − 1/(2z)`
/// with the first `skip` corrections removed.
fn lmp_tail_series(z: EvalResult, skip: usize, policy: &AccuracyPolicy) -> Series {
    let (first, last) = term_range(skip, policy);
    let inv2 = (z * z).recip();
    let mut power = inv2.powi(first as i32);
    let mut sum = EvalResult::exact(0.0);
    let mut k = first;
    loop {
        sum = sum + bernoulli_even(k) / (2 * k) as f64 * power;
        power = power * inv2;
        k += 1;
        let truncation = (bernoulli::even(k) / (2 * k) as f64).abs() * power.hi();
        if k > last && !extend(skip, k, truncation, sum.value, policy) {
            return Series { sum, truncation };
        }
    }
}

/// `Σ_{k=skip+1}^{skip+K} B_{2k} / z^{2k+1}`, i.e. `ψ′(z) − 1/z − 1/(2z²)`
/// with the first `skip` corrections removed.
fn trigamma_tail_series(z: EvalResult, skip: usize, policy: &AccuracyPolicy) -> Series {
    let (first, last) = term_range(skip, policy);
    let inv = z.recip();
    let inv2 = inv * inv;
    let mut power = inv.powi(2 * first as i32 + 1);
    let mut sum = EvalResult::exact(0.0);
    let mut k = first;
    loop {
        sum = sum + bernoulli_even(k) * power;
        power = power * inv2;
        k += 1;
        let truncation = bernoulli::even(k).abs() * power.hi();
        if k > last && !extend(skip, k, truncation, sum.value, policy) {
            return Series { sum, truncation };
        }
    }
}

/// `ln z − ψ(z)` for `z` at or above the cutoff.
fn lmp_large(z: EvalResult, policy: &AccuracyPolicy) -> Series {
    let tail = lmp_tail_series(z, 0, policy);
    Series {
        sum: 0.5 / z + tail.sum,
        truncation: tail.truncation,
    }
}

/// `Σ_{j=from}^{to-1} 1/(x+j)`
fn shift_sum(x: f64, from: usize, to: usize) -> EvalResult {
    (from..to)
        .map(|j| (EvalResult::exact(x) + j as f64).recip())
        .sum()
}

fn shifted(x: f64, steps: usize) -> EvalResult {
    EvalResult::exact(x) + steps as f64
}

/// Digamma function ψ(x) for `x > 0`.
pub fn psi(x: f64, policy: &AccuracyPolicy) -> Result<EvalResult> {
    require_positive("psi", x)?;
    let steps = policy.shift_steps(x);
    let z = shifted(x, steps);
    let ln_z = z.ln();
    let tail = lmp_large(z, policy);
    let value = ln_z - tail.sum - shift_sum(x, 0, steps);
    policy.check(x, tail.truncation, ln_z.value.abs().max(value.value.abs()))?;
    Ok(value.widen(tail.truncation))
}

/// Trigamma function ψ′(x) for `x > 0`.
pub fn trigamma(x: f64, policy: &AccuracyPolicy) -> Result<EvalResult> {
    require_positive("trigamma", x)?;
    let steps = policy.shift_steps(x);
    let z = shifted(x, steps);
    let inv = z.recip();
    let tail = trigamma_tail_series(z, 0, policy);
    let large = inv + 0.5 * inv * inv + tail.sum;
    let shift: EvalResult = (0..steps)
        .map(|j| (EvalResult::exact(x) + j as f64).powi(-2))
        .sum();
    let value = shift + large;
    policy.check(x, tail.truncation, value.value)?;
    Ok(value.widen(tail.truncation))
}

/// `ln x − ψ(x)`, evaluated without subtracting the two large terms.
///
/// Always positive. Equals γ(x), the generalized Euler–Mascheroni constant.
pub fn ln_minus_psi(x: f64, policy: &AccuracyPolicy) -> Result<EvalResult> {
    require_positive("ln_minus_psi", x)?;
    let steps = policy.shift_steps(x);
    let series = lmp_large(shifted(x, steps), policy);
    let value = if steps == 0 {
        series.sum
    } else {
        // ln(x/(x+m)) + Σ_{j<m} 1/(x+j) + [ln(x+m) − ψ(x+m)]
        -(EvalResult::exact(steps as f64) / x).ln_1p() + shift_sum(x, 0, steps) + series.sum
    };
    policy.check(x, series.truncation, value.value)?;
    Ok(value.widen(series.truncation))
}

/// `ψ(x+1) − ln x`, evaluated without cancellation of the leading `1/x`.
///
/// Always positive; `ln_minus_psi(x) + psi_shift1_minus_ln(x) = 1/x`.
pub fn psi_shift1_minus_ln(x: f64, policy: &AccuracyPolicy) -> Result<EvalResult> {
    require_positive("psi_shift1_minus_ln", x)?;
    let steps = policy.shift_steps(x);
    let value;
    let truncation;
    if steps == 0 {
        let tail = lmp_tail_series(EvalResult::exact(x), 0, policy);
        value = 0.5 / EvalResult::exact(x) - tail.sum;
        truncation = tail.truncation;
    } else {
        let series = lmp_large(shifted(x, steps), policy);
        value = (EvalResult::exact(steps as f64) / x).ln_1p() - shift_sum(x, 1, steps) - series.sum;
        truncation = series.truncation;
    }
    policy.check(x, truncation, value.value)?;
    Ok(value.widen(truncation))
}

/// Remainder of the expansion of `ln x − ψ(x)` after `1/(2x)` and the first
/// `skip` Bernoulli corrections:
///
/// ```text
/// ln x − ψ(x) − 1/(2x) − Σ_{k=1}^{skip} B_{2k} / (2k x^{2k})
/// ```
///
/// Above the cutoff this is summed directly, so it keeps full relative
/// accuracy however small it gets.
pub fn ln_minus_psi_tail(x: f64, skip: usize, policy: &AccuracyPolicy) -> Result<EvalResult> {
    require_positive("ln_minus_psi_tail", x)?;
    if x >= policy.shift_cutoff {
        let tail = lmp_tail_series(EvalResult::exact(x), skip, policy);
        policy.check(x, tail.truncation, tail.sum.value)?;
        return Ok(tail.value());
    }
    let full = ln_minus_psi(x, policy)?;
    let xe = EvalResult::exact(x);
    let inv2 = (xe * xe).recip();
    let mut power = inv2;
    let mut poly = 0.5 / xe;
    for k in 1..=skip {
        poly = poly + bernoulli_even(k) / (2 * k) as f64 * power;
        power = power * inv2;
    }
    Ok(full - poly)
}

/// Remainder of the expansion of `ψ′(x)` after `1/x + 1/(2x²)` and the first
/// `skip` Bernoulli corrections.
pub fn trigamma_tail(x: f64, skip: usize, policy: &AccuracyPolicy) -> Result<EvalResult> {
    require_positive("trigamma_tail", x)?;
    if x >= policy.shift_cutoff {
        let tail = trigamma_tail_series(EvalResult::exact(x), skip, policy);
        policy.check(x, tail.truncation, tail.sum.value)?;
        return Ok(tail.value());
    }
    let full = trigamma(x, policy)?;
    let inv = EvalResult::exact(x).recip();
    let inv2 = inv * inv;
    let mut power = inv2 * inv;
    let mut poly = inv + 0.5 * inv2;
    for k in 1..=skip {
        poly = poly + bernoulli_even(k) * power;
        power = power * inv2;
    }
    Ok(full - poly)
}

/// Input-uncertainty variants: `x` is itself a computed quantity. The extra
/// error is `|x.err| · sup |f′|` over the uncertainty interval.
pub(crate) fn psi_at(x: EvalResult, policy: &AccuracyPolicy) -> Result<EvalResult> {
    let lo = x.lo();
    let v = psi(x.value, policy)?;
    Ok(v.widen(x.abs_error_bound * (1.0 / lo + 1.0 / (lo * lo))))
}

pub(crate) fn ln_minus_psi_at(x: EvalResult, policy: &AccuracyPolicy) -> Result<EvalResult> {
    let lo = x.lo();
    let v = ln_minus_psi(x.value, policy)?;
    Ok(v.widen(x.abs_error_bound / (lo * lo)))
}

pub(crate) fn psi_shift1_minus_ln_at(x: EvalResult, policy: &AccuracyPolicy) -> Result<EvalResult> {
    let lo = x.lo();
    let v = psi_shift1_minus_ln(x.value, policy)?;
    Ok(v.widen(x.abs_error_bound / (lo * lo)))
}

/// `n + a` with the exact rounding error of the sum as its bound.
pub(crate) fn index_sum(n: f64, a: f64) -> EvalResult {
    let s = n + a;
    // TwoSum
    let bp = s - n;
    let err = (n - (s - bp)) + (a - bp);
    EvalResult::new(s, err.abs())
}
