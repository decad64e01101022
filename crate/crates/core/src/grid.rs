//! Scan grids.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// Inclusive arithmetic grid `lo:hi:step`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec {
    pub lo: f64,
    pub hi: f64,
    pub step: f64,
    decimals: u32,
}

impl GridSpec {
    pub fn new(lo: f64, hi: f64, step: f64) -> Result<Self, Error> {
        if !(lo.is_finite() && hi.is_finite() && step.is_finite()) || lo > hi || step <= 0.0 {
            return Err(Error::Precondition(format!(
                "grid needs finite lo <= hi and step > 0, got {lo}:{hi}:{step}"
            )));
        }
        Ok(Self {
            lo,
            hi,
            step,
            decimals: 12,
        })
    }

    /// Grid points `lo + i·step <= hi`, rounded to the decimal precision of
    /// the input string so that `0.1:1:0.1` yields `0.3` rather than
    /// `0.30000000000000004`.
    pub fn points(&self) -> Vec<f64> {
        let scale = 10f64.powi(self.decimals as i32);
        let count = ((self.hi - self.lo) / self.step + 1e-9).floor() as usize;
        (0..=count)
            .map(|i| ((self.lo + i as f64 * self.step) * scale).round() / scale)
            .collect()
    }
}

fn decimals_of(text: &str) -> u32 {
    let mantissa = text.split(['e', 'E']).next().unwrap_or("");
    mantissa
        .split_once('.')
        .map(|(_, frac)| frac.len() as u32)
        .unwrap_or(0)
}

impl FromStr for GridSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let parts: Vec<&str> = s.split(':').collect();
        let bad = || Error::Precondition(format!("grid spec must be lo:hi:step, got {s:?}"));
        if parts.len() != 3 {
            return Err(bad());
        }
        let nums: Vec<f64> = parts
            .iter()
            .map(|p| p.trim().parse::<f64>().map_err(|_| bad()))
            .collect::<Result<_, _>>()?;
        let mut spec = GridSpec::new(nums[0], nums[1], nums[2])?;
        let exp_free = parts.iter().all(|p| !p.contains(['e', 'E']));
        if exp_free {
            spec.decimals = parts
                .iter()
                .map(|p| decimals_of(p.trim()))
                .max()
                .unwrap_or(0);
        }
        Ok(spec)
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.lo, self.hi, self.step)
    }
}

/// `points_per_decade` logarithmically spaced values in `[from, to]`,
/// both endpoints included.
pub fn log_points(from: f64, to: f64, points_per_decade: usize) -> Vec<f64> {
    if !(from > 0.0 && to >= from) {
        return Vec::new();
    }
    let decades = (to / from).log10();
    let steps = ((decades * points_per_decade as f64).ceil() as usize).max(1);
    let mut out: Vec<f64> = (0..=steps)
        .map(|i| from * 10f64.powf(decades * i as f64 / steps as f64))
        .collect();
    *out.last_mut().unwrap() = to;
    out
}

/// Sorted, de-duplicated merge.
pub fn merge_sorted(mut xs: Vec<f64>) -> Vec<f64> {
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    xs
}

/// `a ∈ {0.1, 0.2, …, 10} ∪ {13/30, 17/30}`.
pub fn default_a_grid() -> Vec<f64> {
    let mut a = GridSpec::from_str("0.1:10:0.1").unwrap().points();
    a.extend([13.0 / 30.0, 17.0 / 30.0]);
    merge_sorted(a)
}

/// `n ∈ {1..=100}` plus logarithmic points (10 per decade) up to `n_max`.
pub fn default_n_grid(n_max: u64) -> Vec<u64> {
    let mut n: Vec<u64> = (1..=n_max.min(100)).collect();
    if n_max > 100 {
        n.extend(
            log_points(100.0, n_max as f64, 10)
                .into_iter()
                .map(|v| v.round() as u64),
        );
    }
    n.sort_unstable();
    n.dedup();
    n
}

/// `[lo, 100]` at step 0.1 plus logarithmic points (10 per decade) to `10^6`.
pub fn default_x_grid(lo: f64) -> Vec<f64> {
    let linear = GridSpec::new(lo, 100.0, 0.1).unwrap().points();
    let mut xs = linear;
    xs.extend(log_points(100.0, 1e6, 10));
    merge_sorted(xs)
}
