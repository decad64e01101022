//! Floating-point values carrying a running absolute error bound.
//!
//! Every arithmetic operation adds one ulp of its result (bounded by
//! `f64::EPSILON * |result|`) and propagates the operand bounds to first
//! order. Constants built with [`EvalResult::exact`] carry no error.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

const EPS: f64 = f64::EPSILON;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: f64,
    pub abs_error_bound: f64,
}

impl EvalResult {
    pub fn new(value: f64, abs_error_bound: f64) -> Self {
        debug_assert!(abs_error_bound >= 0.0);
        Self {
            value,
            abs_error_bound,
        }
    }

    pub fn exact(value: f64) -> Self {
        Self::new(value, 0.0)
    }

    pub fn lo(&self) -> f64 {
        self.value - self.abs_error_bound
    }

    pub fn hi(&self) -> f64 {
        self.value + self.abs_error_bound
    }

    /// Enlarges the bound by `extra`.
    pub fn widen(self, extra: f64) -> Self {
        Self::new(self.value, self.abs_error_bound + extra.abs())
    }

    /// True when `other` lies within the combined error bounds of `self`.
    pub fn agrees_with(&self, other: &EvalResult) -> bool {
        (self.value - other.value).abs() <= self.abs_error_bound + other.abs_error_bound
    }

    pub fn abs(self) -> Self {
        Self::new(self.value.abs(), self.abs_error_bound)
    }

    pub fn recip(self) -> Self {
        Self::exact(1.0) / self
    }

    pub fn ln(self) -> Self {
        let v = self.value.ln();
        let propagated = self.abs_error_bound / self.value.abs();
        Self::new(v, propagated + rounding(v))
    }

    pub fn ln_1p(self) -> Self {
        let v = self.value.ln_1p();
        let propagated = self.abs_error_bound / (1.0 + self.value).abs();
        Self::new(v, propagated + rounding(v))
    }

    pub fn powi(self, k: i32) -> Self {
        let v = self.value.powi(k);
        // powi is not correctly rounded; charge one ulp per multiplication.
        let steps = (k.unsigned_abs().max(1)) as f64;
        let propagated = (k as f64).abs() * (v / self.value).abs() * self.abs_error_bound;
        Self::new(v, propagated + steps * rounding(v))
    }
}

fn rounding(v: f64) -> f64 {
    EPS * v.abs()
}

impl fmt::Display for EvalResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ± {:e}", self.value, self.abs_error_bound)
    }
}

impl From<f64> for EvalResult {
    fn from(value: f64) -> Self {
        Self::exact(value)
    }
}

impl Neg for EvalResult {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.value, self.abs_error_bound)
    }
}

impl Add for EvalResult {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let v = self.value + rhs.value;
        Self::new(v, self.abs_error_bound + rhs.abs_error_bound + rounding(v))
    }
}

impl Sub for EvalResult {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for EvalResult {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let v = self.value * rhs.value;
        let propagated = self.value.abs() * rhs.abs_error_bound
            + rhs.value.abs() * self.abs_error_bound
            + self.abs_error_bound * rhs.abs_error_bound;
        Self::new(v, propagated + rounding(v))
    }
}

impl Div for EvalResult {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let v = self.value / rhs.value;
        let denom = rhs.value.abs() - rhs.abs_error_bound;
        let propagated = if denom > 0.0 {
            (self.abs_error_bound + v.abs() * rhs.abs_error_bound) / denom
        } else {
            f64::INFINITY
        };
        Self::new(v, propagated + rounding(v))
    }
}

macro_rules! scalar_ops {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<f64> for EvalResult {
            type Output = EvalResult;
            fn $m(self, rhs: f64) -> EvalResult {
                $tr::$m(self, EvalResult::exact(rhs))
            }
        }
        impl $tr<EvalResult> for f64 {
            type Output = EvalResult;
            fn $m(self, rhs: EvalResult) -> EvalResult {
                $tr::$m(EvalResult::exact(self), rhs)
            }
        }
    )*};
}

scalar_ops!(Add add, Sub sub, Mul mul, Div div);

impl std::iter::Sum for EvalResult {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(EvalResult::exact(0.0), |acc, t| acc + t)
    }
}
