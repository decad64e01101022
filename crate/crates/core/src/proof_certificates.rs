//! Numerical certificates for the auxiliary facts behind the sharp bounds:
//! four asymptotic inequalities for ψ and ψ′, the sign of two polynomials,
//! and monotonicity, convexity and limits of the lemma functions.
//!
//! Every check is recorded in a [`ScanReport`]; differences that fall inside
//! the accumulated error bounds are counted as inconclusive rather than
//! failed.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::grid;
use crate::report::{Claim, Location, ScanReport};
use crate::sequences;
use crate::sharp_bounds::{LemmaFunction, LIMIT_TOLERANCE};
use crate::special_fn::{self, AccuracyPolicy, EvalResult};

/// Coefficients of `F₁` in powers of `x − 1`, constant term first.
pub const F1_COEFFS: [i64; 5] = [-207, -3840, -6580, -3640, -700];

/// Coefficients of `F₂` in powers of `x − 2`, constant term first.
pub const F2_COEFFS: [i64; 9] = [
    3_217_636, 17_887_632, 39_443_124, 47_009_928, 33_797_841, 15_180_480, 4_189_500, 652_680,
    44_100,
];

/// Horner evaluation in the shifted basis. All coefficients of each
/// polynomial share one sign, so for `t ≥ 0` no cancellation occurs and the
/// sign of the result is exact.
fn horner(coeffs: &[i64], t: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, &c| acc * t + c as f64)
}

pub fn poly_f1(x: f64) -> f64 {
    horner(&F1_COEFFS, x - 1.0)
}

pub fn poly_f2(x: f64) -> f64 {
    horner(&F2_COEFFS, x - 2.0)
}

/// Largest x where the lemma limits are checked.
pub const LIMIT_X: f64 = 1e6;

fn grid_label(xs: &[f64]) -> String {
    match (xs.first(), xs.last()) {
        (Some(lo), Some(hi)) => format!("x: {} points in [{lo}, {hi}]", xs.len()),
        _ => "x: empty".to_string(),
    }
}

// ---------------------------------------------------------------------------
// Asymptotic inequalities for ψ and ψ′

/// One of the four truncated-series inequalities.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChenInequality {
    /// `ψ′(x) − 1/x < 1/(2x²) + 1/(6x³) − 1/(30x⁵) + 1/(42x⁷)`, x ≥ 1
    TrigammaUpper,
    /// `ln x − ψ(x) > 1/(2x) + 1/(12x²) − 1/(120x⁴)`, x ≥ 1
    LnMinusPsiLower,
    /// `1/x + 1/x² − ψ′(x) < 1/(2x²) − 1/(6x³) + 1/(30x⁵)`, x > 0
    TrigammaLower,
    /// `ψ(x) + 1/x − ln x > 1/(2x) − 1/(12x²) + 1/(120x⁴) − 1/(252x⁶)`, x > 0
    PsiShiftLower,
}

impl ChenInequality {
    pub const ALL: [ChenInequality; 4] = [
        ChenInequality::TrigammaUpper,
        ChenInequality::LnMinusPsiLower,
        ChenInequality::TrigammaLower,
        ChenInequality::PsiShiftLower,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ChenInequality::TrigammaUpper => "trigamma_upper",
            ChenInequality::LnMinusPsiLower => "ln_minus_psi_lower",
            ChenInequality::TrigammaLower => "trigamma_lower",
            ChenInequality::PsiShiftLower => "psi_shift_lower",
        }
    }

    pub fn applies(self, x: f64) -> bool {
        match self {
            ChenInequality::TrigammaUpper | ChenInequality::LnMinusPsiLower => x >= 1.0,
            _ => x > 0.0,
        }
    }

    /// `lhs − rhs` in the "≤ 0 holds" orientation. Each is ± a series
    /// remainder, which keeps its relative accuracy for large x.
    pub fn violation(self, x: f64, policy: &AccuracyPolicy) -> Result<EvalResult> {
        Ok(match self {
            ChenInequality::TrigammaUpper => special_fn::trigamma_tail(x, 3, policy)?,
            ChenInequality::LnMinusPsiLower => -special_fn::ln_minus_psi_tail(x, 2, policy)?,
            ChenInequality::TrigammaLower => -special_fn::trigamma_tail(x, 2, policy)?,
            ChenInequality::PsiShiftLower => special_fn::ln_minus_psi_tail(x, 3, policy)?,
        })
    }
}

/// Checks all four inequalities at every grid point inside each one's
/// domain, plus that the margins shrink monotonically for `x ≥ 2`.
pub fn chen_certificates(xs: &[f64], policy: &AccuracyPolicy) -> Result<ScanReport> {
    let mut report = ScanReport::new("chen", grid_label(xs));
    for ineq in ChenInequality::ALL {
        let mut previous: Option<EvalResult> = None;
        for &x in xs.iter().filter(|&&x| ineq.applies(x)) {
            let v = ineq.violation(x, policy)?;
            let loc = Location::X { x };
            report.record(loc, ineq.name(), v.value, 0.0, v, Claim::Lt);
            if x >= 2.0 {
                let margin = -v;
                if let Some(prev) = previous {
                    report.record(
                        loc,
                        &format!("{}_margin_decreasing", ineq.name()),
                        margin.value,
                        prev.value,
                        margin - prev,
                        Claim::Lt,
                    );
                }
                previous = Some(margin);
            }
        }
    }
    report.add_points(xs.len());
    Ok(report)
}

/// `[0.1, 100]` at step 0.1 with 1 added, plus logarithmic points to `10⁶`.
pub fn default_chen_grid() -> Vec<f64> {
    let mut xs = grid::default_x_grid(0.1);
    xs.push(1.0);
    grid::merge_sorted(xs)
}

// ---------------------------------------------------------------------------
// Monotonicity, convexity, sign

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonotonicityTarget {
    F1Sign,
    F2Sign,
    F1Decreasing,
    F2TildeDecreasing,
    F3Decreasing,
    F3Convex,
}

impl MonotonicityTarget {
    pub const ALL: [MonotonicityTarget; 6] = [
        MonotonicityTarget::F1Sign,
        MonotonicityTarget::F2Sign,
        MonotonicityTarget::F1Decreasing,
        MonotonicityTarget::F2TildeDecreasing,
        MonotonicityTarget::F3Decreasing,
        MonotonicityTarget::F3Convex,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MonotonicityTarget::F1Sign => "F1_SIGN",
            MonotonicityTarget::F2Sign => "F2_SIGN",
            MonotonicityTarget::F1Decreasing => "f1_DECREASING",
            MonotonicityTarget::F2TildeDecreasing => "f2tilde_DECREASING",
            MonotonicityTarget::F3Decreasing => "f3_DECREASING",
            MonotonicityTarget::F3Convex => "f3_CONVEX",
        }
    }

    fn in_domain(self, x: f64) -> bool {
        match self {
            MonotonicityTarget::F1Sign => x >= 1.0,
            MonotonicityTarget::F2Sign | MonotonicityTarget::F2TildeDecreasing => x >= 2.0,
            MonotonicityTarget::F1Decreasing => x > 1.0,
            MonotonicityTarget::F3Decreasing | MonotonicityTarget::F3Convex => x > 0.0,
        }
    }

    /// Grid used when none is given.
    pub fn default_grid(self) -> Vec<f64> {
        match self {
            MonotonicityTarget::F1Sign => grid::default_x_grid(1.0),
            MonotonicityTarget::F2Sign | MonotonicityTarget::F2TildeDecreasing => {
                grid::default_x_grid(2.0)
            }
            MonotonicityTarget::F1Decreasing => {
                let mut xs = grid::default_x_grid(1.1);
                xs.extend((2..=6).map(|k| 1.0 + 10f64.powi(-k)));
                grid::merge_sorted(xs)
            }
            MonotonicityTarget::F3Decreasing | MonotonicityTarget::F3Convex => {
                let mut xs = grid::default_x_grid(0.1);
                xs.extend(grid::log_points(1e-3, 0.1, 10));
                grid::merge_sorted(xs)
            }
        }
    }
}

impl fmt::Display for MonotonicityTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MonotonicityTarget {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        MonotonicityTarget::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Precondition(format!("unknown scan target {s:?}")))
    }
}

fn check_grid(target: MonotonicityTarget, xs: &[f64]) -> Result<()> {
    if let Some(&x) = xs.iter().find(|&&x| !target.in_domain(x)) {
        return Err(Error::Precondition(format!(
            "{target} grid point x = {x} is outside the domain"
        )));
    }
    if xs.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::Precondition(format!(
            "{target} grid must be strictly increasing"
        )));
    }
    Ok(())
}

fn sign_scan(
    report: &mut ScanReport,
    name: &str,
    coeffs: &[i64],
    eval: fn(f64) -> f64,
    negative: bool,
    xs: &[f64],
) {
    // Structural check: every coefficient has the claimed sign.
    for (k, &c) in coeffs.iter().enumerate() {
        let signed = if negative { c as f64 } else { -(c as f64) };
        report.record_plain(
            Location::Term { k },
            &format!("{name}_coefficient"),
            signed,
            0.0,
            0.0,
            Claim::Lt,
        );
    }
    for &x in xs {
        let v = eval(x);
        let signed = if negative { v } else { -v };
        report.record_plain(Location::X { x }, name, signed, 0.0, 0.0, Claim::Lt);
    }
}

/// Gaps `f(x) − limit` for a lemma function over the grid.
fn gaps(lemma: LemmaFunction, xs: &[f64], policy: &AccuracyPolicy) -> Result<Vec<EvalResult>> {
    xs.iter().map(|&x| lemma.gap(x, policy)).collect()
}

fn decreasing_scan(
    report: &mut ScanReport,
    lemma: LemmaFunction,
    xs: &[f64],
    policy: &AccuracyPolicy,
) -> Result<()> {
    let g = gaps(lemma, xs, policy)?;
    let name = format!("{}_decreasing", lemma.name());
    for i in 1..xs.len() {
        report.record(
            Location::X { x: xs[i] },
            &name,
            g[i].value,
            g[i - 1].value,
            g[i] - g[i - 1],
            Claim::Lt,
        );
    }
    // Range: strictly above the limit everywhere.
    let range = format!("{}_above_limit", lemma.name());
    for (i, &x) in xs.iter().enumerate() {
        report.record(
            Location::X { x },
            &range,
            -g[i].value,
            0.0,
            -g[i],
            Claim::Lt,
        );
    }
    Ok(())
}

/// Runs one monotonicity, convexity or sign check over `xs`, which must be
/// strictly increasing and inside the target's domain.
pub fn monotonicity_scan(
    target: MonotonicityTarget,
    xs: &[f64],
    policy: &AccuracyPolicy,
) -> Result<ScanReport> {
    check_grid(target, xs)?;
    let mut report = ScanReport::new(target.name(), grid_label(xs));
    match target {
        MonotonicityTarget::F1Sign => {
            sign_scan(&mut report, "F1_negative", &F1_COEFFS, poly_f1, true, xs)
        }
        MonotonicityTarget::F2Sign => {
            sign_scan(&mut report, "F2_positive", &F2_COEFFS, poly_f2, false, xs)
        }
        MonotonicityTarget::F1Decreasing => {
            decreasing_scan(&mut report, LemmaFunction::F1, xs, policy)?;
            // Upper edge of the range: f1 < 1/γ − 2.
            let gamma = special_fn::ln_minus_psi(1.0, policy)?;
            let top = gamma.recip() - 2.0;
            for &x in xs {
                let v = LemmaFunction::F1.eval(x, policy)?;
                report.record(
                    Location::X { x },
                    "f1_below_endpoint",
                    v.value,
                    top.value,
                    v - top,
                    Claim::Lt,
                );
            }
        }
        MonotonicityTarget::F2TildeDecreasing => {
            decreasing_scan(&mut report, LemmaFunction::F2Tilde, xs, policy)?
        }
        MonotonicityTarget::F3Decreasing => {
            decreasing_scan(&mut report, LemmaFunction::F3, xs, policy)?;
            for &x in xs {
                let v = LemmaFunction::F3.eval(x, policy)?;
                report.record(Location::X { x }, "f3_negative", v.value, 0.0, v, Claim::Lt);
            }
        }
        MonotonicityTarget::F3Convex => {
            let g = gaps(LemmaFunction::F3, xs, policy)?;
            for i in 1..xs.len().saturating_sub(1) {
                let left = (g[i] - g[i - 1]) / (xs[i] - xs[i - 1]);
                let right = (g[i + 1] - g[i]) / (xs[i + 1] - xs[i]);
                // Convex iff slopes increase: left − right < 0.
                report.record(
                    Location::X { x: xs[i] },
                    "f3_convex",
                    left.value,
                    right.value,
                    left - right,
                    Claim::Lt,
                );
            }
        }
    }
    report.add_points(xs.len());
    Ok(report)
}

/// Every monotonicity target on its default grid, plus the limits at
/// `x = 10⁶` and the left endpoint of `f1`.
pub fn lemma_suite(policy: &AccuracyPolicy) -> Result<ScanReport> {
    let mut report = ScanReport::new("lemmas", "default grids: [min, 100] step 0.1 + log to 1e6");
    for target in MonotonicityTarget::ALL {
        report.merge(monotonicity_scan(target, &target.default_grid(), policy)?);
    }
    for lemma in [LemmaFunction::F1, LemmaFunction::F2Tilde, LemmaFunction::F3] {
        let gap = lemma.gap(LIMIT_X, policy)?;
        let loc = Location::X { x: LIMIT_X };
        let name = format!("{}_limit", lemma.name());
        report.record(loc, &name, -gap.value, 0.0, -gap, Claim::Lt);
        report.record(
            loc,
            &name,
            gap.value,
            LIMIT_TOLERANCE,
            EvalResult::new(gap.value - LIMIT_TOLERANCE, gap.abs_error_bound),
            Claim::Lt,
        );
        report.observe(format!("{}_gap_at_1e6", lemma.name()), gap.value);
        report.add_points(1);
    }
    let x = 1.0 + 1e-6;
    let gamma = special_fn::ln_minus_psi(1.0, policy)?;
    let endpoint = gamma.recip() - 2.0;
    let dist = (LemmaFunction::F1.eval(x, policy)? - endpoint).abs();
    report.record(
        Location::X { x },
        "f1_left_endpoint",
        dist.value,
        LIMIT_TOLERANCE,
        EvalResult::new(dist.value - LIMIT_TOLERANCE, dist.abs_error_bound),
        Claim::Lt,
    );
    report.add_points(1);
    Ok(report)
}

// ---------------------------------------------------------------------------
// Sequences

/// Agreement between closed and directly summed sequences (`n ≤ n_direct`)
/// to `1e-12`, the residual identity `res_x + res_y = ln((n+a)/(n+a−1))` to
/// `1e-13`, the sandwich `x_n < γ(a) ≤ y_n`, and monotone convergence.
pub fn sequence_suite(
    a_values: &[f64],
    n_direct: u64,
    n_grid: &[u64],
    policy: &AccuracyPolicy,
) -> Result<ScanReport> {
    const DIRECT_TOL: f64 = 1e-12;
    const IDENTITY_TOL: f64 = 1e-13;
    let mut report = ScanReport::new(
        "sequences",
        format!(
            "a: {} values; direct n <= {n_direct}; identity n: {} values",
            a_values.len(),
            n_grid.len()
        ),
    );
    for &a in a_values {
        let gamma = sequences::gamma_a(a, policy)?;
        let gamma = EvalResult::new(gamma.value, gamma.abs_error_bound);
        let mut direct = sequences::NeumaierSum::default();
        let mut prev: Option<(f64, f64)> = None;
        for n in 1..=n_direct {
            direct.add(1.0 / (a + (n - 1) as f64));
            let h = direct.total();
            let xd = h - (n as f64 / a).ln_1p();
            let yd = h - ((n - 1) as f64 / a).ln_1p();
            let xc = sequences::x_n_closed(a, n, policy)?;
            let yc = sequences::y_n_closed(a, n, policy)?;
            let loc = Location::Point { a, n };
            let dx = (xc - xd).abs();
            let dy = (yc - yd).abs();
            report.record_plain(loc, "x_n_closed_vs_direct", dx, DIRECT_TOL, 0.0, Claim::Le);
            report.record_plain(loc, "y_n_closed_vs_direct", dy, DIRECT_TOL, 0.0, Claim::Le);
            if let Some((xp, yp)) = prev {
                report.record_plain(loc, "x_n_increasing", xp, xc, 0.0, Claim::Lt);
                report.record_plain(loc, "y_n_decreasing", yc, yp, 0.0, Claim::Lt);
            }
            prev = Some((xc, yc));
        }
        for &n in n_grid {
            let loc = Location::Point { a, n };
            let rx = sequences::residual_x(a, n, policy)?;
            let ry = sequences::residual_y(a, n, policy)?;
            let k = (n - 1) as f64 + a;
            let exact = (1.0 / k).ln_1p();
            let diff = (rx + ry - exact).abs();
            report.record_plain(loc, "residual_identity", diff, IDENTITY_TOL, 0.0, Claim::Le);
            let x = sequences::x_n_closed(a, n, policy)?;
            let y = sequences::y_n_closed(a, n, policy)?;
            report.record(
                loc,
                "x_n_below_gamma",
                x,
                gamma.value,
                EvalResult::new(x - gamma.value, gamma.abs_error_bound),
                Claim::Lt,
            );
            report.record(
                loc,
                "gamma_at_most_y_n",
                gamma.value,
                y,
                EvalResult::new(gamma.value - y, gamma.abs_error_bound),
                Claim::Le,
            );
        }
        report.add_points(n_direct as usize + n_grid.len());
    }
    Ok(report)
}

/// The oracle-equivalence configuration: `a ∈ {0.1, 1, 2.5, 10}`, direct
/// sums to `n = 1000`, identity on the default `(a, n)` grid.
pub fn default_sequence_suite(policy: &AccuracyPolicy) -> Result<ScanReport> {
    let mut report = ScanReport::new(
        "sequences",
        "direct: a in {0.1, 1, 2.5, 10}, n <= 1000; identity: default (a, n) grid to n = 1e5",
    );
    report.merge(sequence_suite(&[0.1, 1.0, 2.5, 10.0], 1000, &[], policy)?);
    report.merge(sequence_suite(
        &grid::default_a_grid(),
        0,
        &grid::default_n_grid(100_000),
        policy,
    )?);
    Ok(report)
}
