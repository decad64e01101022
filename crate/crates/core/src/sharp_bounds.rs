//! Best-possible constants for the two-sided bounds on
//! `γ(a) − x_n` and `y_n − γ(a)`, the prior bounds they sharpen, and
//! certified enclosures of γ(a) built from them.
//!
//! With `m = n + a` and `k = n + a − 1`:
//!
//! ```text
//! THM13_X  1/(2m − α₁)        ≤ γ(a) − x_n < 1/(2m − 1/3)
//! THM13_Y  1/(2m − α₂)        ≤ y_n − γ(a) < 1/(2m − 5/3)
//! THM14_X  1/(2m) + α₃/m²     ≤ γ(a) − x_n < 1/(2m) + (1/12)/m²
//! THM14_Y  1/(2k) − (1/12)/k² < y_n − γ(a) ≤ 1/(2k) + β₄/k²
//! ```
//!
//! Each lower (or upper) constant is attained at a finite index; the opposite
//! constant is the limit of a monotone sequence. See [`LemmaFunction`].

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{require_index, require_positive, Error, Result};
use crate::grid;
use crate::report::{Claim, Location, ScanReport};
use crate::sequences;
use crate::special_fn::{self, index_sum, AccuracyPolicy, EvalResult};

/// Tolerance on the distance between a defining sequence and its limit at
/// the end of a sharpness scan.
pub const LIMIT_TOLERANCE: f64 = 1e-4;

/// Smallest `n_max` accepted by [`sharpness_scan`].
pub const SHARPNESS_MIN_N: u64 = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Residual {
    /// γ(a) − x_n
    X,
    /// y_n − γ(a)
    Y,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Lo,
    Hi,
}

impl Side {
    pub fn name(self) -> &'static str {
        match self {
            Side::Lo => "lo",
            Side::Hi => "hi",
        }
    }
}

impl FromStr for Side {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "lo" => Ok(Side::Lo),
            "hi" => Ok(Side::Hi),
            _ => Err(Error::Precondition(format!(
                "side must be lo or hi, got {s:?}"
            ))),
        }
    }
}

/// A bound family. The four `Thm*` families carry the best-possible
/// constants; the rest are earlier bounds kept for comparison. The classical
/// families (`Alzer`, `Toth`, `Chen`, `Qiu`) bound `γ_n − γ` and exist only
/// for `a = 1`, where `γ_n = y_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Thm13X,
    Thm13Y,
    Thm14X,
    Thm14Y,
    SintX,
    SintY,
    Bm11X,
    Bm11Y,
    Bm12X,
    Bm12Y,
    Alzer,
    Toth,
    Chen,
    Qiu,
}

impl Family {
    pub const ALL: [Family; 14] = [
        Family::Thm13X,
        Family::Thm13Y,
        Family::Thm14X,
        Family::Thm14Y,
        Family::SintX,
        Family::SintY,
        Family::Bm11X,
        Family::Bm11Y,
        Family::Bm12X,
        Family::Bm12Y,
        Family::Alzer,
        Family::Toth,
        Family::Chen,
        Family::Qiu,
    ];

    pub const SHARP: [Family; 4] = [
        Family::Thm13X,
        Family::Thm13Y,
        Family::Thm14X,
        Family::Thm14Y,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Thm13X => "THM13_X",
            Family::Thm13Y => "THM13_Y",
            Family::Thm14X => "THM14_X",
            Family::Thm14Y => "THM14_Y",
            Family::SintX => "SINT_X",
            Family::SintY => "SINT_Y",
            Family::Bm11X => "BM11_X",
            Family::Bm11Y => "BM11_Y",
            Family::Bm12X => "BM12_X",
            Family::Bm12Y => "BM12_Y",
            Family::Alzer => "ALZER",
            Family::Toth => "TOTH",
            Family::Chen => "CHEN",
            Family::Qiu => "QIU",
        }
    }

    pub fn residual(self) -> Residual {
        match self {
            Family::Thm13X | Family::Thm14X | Family::SintX | Family::Bm11X | Family::Bm12X => {
                Residual::X
            }
            _ => Residual::Y,
        }
    }

    pub fn is_classical(self) -> bool {
        matches!(
            self,
            Family::Alzer | Family::Toth | Family::Chen | Family::Qiu
        )
    }

    /// Whether the inequality on `side` is strict.
    pub fn strict(self, side: Side) -> bool {
        match (self, side) {
            (Family::Thm13X | Family::Thm13Y | Family::Thm14X, Side::Lo) => false,
            (Family::Thm13X | Family::Thm13Y | Family::Thm14X, Side::Hi) => true,
            (Family::Thm14Y, Side::Lo) => true,
            (Family::Thm14Y, Side::Hi) => false,
            (Family::SintX | Family::SintY | Family::Alzer, _) => false,
            (Family::Bm11X | Family::Bm11Y, _) => true,
            (Family::Bm12X | Family::Bm12Y, _) => false,
            (Family::Toth, Side::Lo) => true,
            (Family::Toth, Side::Hi) => false,
            (Family::Chen, Side::Lo) => false,
            (Family::Chen, Side::Hi) => true,
            (Family::Qiu, Side::Lo) => true,
            (Family::Qiu, Side::Hi) => false,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn normalize(s: &str) -> String {
    s.chars()
        .filter(|c| *c != '_' && *c != '-')
        .flat_map(char::to_lowercase)
        .collect()
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let key = normalize(s);
        Family::ALL
            .into_iter()
            .find(|f| normalize(f.name()) == key)
            .ok_or_else(|| Error::Precondition(format!("unknown bound family {s:?}")))
    }
}

/// Enclosure construction methods.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Thm13X,
    Thm13Y,
    Thm14X,
    Thm14Y,
    Intersect,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Thm13X,
        Method::Thm13Y,
        Method::Thm14X,
        Method::Thm14Y,
        Method::Intersect,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Intersect => "INTERSECT",
            other => other.family().map(Family::name).unwrap_or_default(),
        }
    }

    pub fn family(self) -> Option<Family> {
        match self {
            Method::Thm13X => Some(Family::Thm13X),
            Method::Thm13Y => Some(Family::Thm13Y),
            Method::Thm14X => Some(Family::Thm14X),
            Method::Thm14Y => Some(Family::Thm14Y),
            Method::Intersect => None,
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let key = normalize(s);
        Method::ALL
            .into_iter()
            .find(|m| normalize(m.name()) == key)
            .ok_or_else(|| Error::Precondition(format!("unknown enclosure method {s:?}")))
    }
}

// ---------------------------------------------------------------------------
// Lemma functions

/// The monotone functions whose extreme values are the sharp constants.
///
/// ```text
/// f1(x)  = 1/(ln x − ψ(x)) − 2x              x > 1,  decreasing to −1/3
/// f̃2(x) = 1/(2(ψ(x+1) − ln x)) − x           x > 0,  decreasing to 1/6 on [2, ∞)
/// f3(x)  = x²(ψ(x) − ln x) + x/2               x > 0,  decreasing to −1/12, convex
/// ```
///
/// All three are evaluated through `R_j(x)`, the remainder of the expansion
/// of `ln x − ψ(x)` after `1/(2x)` and `j` corrections, which removes the
/// cancellation between `1/(ln x − ψ(x))` and `2x`:
/// `f1 = −2x·R₀/L`, `f̃2 = x·R₀/P`, `f3 = −x²·R₀`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LemmaFunction {
    F1,
    F2Tilde,
    F3,
}

impl LemmaFunction {
    pub fn name(self) -> &'static str {
        match self {
            LemmaFunction::F1 => "f1",
            LemmaFunction::F2Tilde => "f2tilde",
            LemmaFunction::F3 => "f3",
        }
    }

    pub fn limit(self) -> f64 {
        match self {
            LemmaFunction::F1 => -1.0 / 3.0,
            LemmaFunction::F2Tilde => 1.0 / 6.0,
            LemmaFunction::F3 => -1.0 / 12.0,
        }
    }

    fn check_domain(self, x: f64) -> Result<()> {
        match self {
            LemmaFunction::F1 if !(x.is_finite() && x > 1.0) => Err(Error::Domain {
                what: "f1",
                requirement: "x > 1",
                value: x,
            }),
            _ => require_positive(self.name(), x),
        }
    }

    pub fn eval(self, x: f64, policy: &AccuracyPolicy) -> Result<EvalResult> {
        self.check_domain(x)?;
        let xe = EvalResult::exact(x);
        let r0 = special_fn::ln_minus_psi_tail(x, 0, policy)?;
        Ok(match self {
            LemmaFunction::F1 => {
                let l = special_fn::ln_minus_psi(x, policy)?;
                -2.0 * xe * r0 / l
            }
            LemmaFunction::F2Tilde => {
                let p = special_fn::psi_shift1_minus_ln(x, policy)?;
                xe * r0 / p
            }
            LemmaFunction::F3 => -(xe * xe) * r0,
        })
    }

    /// `f(x) − limit`, computed without cancellation against the limit.
    pub fn gap(self, x: f64, policy: &AccuracyPolicy) -> Result<EvalResult> {
        self.check_domain(x)?;
        let xe = EvalResult::exact(x);
        let r1 = special_fn::ln_minus_psi_tail(x, 1, policy)?;
        Ok(match self {
            LemmaFunction::F1 => {
                let r0 = special_fn::ln_minus_psi_tail(x, 0, policy)?;
                let l = special_fn::ln_minus_psi(x, policy)?;
                (r0 - 6.0 * xe * r1) / (3.0 * l)
            }
            LemmaFunction::F2Tilde => {
                let r0 = special_fn::ln_minus_psi_tail(x, 0, policy)?;
                let p = special_fn::psi_shift1_minus_ln(x, policy)?;
                (r0 + 6.0 * xe * r1) / (6.0 * p)
            }
            LemmaFunction::F3 => -(xe * xe) * r1,
        })
    }

    /// Evaluation at a computed argument `x ≥ 1`; on that range every
    /// function here has `|f′| ≤ 1`.
    fn eval_at(self, x: EvalResult, policy: &AccuracyPolicy) -> Result<EvalResult> {
        debug_assert!(x.abs_error_bound == 0.0 || x.value >= 1.0);
        Ok(self.eval(x.value, policy)?.widen(x.abs_error_bound))
    }
}

pub fn f1(x: f64, policy: &AccuracyPolicy) -> Result<f64> {
    LemmaFunction::F1.eval(x, policy).map(|v| v.value)
}

pub fn f2tilde(x: f64, policy: &AccuracyPolicy) -> Result<f64> {
    LemmaFunction::F2Tilde.eval(x, policy).map(|v| v.value)
}

pub fn f3(x: f64, policy: &AccuracyPolicy) -> Result<f64> {
    LemmaFunction::F3.eval(x, policy).map(|v| v.value)
}

// ---------------------------------------------------------------------------
// Best constants

/// The eight sharp constants for a given `a`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct BestConstants {
    pub a: f64,
    pub alpha1: f64,
    pub beta1: f64,
    pub alpha2: f64,
    pub beta2: f64,
    pub alpha3: f64,
    pub beta3: f64,
    pub alpha4: f64,
    pub beta4: f64,
    /// `max{f̃2(a), f̃2(a+1), f̃2(a+2)}`
    pub d: f64,
    /// Index `n ∈ {1,2,3}` where `d` is attained.
    pub argmax_n: u64,
    /// Set when another candidate for `d` lies within combined error bounds
    /// of the maximum; `argmax_n` is then the smallest such index.
    pub d_tie: bool,
    /// Largest error bound over the computed constants.
    pub abs_error_bound: f64,
}

#[derive(Debug, Clone, Copy)]
struct TrackedConstants {
    alpha1: EvalResult,
    alpha2: EvalResult,
    alpha3: EvalResult,
    beta4: EvalResult,
    d: EvalResult,
    argmax_n: u64,
    d_tie: bool,
}

fn tracked_constants(a: f64, policy: &AccuracyPolicy) -> Result<TrackedConstants> {
    require_positive("a", a)?;
    let a1 = index_sum(1.0, a);
    let alpha1 = -LemmaFunction::F1.eval_at(a1, policy)?;
    let candidates = [
        LemmaFunction::F2Tilde.eval(a, policy)?,
        LemmaFunction::F2Tilde.eval_at(a1, policy)?,
        LemmaFunction::F2Tilde.eval_at(index_sum(2.0, a), policy)?,
    ];
    let top = candidates
        .iter()
        .enumerate()
        .max_by(|x, y| x.1.value.total_cmp(&y.1.value))
        .map(|(i, _)| i)
        .unwrap();
    let tied: Vec<usize> = (0..3)
        .filter(|&i| i == top || candidates[i].agrees_with(&candidates[top]))
        .collect();
    let chosen = tied[0];
    let d = candidates[chosen];
    Ok(TrackedConstants {
        alpha1,
        alpha2: 2.0 * (1.0 - d),
        alpha3: -LemmaFunction::F3.eval_at(a1, policy)?,
        beta4: LemmaFunction::F3.eval(a, policy)?,
        d,
        argmax_n: chosen as u64 + 1,
        d_tie: tied.len() > 1,
    })
}

pub fn best_constants(a: f64, policy: &AccuracyPolicy) -> Result<BestConstants> {
    let t = tracked_constants(a, policy)?;
    let err = [t.alpha1, t.alpha2, t.alpha3, t.beta4, t.d]
        .iter()
        .map(|c| c.abs_error_bound)
        .fold(0.0, f64::max);
    Ok(BestConstants {
        a,
        alpha1: t.alpha1.value,
        beta1: 1.0 / 3.0,
        alpha2: t.alpha2.value,
        beta2: 5.0 / 3.0,
        alpha3: t.alpha3.value,
        beta3: 1.0 / 12.0,
        alpha4: -1.0 / 12.0,
        beta4: t.beta4.value,
        d: t.d.value,
        argmax_n: t.argmax_n,
        d_tie: t.d_tie,
        abs_error_bound: err,
    })
}

// ---------------------------------------------------------------------------
// Bound evaluation

const BM12_X_MIN_A: f64 = 13.0 / 30.0;
const BM12_Y_MIN_A: f64 = 17.0 / 30.0;

/// Bound evaluator for one `a`, caching the constants.
pub(crate) struct BoundSet {
    a: f64,
    constants: TrackedConstants,
    euler_gamma: Option<EvalResult>,
}

impl BoundSet {
    pub(crate) fn new(a: f64, policy: &AccuracyPolicy) -> Result<Self> {
        require_positive("a", a)?;
        let euler_gamma = if a == 1.0 {
            Some(special_fn::ln_minus_psi(1.0, policy)?)
        } else {
            None
        };
        Ok(Self {
            a,
            constants: tracked_constants(a, policy)?,
            euler_gamma,
        })
    }

    fn constants(&self) -> &TrackedConstants {
        &self.constants
    }

    fn precondition(&self, family: Family, n: u64, side: Side) -> Result<()> {
        let a = self.a;
        if family.is_classical() && a != 1.0 {
            return Err(Error::Precondition(format!(
                "{family} is a classical bound and requires a = 1, got a = {a}"
            )));
        }
        match family {
            Family::Bm11X | Family::Bm11Y if n < 2 => Err(Error::Precondition(format!(
                "{family} requires n >= 2, got n = {n}"
            ))),
            Family::Bm12X if a < BM12_X_MIN_A => Err(Error::Precondition(format!(
                "{family} requires a >= 13/30, got a = {a}"
            ))),
            Family::Bm12Y if a < BM12_Y_MIN_A => Err(Error::Precondition(format!(
                "{family} requires a >= 17/30, got a = {a}"
            ))),
            Family::Bm12X | Family::Bm12Y if side == Side::Hi => Err(Error::Precondition(format!(
                "{family} provides only a lower bound"
            ))),
            _ => Ok(()),
        }
    }

    pub(crate) fn bound(&self, n: u64, family: Family, side: Side) -> Result<EvalResult> {
        require_index("n", n)?;
        self.precondition(family, n, side)?;
        let a = self.a;
        let m = index_sum(n as f64, a);
        let k = index_sum((n - 1) as f64, a);
        let nf = EvalResult::exact(n as f64);
        let recip_shift = |base: EvalResult, shift: EvalResult| (2.0 * base - shift).recip();
        let half_plus = |base: EvalResult, c: EvalResult| 0.5 / base + c / (base * base);
        let third = EvalResult::exact(1.0) / 3.0;
        let twelfth = EvalResult::exact(1.0) / 12.0;
        let lo = side == Side::Lo;
        let value = match family {
            Family::Thm13X => recip_shift(m, if lo { self.constants().alpha1 } else { third }),
            Family::Thm13Y => recip_shift(
                m,
                if lo {
                    self.constants().alpha2
                } else {
                    EvalResult::exact(5.0) / 3.0
                },
            ),
            Family::Thm14X => half_plus(m, if lo { self.constants().alpha3 } else { twelfth }),
            Family::Thm14Y => half_plus(k, if lo { -twelfth } else { self.constants().beta4 }),
            Family::SintX | Family::SintY => 0.5 / if lo { m } else { k },
            Family::Bm11X => recip_shift(m, if lo { EvalResult::exact(0.25) } else { third }),
            Family::Bm11Y => recip_shift(m, EvalResult::exact(if lo { 4.0 } else { 5.0 }) / 3.0),
            Family::Bm12X => recip_shift(m, third - (18.0 * nf).recip()),
            Family::Bm12Y => recip_shift(m, EvalResult::exact(5.0) / 3.0 - (18.0 * nf).recip()),
            Family::Alzer => {
                if lo {
                    (2.0 * nf + 1.0).recip()
                } else {
                    (2.0 * nf).recip()
                }
            }
            Family::Toth => {
                let shift = if lo {
                    EvalResult::exact(2.0) / 5.0
                } else {
                    third
                };
                (2.0 * nf + shift).recip()
            }
            Family::Chen => {
                let g = self.euler_gamma.expect("classical family at a = 1");
                let shift = if lo {
                    (2.0 * g - 1.0) / (1.0 - g)
                } else {
                    third
                };
                (2.0 * nf + shift).recip()
            }
            Family::Qiu => {
                let g = self.euler_gamma.expect("classical family at a = 1");
                half_plus(nf, if lo { -twelfth } else { -(g - 0.5) })
            }
        };
        Ok(value)
    }

    /// Whether the strict upper bound of `THM13_Y` is valid at `(a, n)`.
    /// It needs `f̃2(n+a−1) > 1/6`, which can fail only at `n = 1` for
    /// small `a`.
    pub(crate) fn thm13y_upper_holds(&self, n: u64, policy: &AccuracyPolicy) -> Result<bool> {
        if n > 1 {
            let x = index_sum((n - 1) as f64, self.a);
            if x.value >= 2.0 {
                return Ok(true);
            }
            return Ok(LemmaFunction::F2Tilde.gap(x.value, policy)?.lo() > x.abs_error_bound);
        }
        Ok(LemmaFunction::F2Tilde.gap(self.a, policy)?.lo() > 0.0)
    }
}

/// Value of one side of a bound on the residual its family targets.
pub fn bound_residual(
    a: f64,
    n: u64,
    family: Family,
    side: Side,
    policy: &AccuracyPolicy,
) -> Result<f64> {
    if family.is_classical() && a != 1.0 {
        return Err(Error::Precondition(format!(
            "{family} is a classical bound and requires a = 1, got a = {a}"
        )));
    }
    BoundSet::new(a, policy)?
        .bound(n, family, side)
        .map(|v| v.value)
}

/// The residual a family bounds, evaluated at `(a, n)`.
pub fn residual_for(
    a: f64,
    n: u64,
    residual: Residual,
    policy: &AccuracyPolicy,
) -> Result<EvalResult> {
    match residual {
        Residual::X => sequences::residual_x_eval(a, n, policy),
        Residual::Y => sequences::residual_y_eval(a, n, policy),
    }
}

// ---------------------------------------------------------------------------
// Enclosures

/// An interval certified to contain γ(a). Endpoints are rounded outward by
/// the accumulated error bounds; the open/closed flags record which
/// inequalities in the source bound are strict.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Enclosure {
    pub a: f64,
    pub n: u64,
    pub lo: f64,
    pub hi: f64,
    pub lo_closed: bool,
    pub hi_closed: bool,
    pub method: Method,
}

impl Serialize for Method {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

impl Enclosure {
    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, value: f64) -> bool {
        let above = if self.lo_closed {
            value >= self.lo
        } else {
            value > self.lo
        };
        let below = if self.hi_closed {
            value <= self.hi
        } else {
            value < self.hi
        };
        above && below
    }

    pub fn is_subset_of(&self, other: &Enclosure) -> bool {
        self.lo >= other.lo && self.hi <= other.hi
    }
}

fn outward(lo: EvalResult, hi: EvalResult) -> (f64, f64) {
    (lo.lo().next_down(), hi.hi().next_up())
}

fn enclose_single(
    set: &BoundSet,
    n: u64,
    family: Family,
    policy: &AccuracyPolicy,
) -> Result<Enclosure> {
    let a = set.a;
    if family == Family::Thm13Y && !set.thm13y_upper_holds(n, policy)? {
        return Err(Error::Precondition(format!(
            "THM13_Y upper bound needs f2tilde(n+a-1) > 1/6; it fails at a = {a}, n = {n} \
             (n = 1 requires a above about 0.10259)"
        )));
    }
    let lo_bound = set.bound(n, family, Side::Lo)?;
    let hi_bound = set.bound(n, family, Side::Hi)?;
    let lo_strict = family.strict(Side::Lo);
    let hi_strict = family.strict(Side::Hi);
    let (lo, hi, lo_closed, hi_closed) = match family.residual() {
        // γ = x_n + res_x
        Residual::X => {
            let x = sequences::x_n_eval(a, n, policy)?;
            let (lo, hi) = outward(x + lo_bound, x + hi_bound);
            (lo, hi, !lo_strict, !hi_strict)
        }
        // γ = y_n − res_y
        Residual::Y => {
            let y = sequences::y_n_eval(a, n, policy)?;
            let (lo, hi) = outward(y - hi_bound, y - lo_bound);
            (lo, hi, !hi_strict, !lo_strict)
        }
    };
    Ok(Enclosure {
        a,
        n,
        lo,
        hi,
        lo_closed,
        hi_closed,
        method: Method::Intersect, // overwritten by caller
    })
}

/// Encloses γ(a) using the bounds of one family at index `n`, or the
/// intersection of all four sharp families (`Method::Intersect`). The
/// intersection leaves out `THM13_Y` where its upper bound is invalid.
pub fn enclose(a: f64, n: u64, method: Method, policy: &AccuracyPolicy) -> Result<Enclosure> {
    require_positive("a", a)?;
    require_index("n", n)?;
    let set = BoundSet::new(a, policy)?;
    if let Some(family) = method.family() {
        let mut e = enclose_single(&set, n, family, policy)?;
        e.method = method;
        return Ok(e);
    }
    let mut parts = Vec::with_capacity(4);
    for family in Family::SHARP {
        if family == Family::Thm13Y && !set.thm13y_upper_holds(n, policy)? {
            continue;
        }
        parts.push(enclose_single(&set, n, family, policy)?);
    }
    let lo_part = parts
        .iter()
        .max_by(|p, q| p.lo.total_cmp(&q.lo))
        .copied()
        .expect("at least three families apply");
    let hi_part = parts
        .iter()
        .min_by(|p, q| p.hi.total_cmp(&q.hi))
        .copied()
        .expect("at least three families apply");
    if lo_part.lo > hi_part.hi {
        return Err(Error::Inconsistent(format!(
            "empty intersection at a = {a}, n = {n}: [{}, {}]",
            lo_part.lo, hi_part.hi
        )));
    }
    Ok(Enclosure {
        a,
        n,
        lo: lo_part.lo,
        hi: hi_part.hi,
        lo_closed: parts
            .iter()
            .filter(|p| p.lo == lo_part.lo)
            .all(|p| p.lo_closed),
        hi_closed: parts
            .iter()
            .filter(|p| p.hi == hi_part.hi)
            .all(|p| p.hi_closed),
        method: Method::Intersect,
    })
}

// ---------------------------------------------------------------------------
// Scans

fn sharp_lemma(family: Family) -> Option<(LemmaFunction, f64)> {
    // (function, offset): the defining sequence is f(n + a + offset).
    match family {
        Family::Thm13X => Some((LemmaFunction::F1, 0.0)),
        Family::Thm13Y => Some((LemmaFunction::F2Tilde, -1.0)),
        Family::Thm14X => Some((LemmaFunction::F3, 0.0)),
        Family::Thm14Y => Some((LemmaFunction::F3, -1.0)),
        _ => None,
    }
}

/// `{1..=min(100, n_max)}` plus ten logarithmic points per decade up to `n_max`.
pub fn scan_indices(n_max: u64) -> Vec<u64> {
    grid::default_n_grid(n_max)
}

/// Checks that a sharp family's constants are best possible at `a`:
/// the attained side meets the residual exactly at its attainment index, and
/// the defining sequence approaches the opposite constant monotonically from
/// the correct side.
pub fn sharpness_scan(
    a: f64,
    family: Family,
    n_max: u64,
    eps: f64,
    policy: &AccuracyPolicy,
) -> Result<ScanReport> {
    require_positive("a", a)?;
    let (lemma, offset) = sharp_lemma(family).ok_or_else(|| {
        Error::Precondition(format!(
            "sharpness scans apply to THM13/THM14 families, got {family}"
        ))
    })?;
    if n_max < SHARPNESS_MIN_N {
        return Err(Error::Precondition(format!(
            "sharpness scan requires n_max >= {SHARPNESS_MIN_N}, got {n_max}"
        )));
    }
    if !(eps.is_finite() && eps > 0.0) {
        return Err(Error::Precondition(format!("eps must be > 0, got {eps}")));
    }
    let set = BoundSet::new(a, policy)?;
    let constants = set.constants();
    let attain_n = if family == Family::Thm13Y {
        constants.argmax_n
    } else {
        1
    };
    // THM14_Y attains its upper side; the others their lower side.
    let attain_side = if family == Family::Thm14Y {
        Side::Hi
    } else {
        Side::Lo
    };
    let indices = scan_indices(n_max);
    let mut report = ScanReport::new(
        format!("sharpness:{}", family.name()),
        format!("a={a}; n=1..{} + log to {n_max}", n_max.min(100)),
    );

    let bound = set.bound(attain_n, family, attain_side)?;
    let residual = residual_for(a, attain_n, family.residual(), policy)?;
    let diff = (bound - residual).abs();
    report.record(
        Location::Point { a, n: attain_n },
        "equality_attainment",
        diff.value,
        eps,
        EvalResult::new(diff.value - eps, 0.0),
        Claim::Le,
    );
    report.observe("attainment_n", attain_n as f64);
    if constants.d_tie && family == Family::Thm13Y {
        report.observe("d_tie", 1.0);
    }

    // For THM14_X the defining sequence is −f3, increasing to 1/12; the gap
    // 1/12 − (−f3) = f3 + 1/12 is the same quantity as for THM14_Y.
    let mut previous: Option<(u64, EvalResult)> = None;
    for &n in &indices {
        let x = index_sum(n as f64 + offset, a);
        let gap = lemma.gap(x.value, policy)?.widen(x.abs_error_bound);
        let loc = Location::Point { a, n };
        report.record(loc, "limit_side", -gap.value, 0.0, -gap, Claim::Lt);
        if let Some((_, prev)) = previous {
            if n > attain_n {
                let step = gap - prev;
                report.record(
                    loc,
                    "monotone_approach",
                    gap.value,
                    prev.value,
                    step,
                    Claim::Lt,
                );
            }
        }
        previous = Some((n, gap));
    }
    report.add_points(indices.len());
    let (last_n, final_gap) = previous.expect("non-empty index grid");
    report.record(
        Location::Point { a, n: last_n },
        "limit_tolerance",
        final_gap.value.abs(),
        LIMIT_TOLERANCE,
        EvalResult::new(
            final_gap.value.abs() - LIMIT_TOLERANCE,
            final_gap.abs_error_bound,
        ),
        Claim::Le,
    );
    report.observe("final_gap", final_gap.value);
    report.observe("limit", lemma.limit());
    Ok(report)
}

/// Checks all four sharp inequalities at every `(a, n)` on the grid. A side
/// fails when it is violated by more than `slack_rel` relative to the
/// residual; equality at the attainment index therefore passes.
pub fn verify_sharp_inequalities(
    a_grid: &[f64],
    n_grid: &[u64],
    slack_rel: f64,
    policy: &AccuracyPolicy,
) -> Result<ScanReport> {
    let mut report = ScanReport::new(
        "inequalities",
        format!(
            "a: {} values in [{}, {}]; n: {} values in [{}, {}]",
            a_grid.len(),
            a_grid.first().copied().unwrap_or(f64::NAN),
            a_grid.last().copied().unwrap_or(f64::NAN),
            n_grid.len(),
            n_grid.first().copied().unwrap_or(0),
            n_grid.last().copied().unwrap_or(0),
        ),
    );
    for &a in a_grid {
        let set = BoundSet::new(a, policy)?;
        for &n in n_grid {
            let res_x = sequences::residual_x_eval(a, n, policy)?;
            let res_y = sequences::residual_y_eval(a, n, policy)?;
            let loc = Location::Point { a, n };
            for family in Family::SHARP {
                let res = match family.residual() {
                    Residual::X => res_x,
                    Residual::Y => res_y,
                };
                let band = slack_rel * res.value.abs();
                let lo = set.bound(n, family, Side::Lo)?;
                let hi = set.bound(n, family, Side::Hi)?;
                let lo_claim = if family.strict(Side::Lo) {
                    Claim::Lt
                } else {
                    Claim::Le
                };
                let hi_claim = if family.strict(Side::Hi) {
                    Claim::Lt
                } else {
                    Claim::Le
                };
                report.record(
                    loc,
                    &format!("{}_lo", family.name()),
                    lo.value,
                    res.value,
                    EvalResult::new(lo.value - res.value, band),
                    lo_claim,
                );
                report.record(
                    loc,
                    &format!("{}_hi", family.name()),
                    res.value,
                    hi.value,
                    EvalResult::new(res.value - hi.value, band),
                    hi_claim,
                );
            }
            report.add_points(1);
        }
    }
    Ok(report)
}
