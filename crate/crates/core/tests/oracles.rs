#![allow(clippy::excessive_precision)]

// Library values checked against independent oracles: slow convergent series
// with Euler-Maclaurin tails, exact harmonic sums, and 40-digit reference
// values frozen from an arbitrary-precision package.

use gamma_sharp::sequences::{self, gamma_a, residual_x, residual_y, x_n_closed, y_n_closed};
use gamma_sharp::sharp_bounds::{
    best_constants, bound_residual, enclose, f1, f2tilde, f3, Family, Method, Side,
};
use gamma_sharp::special_fn::{ln_minus_psi, psi, psi_shift1_minus_ln, trigamma};
use gamma_sharp::AccuracyPolicy;

const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_6;

fn policy() -> AccuracyPolicy {
    AccuracyPolicy::default()
}

/// ψ(x) = −γ + Σ_{k≥0} (1/(k+1) − 1/(k+x)), first N terms summed with
/// compensation, the rest by Euler-Maclaurin.
fn psi_oracle(x: f64) -> f64 {
    const N: usize = 200_000;
    let mut s = sequences::NeumaierSum::default();
    s.add(-EULER_GAMMA);
    for k in 0..N {
        let k = k as f64;
        s.add(1.0 / (k + 1.0));
        s.add(-1.0 / (k + x));
    }
    let n = N as f64;
    let f = 1.0 / (n + 1.0) - 1.0 / (n + x);
    let df = -1.0 / (n + 1.0).powi(2) + 1.0 / (n + x).powi(2);
    s.add(((x - 1.0) / (n + 1.0)).ln_1p());
    s.add(f / 2.0);
    s.add(-df / 12.0);
    s.total()
}

/// ψ′(x) = Σ_{k≥0} 1/(k+x)², with an Euler-Maclaurin tail.
fn trigamma_oracle(x: f64) -> f64 {
    const N: usize = 1000;
    let mut s = sequences::NeumaierSum::default();
    for k in (0..N).rev() {
        s.add(1.0 / (k as f64 + x).powi(2));
    }
    let z = N as f64 + x;
    s.add(1.0 / z + 0.5 / (z * z) + 1.0 / (6.0 * z.powi(3)) - 1.0 / (30.0 * z.powi(5)));
    s.total()
}

/// (x, ψ(x), ψ′(x), ln x − ψ(x)) at 40 digits, rounded to double.
const REFERENCE: [(f64, f64, f64, f64); 16] = [
    (
        0.1,
        -10.423754940411076795,
        101.43329915079275882,
        8.1211698474170311112,
    ),
    (
        0.25,
        -4.2274535333762654081,
        17.197329154507110739,
        2.8411591722563747893,
    ),
    (
        0.5,
        -1.9635100260214234794,
        4.9348022005446793094,
        1.27036284546147817,
    ),
    (
        1.0,
        -0.57721566490153286061,
        1.6449340668482264365,
        0.57721566490153286061,
    ),
    (
        1.5,
        0.036489973978576520559,
        0.93480220054467930942,
        0.36897513412958786142,
    ),
    (
        2.0,
        0.42278433509846713939,
        0.64493406684822643647,
        0.27036284546147817002,
    ),
    (
        3.7,
        1.1671535393615113859,
        0.3100378576700383191,
        0.14117928028866737448,
    ),
    (
        9.99,
        2.2507003728312010995,
        0.10527695014824178675,
        0.05088421982926105098,
    ),
    (
        10.0,
        2.2517525890667211076,
        0.10516633568168574612,
        0.050832503927324576371,
    ),
    (
        15.999,
        2.7409488324649627359,
        0.064497941681361216947,
        0.031577387821612117793,
    ),
    (
        16.0,
        2.7410133283274603684,
        0.064493783403239361782,
        0.031575393912320869282,
    ),
    (
        16.001,
        2.7410778200319478683,
        0.064489625661078768605,
        0.031573400254789745733,
    ),
    (
        50.0,
        3.901989673427892197,
        0.020201333226697125806,
        0.010033332000253861665,
    ),
    (
        123.456,
        4.8118293238289853873,
        0.0081329458342781980101,
        0.004055493454278495787,
    ),
    (
        1e4,
        9.2102903711428494036,
        0.00010000500016666666633,
        0.0000500008333333325,
    ),
    (
        1e8,
        18.420680738952365464,
        1.0000000050000000167e-8,
        5.0000000083333333333e-9,
    ),
];

#[test]
fn reference_values_lie_within_error_bounds() {
    let p = policy();
    for (x, psi_ref, tri_ref, lmp_ref) in REFERENCE {
        let v = psi(x, &p).unwrap();
        // The reference itself is rounded to double: allow half an ulp.
        let slack = 0.5 * f64::EPSILON;
        assert!(
            (v.value - psi_ref).abs() <= v.abs_error_bound + slack * psi_ref.abs(),
            "psi({x}) = {v}, reference {psi_ref}"
        );
        let t = trigamma(x, &p).unwrap();
        assert!(
            (t.value - tri_ref).abs() <= t.abs_error_bound + slack * tri_ref,
            "trigamma({x}) = {t}, reference {tri_ref}"
        );
        let l = ln_minus_psi(x, &p).unwrap();
        assert!(
            (l.value - lmp_ref).abs() <= l.abs_error_bound + slack * lmp_ref,
            "ln_minus_psi({x}) = {l}, reference {lmp_ref}"
        );
        assert!(
            (l.value - lmp_ref).abs() <= 1e-13 * lmp_ref,
            "relative accuracy at {x}"
        );
    }
}

#[test]
fn psi_matches_series_oracle() {
    let p = policy();
    for x in [0.3, 0.7, 1.0, 2.5, 7.0, 12.25, 16.5, 30.0] {
        let oracle = psi_oracle(x);
        let v = psi(x, &p).unwrap().value;
        assert!(
            (v - oracle).abs() < 1e-12 * oracle.abs().max(1.0),
            "x = {x}: {v} vs {oracle}"
        );
    }
}

#[test]
fn trigamma_matches_series_oracle() {
    let p = policy();
    for x in [0.2, 1.0, 3.3, 15.0, 17.0, 80.0] {
        let oracle = trigamma_oracle(x);
        let v = trigamma(x, &p).unwrap().value;
        assert!(
            (v - oracle).abs() < 1e-13 * oracle,
            "x = {x}: {v} vs {oracle}"
        );
    }
}

#[test]
fn psi_shift_identity() {
    // ψ(x+1) − ln x = 1/x − (ln x − ψ(x))
    let p = policy();
    for x in [0.05, 0.5, 1.0, 4.0, 15.5, 16.0, 200.0] {
        let direct = psi_shift1_minus_ln(x, &p).unwrap().value;
        let via = 1.0 / x - ln_minus_psi(x, &p).unwrap().value;
        assert!(
            (direct - via).abs() < 1e-13 * direct.abs().max(1e-3),
            "x = {x}"
        );
    }
}

#[test]
fn gamma_from_harmonic_numbers() {
    // γ ≈ H_n − ln(n+1) + 1/(2(n+1)) + 1/(12(n+1)²) at n = 10⁴
    let n = 10_000u64;
    let mut h = sequences::NeumaierSum::default();
    for k in (1..=n).rev() {
        h.add(1.0 / k as f64);
    }
    let m = (n + 1) as f64;
    let oracle = h.total() - m.ln() + 0.5 / m + 1.0 / (12.0 * m * m);
    let g = gamma_a(1.0, &policy()).unwrap();
    assert!((g.value - oracle).abs() < 1e-14);
    assert!((g.value - EULER_GAMMA).abs() <= g.abs_error_bound);
}

#[test]
fn harmonic_spot_values() {
    let p = policy();
    let h10 = 7381.0 / 2520.0;
    let x10 = h10 - 11f64.ln();
    let y10 = h10 - 10f64.ln();
    assert!((x_n_closed(1.0, 10, &p).unwrap() - x10).abs() < 1e-14);
    assert!((y_n_closed(1.0, 10, &p).unwrap() - y10).abs() < 1e-14);
    assert!((residual_x(1.0, 10, &p).unwrap() - (EULER_GAMMA - x10)).abs() < 1e-14);
    assert!((residual_y(1.0, 10, &p).unwrap() - (y10 - EULER_GAMMA)).abs() < 1e-14);
}

#[test]
fn lemma_function_oracles() {
    let p = policy();
    let f1_2 = 1.0 / (2f64.ln() - (1.0 - EULER_GAMMA)) - 4.0;
    assert!((f1(2.0, &p).unwrap() - f1_2).abs() < 1e-13);
    let f2_1 = 1.0 / (2.0 * (1.0 - EULER_GAMMA)) - 1.0;
    assert!((f2tilde(1.0, &p).unwrap() - f2_1).abs() < 1e-13);
    // f3(1) = ψ(1) − ln 1 + 1/2
    assert!((f3(1.0, &p).unwrap() - (0.5 - EULER_GAMMA)).abs() < 1e-14);
    // f3(x) ~ −1/12 + 1/(120x²)
    let x = 1e3;
    assert!((f3(x, &p).unwrap() - (-1.0 / 12.0 + 1.0 / (120.0 * x * x))).abs() < 1e-12);
}

#[test]
fn constants_at_one_from_gamma() {
    let c = best_constants(1.0, &policy()).unwrap();
    let alpha1 = 4.0 - 1.0 / (2f64.ln() - 1.0 + EULER_GAMMA);
    assert!((c.alpha1 - alpha1).abs() < 1e-13);
    // α₃ = 4(ln 2 − ψ(2)) − 1
    let alpha3 = 4.0 * (2f64.ln() - 1.0 + EULER_GAMMA) - 1.0;
    assert!((c.alpha3 - alpha3).abs() < 1e-13);
    assert!((c.alpha3 - 0.0814514).abs() < 1e-7);
}

#[test]
fn bound_value_oracles() {
    let p = policy();
    let alpha3 = 4.0 * (2f64.ln() - 1.0 + EULER_GAMMA) - 1.0;
    let lo = bound_residual(1.0, 10, Family::Thm14X, Side::Lo, &p).unwrap();
    assert!((lo - (1.0 / 22.0 + alpha3 / 121.0)).abs() < 1e-15);
    let hi = bound_residual(1.0, 10, Family::Thm14X, Side::Hi, &p).unwrap();
    assert!((hi - (1.0 / 22.0 + 1.0 / (12.0 * 121.0))).abs() < 1e-16);
    let alzer = bound_residual(1.0, 4, Family::Alzer, Side::Lo, &p).unwrap();
    assert_eq!(alzer, 1.0 / 9.0);
    let toth = bound_residual(1.0, 4, Family::Toth, Side::Hi, &p).unwrap();
    assert!((toth - 1.0 / (8.0 + 1.0 / 3.0)).abs() < 1e-16);
}

#[test]
fn enclosure_oracle() {
    let p = policy();
    let h10 = 7381.0 / 2520.0;
    let x10 = h10 - 11f64.ln();
    let alpha3 = 4.0 * (2f64.ln() - 1.0 + EULER_GAMMA) - 1.0;
    let e = enclose(1.0, 10, Method::Thm14X, &p).unwrap();
    assert!((e.lo - (x10 + 1.0 / 22.0 + alpha3 / 121.0)).abs() < 1e-13);
    assert!((e.hi - (x10 + 1.0 / 22.0 + 1.0 / 1452.0)).abs() < 1e-13);
    assert!(e.contains(EULER_GAMMA));
}
