#![allow(clippy::excessive_precision)]

// Acceptance criteria. Each test prints one PASS/FAIL line before asserting.

use std::process::Command;

use gamma_sharp::grid::{default_a_grid, default_n_grid};
use gamma_sharp::proof_certificates::{chen_certificates, default_chen_grid, lemma_suite};
use gamma_sharp::report::ScanReport;
use gamma_sharp::sequences::{residual_x, residual_y, x_n_closed, y_n_closed};
use gamma_sharp::sharp_bounds::{
    best_constants, bound_residual, enclose, verify_sharp_inequalities, Family, Method, Side,
};
use gamma_sharp::AccuracyPolicy;

/// Euler's constant to 20 digits.
const EULER_GAMMA: f64 = 0.577_215_664_901_532_860_61;

const ENCLOSURE_MAX_WIDTH: f64 = 2e-11;
const CONSTANT_TOL: f64 = 1e-12;
const INEQUALITY_SLACK_REL: f64 = 1e-13;
const EQUALITY_TOL: f64 = 1e-12;
const DIRECT_SUM_TOL: f64 = 1e-12;
const IDENTITY_TOL: f64 = 1e-13;
const LIMIT_TOL: f64 = 1e-4;
/// Half a unit in the last printed place of a 10-decimal value.
const PRINTED_10: f64 = 5e-11;
/// Half a unit in the last printed place of a 7-decimal value.
const PRINTED_7: f64 = 5e-8;

fn policy() -> AccuracyPolicy {
    AccuracyPolicy::default()
}

fn verdict(id: u32, name: &str, ok: bool, detail: &str) {
    println!(
        "criterion {id} [{}] {name}: {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
    assert!(ok, "criterion {id} ({name}) failed: {detail}");
}

fn describe(r: &ScanReport) -> String {
    let mut s = format!(
        "{} points, {} checks, {} failures, max violation {:.3e}",
        r.points_checked,
        r.checks,
        r.failures.len(),
        r.max_violation
    );
    for f in r.failures.iter().take(5) {
        s.push_str(&format!(
            "; {} fails at {} (lhs {:.12e}, rhs {:.12e})",
            f.check, f.location, f.lhs, f.rhs
        ));
    }
    s
}

#[test]
fn criterion_1_gamma_recovery() {
    let out = Command::new(env!("CARGO_BIN_EXE_gamma-sharp"))
        .args([
            "enclose", "--a", "1", "--n", "10000", "--method", "thm14x", "--format", "json",
        ])
        .output()
        .unwrap();
    let rows: Vec<std::collections::BTreeMap<String, Box<serde_json::value::RawValue>>> =
        serde_json::from_slice(&out.stdout).unwrap();
    // Parse the printed digits with the correctly rounded std parser.
    let lo: f64 = rows[0]["lo"].get().parse().unwrap();
    let hi: f64 = rows[0]["hi"].get().parse().unwrap();
    let lib = enclose(1.0, 10_000, Method::Thm14X, &policy()).unwrap();
    let width = hi - lo;
    // THM14_X is closed below and open above.
    let contains = lo <= EULER_GAMMA && EULER_GAMMA < hi;
    let ok = out.status.success()
        && contains
        && width <= ENCLOSURE_MAX_WIDTH
        && lib.lo == lo
        && lib.hi == hi
        && lib.lo_closed
        && !lib.hi_closed;
    verdict(
        1,
        "gamma recovery",
        ok,
        &format!(
            "[{lo:.17e}, {hi:.17e}) width {width:.4e}, contains {EULER_GAMMA:.17e}: {contains}"
        ),
    );
}

#[test]
fn criterion_2_chen_constant() {
    let c = best_constants(1.0, &policy()).unwrap();
    let chen = (2.0 * EULER_GAMMA - 1.0) / (1.0 - EULER_GAMMA);
    let diff = (2.0 - c.alpha2 - chen).abs();
    let printed = (2.0 - c.alpha2 - 0.365_272_118_6).abs();
    verdict(
        2,
        "2 - alpha2 = (2g-1)/(1-g)",
        diff <= CONSTANT_TOL && printed <= PRINTED_10,
        &format!(
            "2 - alpha2 = {:.15}, expected {chen:.15}, diff {diff:.2e}",
            2.0 - c.alpha2
        ),
    );
}

#[test]
fn criterion_3_qiu_constants() {
    let c = best_constants(1.0, &policy()).unwrap();
    let expected = -(EULER_GAMMA - 0.5);
    let diff = (c.beta4 - expected).abs();
    let printed = (c.beta4 + 0.077_215_664_9).abs();
    let alpha4_exact = c.alpha4 == -1.0 / 12.0;
    verdict(
        3,
        "beta4 = -(g - 1/2), alpha4 = -1/12",
        diff <= CONSTANT_TOL && printed <= PRINTED_10 && alpha4_exact,
        &format!(
            "beta4 = {:.15}, diff {diff:.2e}, alpha4 exact: {alpha4_exact}",
            c.beta4
        ),
    );
}

#[test]
fn criterion_4_inequality_grid() {
    let a_grid = default_a_grid();
    let n_grid = default_n_grid(100_000);
    let r = verify_sharp_inequalities(&a_grid, &n_grid, INEQUALITY_SLACK_REL, &policy()).unwrap();
    verdict(
        4,
        "inequality grid",
        r.passed && r.failures.is_empty(),
        &describe(&r),
    );
}

#[test]
fn criterion_5_equality_attainment() {
    let p = policy();
    // 20 log-spaced values in [0.1, 10]
    let samples: Vec<f64> = (0..20)
        .map(|i| 0.1 * 100f64.powf(i as f64 / 19.0))
        .collect();
    let mut worst: f64 = 0.0;
    let mut worst_at = String::new();
    for &a in &samples {
        let c = best_constants(a, &p).unwrap();
        let rx1 = residual_x(a, 1, &p).unwrap();
        let ry1 = residual_y(a, 1, &p).unwrap();
        let m = 1.0 + a;
        let checks = [
            ("THM13_X", rx1 - 1.0 / (2.0 * m - c.alpha1)),
            ("THM14_X", rx1 - (0.5 / m + c.alpha3 / (m * m))),
            ("THM14_Y", ry1 - (0.5 / a + c.beta4 / (a * a))),
            ("THM13_Y", {
                let n = c.argmax_n;
                let ry = residual_y(a, n, &p).unwrap();
                ry - 1.0 / (2.0 * (n as f64 + a) - c.alpha2)
            }),
        ];
        for (name, d) in checks {
            if d.abs() > worst {
                worst = d.abs();
                worst_at = format!("{name} at a = {a:.4}");
            }
        }
        // The library's own bound evaluation must agree as well.
        let lo = bound_residual(a, 1, Family::Thm13X, Side::Lo, &p).unwrap();
        worst = worst.max((lo - rx1).abs());
    }
    verdict(
        5,
        "equality attainment",
        worst <= EQUALITY_TOL,
        &format!("20 values of a, largest |residual - bound| {worst:.2e} ({worst_at})"),
    );
}

#[test]
fn criterion_6_dominance_over_bm11() {
    let p = policy();
    let lower_edge = 2.0 - 1.0 / EULER_GAMMA;
    let n_grid: Vec<u64> = default_n_grid(100_000)
        .into_iter()
        .filter(|&n| n >= 2)
        .collect();
    let mut problems = Vec::new();
    let mut checked = 0usize;
    for a in default_a_grid() {
        let c = best_constants(a, &p).unwrap();
        if !(c.alpha1 > lower_edge && c.alpha1 < 1.0 / 3.0 && c.alpha1 > 0.25) {
            problems.push(format!("alpha1 = {} at a = {a}", c.alpha1));
        }
        if c.beta1 != 1.0 / 3.0 || c.beta2 != 5.0 / 3.0 {
            problems.push(format!("upper constants at a = {a}"));
        }
        for &n in &n_grid {
            let thm_lo = bound_residual(a, n, Family::Thm13X, Side::Lo, &p).unwrap();
            let bm_lo = bound_residual(a, n, Family::Bm11X, Side::Lo, &p).unwrap();
            if thm_lo < bm_lo {
                problems.push(format!("lo at a = {a}, n = {n}"));
            }
            for (thm, bm) in [
                (Family::Thm13X, Family::Bm11X),
                (Family::Thm13Y, Family::Bm11Y),
            ] {
                let t = bound_residual(a, n, thm, Side::Hi, &p).unwrap();
                let b = bound_residual(a, n, bm, Side::Hi, &p).unwrap();
                if t != b {
                    problems.push(format!("{thm} hi differs at a = {a}, n = {n}"));
                }
            }
            checked += 1;
        }
    }
    verdict(
        6,
        "dominance over prior bounds",
        problems.is_empty(),
        &format!(
            "{checked} (a, n) points, {} problems {:?}",
            problems.len(),
            &problems[..problems.len().min(3)]
        ),
    );
}

#[test]
fn criterion_7_lemma_suite() {
    let p = policy();
    let lemmas = lemma_suite(&p).unwrap();
    let chen = chen_certificates(&default_chen_grid(), &p).unwrap();
    let limits_ok = lemmas
        .observations
        .iter()
        .filter(|o| o.name.ends_with("_gap_at_1e6"))
        .all(|o| o.value > 0.0 && o.value < LIMIT_TOL);
    let ok = lemmas.passed && chen.passed && limits_ok;
    verdict(
        7,
        "lemma suite",
        ok,
        &format!("lemmas: {}; chen: {}", describe(&lemmas), describe(&chen)),
    );
}

/// Compensated (Kahan-Babuska) sum, kept separate from the library's.
fn direct_harmonic(a: f64, n: u64) -> f64 {
    let (mut s, mut c) = (0.0f64, 0.0f64);
    for k in 0..n {
        let x = 1.0 / (a + k as f64);
        let t = s + x;
        c += if s.abs() >= x.abs() {
            (s - t) + x
        } else {
            (x - t) + s
        };
        s = t;
    }
    s + c
}

#[test]
fn criterion_8_oracle_equivalence() {
    let p = policy();
    let mut worst_direct: f64 = 0.0;
    for a in [0.1, 1.0, 2.5, 10.0] {
        for n in 1..=1000u64 {
            let h = direct_harmonic(a, n);
            let xd = h - (n as f64 / a).ln_1p();
            let yd = h - ((n - 1) as f64 / a).ln_1p();
            worst_direct = worst_direct
                .max((x_n_closed(a, n, &p).unwrap() - xd).abs())
                .max((y_n_closed(a, n, &p).unwrap() - yd).abs());
        }
    }
    let mut worst_identity: f64 = 0.0;
    for a in default_a_grid() {
        for n in default_n_grid(100_000) {
            let exact = (1.0 / ((n - 1) as f64 + a)).ln_1p();
            let sum = residual_x(a, n, &p).unwrap() + residual_y(a, n, &p).unwrap();
            worst_identity = worst_identity.max((sum - exact).abs());
        }
    }
    verdict(
        8,
        "oracle equivalence",
        worst_direct <= DIRECT_SUM_TOL && worst_identity <= IDENTITY_TOL,
        &format!("closed vs direct {worst_direct:.2e}, residual identity {worst_identity:.2e}"),
    );
}

#[test]
fn criterion_9_spot_values() {
    let p = policy();
    let x10 = x_n_closed(1.0, 10, &p).unwrap();
    let y10 = y_n_closed(1.0, 10, &p).unwrap();
    let rx = residual_x(1.0, 10, &p).unwrap();
    let lo = bound_residual(1.0, 10, Family::Thm14X, Side::Lo, &p).unwrap();
    let hi = bound_residual(1.0, 10, Family::Thm14X, Side::Hi, &p).unwrap();
    // Harmonic-sum oracle: H_10 = 7381/2520.
    let h10 = 7381.0 / 2520.0;
    let ok = (x10 - 0.531_072_981_2).abs() <= PRINTED_10
        && (y10 - 0.626_383_161_0).abs() <= PRINTED_10
        && (rx - 0.046_142_683_7).abs() <= PRINTED_10
        && (x10 - (h10 - 11f64.ln())).abs() <= 1e-14
        && (y10 - (h10 - 10f64.ln())).abs() <= 1e-14
        && (lo - 0.046_127_7).abs() <= PRINTED_7
        && (hi - 0.046_143_3).abs() <= PRINTED_7
        && lo <= rx
        && rx < hi;
    verdict(
        9,
        "spot values",
        ok,
        &format!("x10 = {x10:.10}, y10 = {y10:.10}, res_x = {rx:.10} in [{lo:.7}, {hi:.7})"),
    );
}
