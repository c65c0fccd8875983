//! Test-only reference implementations, independent of the library.
#![allow(dead_code, clippy::excessive_precision)]

use std::f64::consts::PI;

use num_complex::Complex64;
use zerobound_core::LFunctionData;

const BERNOULLI: [f64; 8] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
];

const ASYMPTOTIC_RADIUS: f64 = 30.0;

/// Binet remainder `W(z) = log Gamma(z) - (z - 1/2) log z + z - log(2 pi)/2`
/// on the principal branch, via `W(z) = W(z+1) + (z+1/2) log((z+1)/z) - 1` and
/// the Stirling series once `|z| >= 30`.
pub fn binet(z: Complex64) -> Complex64 {
    let mut w = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while w.norm() < ASYMPTOTIC_RADIUS || w.re < 0.0 {
        shift += (w + 0.5) * ((w + 1.0).ln() - w.ln()) - 1.0;
        w += 1.0;
    }
    let inv = w.inv();
    let inv2 = inv * inv;
    let mut power = inv;
    let mut series = Complex64::new(0.0, 0.0);
    for (k, b) in BERNOULLI.iter().enumerate() {
        let n = 2.0 * (k as f64 + 1.0);
        series += power * (b / (n * (n - 1.0)));
        power *= inv2;
    }
    series + shift
}

pub fn ln_abs_gamma(z: Complex64) -> f64 {
    ((z - 0.5) * z.ln() - z + 0.5 * (2.0 * PI).ln() + binet(z)).re
}

/// `log|Delta(s)|` for `Delta = omega Q^{1-2s} prod Gamma(l(1-s)+conj m)/Gamma(l s + m)`.
pub fn log_abs_delta(data: &LFunctionData, sigma: f64, t: f64) -> f64 {
    let s = Complex64::new(sigma, t);
    let one = Complex64::new(1.0, 0.0);
    let mut total = (1.0 - 2.0 * sigma) * data.q().ln() + data.omega().norm().ln();
    for g in data.factors() {
        total += ln_abs_gamma((one - s) * g.lambda() + g.mu().conj());
        total -= ln_abs_gamma(s * g.lambda() + g.mu());
    }
    total
}

/// `(z, log|Gamma(z)|, W(z))` from mpmath at 30 digits.
pub const REFERENCE: [(f64, f64, f64, f64, f64); 7] = [
    (
        0.5,
        14.0,
        -21.072210041923879927,
        0.00021242248946442858643,
        -0.0059458043416394258307,
    ),
    (
        5.5,
        0.3,
        3.9488488483824405171,
        0.015090317249021658101,
        -0.00082133035804721890927,
    ),
    (
        -10.5,
        27.0,
        -78.036467285494970468,
        -0.0010427000647567865736,
        -0.0026810156658045156364,
    ),
    (
        17.5,
        -300.0,
        -373.34657588432707453,
        0.000016148770887011029617,
        0.00027683586797936411254,
    ),
    (
        0.25,
        1000.0,
        -1571.6043270736249795,
        2.083333411458397275e-8,
        -0.000083333330902777855283,
    ),
    (
        -3.0,
        0.5,
        -1.4451413615142685763,
        0.017233308536226076723,
        -0.0044596081954080443546,
    ),
    (
        2.0,
        2.0,
        -1.0713598302138791539,
        0.020916807116467777333,
        -0.020743752672129578274,
    ),
];

/// Largest absolute deviation of the oracle from [`REFERENCE`].
pub fn reference_error() -> f64 {
    REFERENCE
        .iter()
        .map(|&(re, im, lg, w_re, w_im)| {
            let z = Complex64::new(re, im);
            let rel = (ln_abs_gamma(z) - lg).abs() / lg.abs().max(1.0);
            rel.max((binet(z) - Complex64::new(w_re, w_im)).norm())
        })
        .fold(0.0, f64::max)
}

pub fn zeros_path(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
}
