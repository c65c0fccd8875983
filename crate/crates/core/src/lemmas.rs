//! Numerical checks of the auxiliary logarithm and real-part inequalities.
//!
//! Each check evaluates the exact left-hand side and the closed-form
//! majorant; they back the property-test suite.

use num_complex::Complex64;

use crate::data::LFunctionData;
use crate::error::{Error, Result};

/// Outcome of comparing an exact value with its majorant.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InequalityCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
}

impl InequalityCheck {
    pub fn strict(lhs: f64, rhs: f64) -> Self {
        Self {
            lhs,
            rhs,
            holds: lhs < rhs,
        }
    }

    pub fn non_strict(lhs: f64, rhs: f64) -> Self {
        Self {
            lhs,
            rhs,
            holds: lhs <= rhs,
        }
    }
}

/// `|log(1 + z)| < 2|z|` for `0 < |z| < 1/2`.
pub fn log1p_check(z: Complex64) -> Result<InequalityCheck> {
    let r = z.norm();
    if !(r > 0.0 && r < 0.5) {
        return Err(Error::Domain("log1p check requires 0 < |z| < 1/2"));
    }
    Ok(InequalityCheck::strict((z + 1.0).ln().norm(), 2.0 * r))
}

/// `|log(1 - z i)| < 7|z|` for real `z != 0`.
pub fn log_linear_check(z: f64) -> Result<InequalityCheck> {
    if !(z.is_finite() && z != 0.0) {
        return Err(Error::Domain(
            "log-linear check requires a finite nonzero real",
        ));
    }
    Ok(InequalityCheck::strict(
        Complex64::new(1.0, -z).ln().norm(),
        7.0 * z.abs(),
    ))
}

/// The `sigma`/`sigma + 1` logarithm difference against
/// `(2/t)|-d sigma + Im(mu) i/2| - 7 d (2 sigma + 1) / (2t)`, for `sigma < -3`.
pub fn aux1_check(data: &LFunctionData, sigma: f64, t: f64) -> Result<InequalityCheck> {
    if !(sigma < -3.0 && t > 0.0) {
        return Err(Error::Domain("requires sigma < -3 and t > 0"));
    }
    let d = data.degree();
    let half_im = data.mu_sum().im / 2.0;
    let upper = Complex64::new(1.0, -sigma / t).ln() * Complex64::new(d * (0.5 - sigma), half_im);
    let lower =
        Complex64::new(1.0, -(sigma + 1.0) / t).ln() * Complex64::new(d * (-0.5 - sigma), half_im);
    let lhs = (upper - lower).re.abs();
    let rhs = 2.0 / t * Complex64::new(-d * sigma, half_im).norm()
        - 7.0 * d * (2.0 * sigma + 1.0) / (2.0 * t);
    Ok(InequalityCheck::strict(lhs, rhs))
}

/// `|Re(-d - d log(1 - sigma i/t) i t + d log(1 - (sigma+1) i/t) i t)|`
/// against `d (3(sigma^2 + sigma)/t^2 + 2/t)`, for `|sigma| >= 1`.
pub fn aux2_check(data: &LFunctionData, sigma: f64, t: f64) -> Result<InequalityCheck> {
    if !(sigma.abs() >= 1.0 && t > 0.0) {
        return Err(Error::Domain("requires |sigma| >= 1 and t > 0"));
    }
    let d = data.degree();
    let it = Complex64::new(0.0, t);
    let value = -d - Complex64::new(1.0, -sigma / t).ln() * it * d
        + Complex64::new(1.0, -(sigma + 1.0) / t).ln() * it * d;
    let rhs = d * (3.0 * (sigma * sigma + sigma) / (t * t) + 2.0 / t);
    Ok(InequalityCheck::strict(value.re.abs(), rhs))
}

/// `Re(log(1 + 2i/t)(d(5/2 - it) + Im(mu) i/2)) < (5 sqrt 5 + 4)/2 d + |Im mu|`
/// for `t >= 1`.
pub fn l2real_check(data: &LFunctionData, t: f64) -> Result<InequalityCheck> {
    if !(t >= 1.0 && t.is_finite()) {
        return Err(Error::Domain("requires t >= 1"));
    }
    let d = data.degree();
    let im_mu = data.mu_sum().im;
    let lhs =
        (Complex64::new(1.0, 2.0 / t).ln() * Complex64::new(2.5 * d, -d * t + im_mu / 2.0)).re;
    let rhs = (5.0 * 5f64.sqrt() + 4.0) / 2.0 * d + im_mu.abs();
    Ok(InequalityCheck::strict(lhs, rhs))
}
