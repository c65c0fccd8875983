//! Stirling-remainder envelopes, gamma-ratio error bounds and the piecewise
//! upper envelope for `|L(s)|` near a horizontal segment.
//!
//! Only the `N = 1` Stirling remainder is used, so the single Bernoulli number
//! needed is `B_2 = 1/6`.

use core::f64::consts::PI;

use num_complex::Complex64;

use crate::admissible::check_admissible;
use crate::data::LFunctionData;
use crate::error::{Error, Result};
use crate::strip::StripParams;

pub const B2: f64 = 1.0 / 6.0;

/// Smallest `|cos(arg/2)|` accepted before a secant is considered singular.
const COS_GUARD: f64 = 1e-12;

/// `sec^2(arg(z) / 2)` on the principal branch.
pub fn sec2_half_arg(z: Complex64) -> Result<f64> {
    let arg = z.im.atan2(z.re);
    if z.norm() == 0.0 || arg.abs() >= PI {
        return Err(Error::Domain("argument must satisfy |arg z| < pi"));
    }
    let c = (arg / 2.0).cos();
    if c.abs() < COS_GUARD {
        return Err(Error::Domain("secant singular"));
    }
    Ok(1.0 / (c * c))
}

/// Majorant `B_2 / (2|z|) sec^2(arg(z)/2)` of the first Stirling remainder.
pub fn w1_bound(z: Complex64) -> Result<f64> {
    let sec2 = sec2_half_arg(z)?;
    Ok(B2 / (2.0 * z.norm()) * sec2)
}

/// `2 + sec^2(arg(lambda_j (x + H i)) / 2)` where `H` is the height threshold.
pub(crate) fn secant_block(data: &LFunctionData, lambda: f64, x: f64) -> Result<f64> {
    let z = Complex64::new(x, data.height_threshold()) * lambda;
    Ok(2.0 + sec2_half_arg(z)?)
}

fn check_height(data: &LFunctionData, t: f64) -> Result<()> {
    if !(t >= data.reflected_threshold() && t >= data.shift_threshold()) || t <= 0.0 {
        return Err(Error::Domain(
            "t must be at least max_j 2|lambda_j + conj(mu_j)|/lambda_j and max_j 2|mu_j|/lambda_j",
        ));
    }
    Ok(())
}

/// Bound on `|W(-lambda_j s)| + |W(lambda_j s)|` for `s = sigma + it`.
pub fn w_pair_bound(data: &LFunctionData, j: usize, sigma: f64, t: f64) -> Result<f64> {
    let lambda = data.factor(j)?.lambda();
    check_height(data, t)?;
    let block = secant_block(data, lambda, -sigma.abs())?;
    Ok(B2 / (2.0 * lambda * t) * block)
}

/// Bound on `|V_j(sigma + it)|`, the remainder of the j-th gamma ratio.
pub fn vj_bound(data: &LFunctionData, j: usize, sigma: f64, t: f64) -> Result<f64> {
    let factor = *data.factor(j)?;
    let pair = w_pair_bound(data, j, sigma, t)?;
    Ok(factor.remainder_numerator() / (factor.lambda() * t) + pair)
}

/// `sum_j vj_bound(j, sigma, t)`.
pub fn v_bound(data: &LFunctionData, sigma: f64, t: f64) -> Result<f64> {
    (0..data.len()).map(|j| vj_bound(data, j, sigma, t)).sum()
}

/// Supremum envelope `V*(T)` of `|V(s)|` over the Jensen disc around `a + iT`.
pub fn v_star(data: &LFunctionData, strip: &StripParams, t: f64) -> Result<f64> {
    let two_r = 2.0 * strip.width();
    if !(t > two_r) {
        return Err(Error::Domain("V* requires T > 2R"));
    }
    let x = -strip.a() - two_r;
    let mut total = 0.0;
    for g in data.factors() {
        let block = secant_block(data, g.lambda(), x)?;
        total += (g.remainder_numerator() + B2 / 2.0 * block) / g.lambda();
    }
    Ok(total / (t - two_r))
}

fn check_gamma_arguments(data: &LFunctionData, sigma: f64, t: f64) -> Result<()> {
    if !(t > 0.0) {
        return Err(Error::Domain("t must be positive"));
    }
    let s = Complex64::new(sigma, t);
    for g in data.factors() {
        let direct = s * g.lambda() + g.mu();
        let reflected = (Complex64::new(1.0, 0.0) - s) * g.lambda() + g.mu().conj();
        for z in [direct, reflected] {
            if z.im == 0.0 && z.re <= 0.0 {
                return Err(Error::Domain("gamma argument on the branch cut"));
            }
        }
    }
    Ok(())
}

/// `V`-free part of `log|Delta_L(sigma + it)|`:
/// `(1/2 - sigma)(d log t + log(lambda Q^2)) + d sigma
///  + Re(log(1 - sigma i / t) (d(1/2 - s) + Im(mu) i / 2))`.
pub fn log_delta_main(data: &LFunctionData, sigma: f64, t: f64) -> Result<f64> {
    check_gamma_arguments(data, sigma, t)?;
    let d = data.degree();
    let im_mu = data.mu_sum().im;
    let s = Complex64::new(sigma, t);
    let log_factor = Complex64::new(1.0, -sigma / t).ln();
    let weight = (Complex64::new(0.5, 0.0) - s) * d + Complex64::new(0.0, im_mu / 2.0);
    Ok((0.5 - sigma) * (d * t.ln() + data.lambda_q2().ln()) + d * sigma + (log_factor * weight).re)
}

/// `a1 pi^2 / 6`, the bound for `|L(s)|` when `sigma >= 3`.
pub fn absolute_bound(data: &LFunctionData) -> f64 {
    data.a1() * PI * PI / 6.0
}

/// Interpolation constant for the band `-2 <= sigma <= 3`.
pub fn convexity_constant(data: &LFunctionData, strip: &StripParams, big_t: f64) -> Result<f64> {
    let two_r = 2.0 * strip.width();
    if !(big_t > two_r) {
        return Err(Error::Domain("convexity constant requires T > 2R"));
    }
    let d = data.degree();
    let mut remainder = 0.0;
    for g in data.factors() {
        let block = secant_block(data, g.lambda(), -2.0)?;
        remainder += (g.remainder_numerator() + B2 / 2.0 * block) / (g.lambda() * (big_t - two_r));
    }
    let pole = 3f64.powi(data.pole_order() as i32);
    let base = pole * absolute_bound(data);
    let exponent = 2.5 * 5f64.sqrt() * d + data.mu_sum().im.abs() + remainder;
    let left = base * data.lambda_q2().powf(2.5) * exponent.exp();
    Ok(base.max(left))
}

/// Envelope `2^(5d/2 + 1) M1 t^(d(3 - sigma)/2)` valid for `-2 <= sigma <= 3`.
pub fn middle_band_envelope(
    data: &LFunctionData,
    strip: &StripParams,
    sigma: f64,
    t: f64,
    big_t: f64,
) -> Result<f64> {
    check_window(data, strip, t, big_t)?;
    if !(-2.0..=3.0).contains(&sigma) {
        return Err(Error::Domain("middle band requires -2 <= sigma <= 3"));
    }
    let d = data.degree();
    let m1 = convexity_constant(data, strip, big_t)?;
    Ok(2f64.powf(2.5 * d + 1.0) * m1 * t.powf(d * (3.0 - sigma) / 2.0))
}

fn check_window(data: &LFunctionData, strip: &StripParams, t: f64, big_t: f64) -> Result<()> {
    check_admissible(data, strip, big_t)?;
    let two_r = 2.0 * strip.width();
    if !(t >= big_t - two_r && t <= big_t + two_r) {
        return Err(Error::Domain("t must lie in [T - 2R, T + 2R]"));
    }
    Ok(())
}

/// Piecewise upper envelope for `|L(sigma + it)|` with `t` in `[T - 2R, T + 2R]`.
pub fn envelope_l(
    data: &LFunctionData,
    strip: &StripParams,
    sigma: f64,
    t: f64,
    big_t: f64,
) -> Result<f64> {
    check_window(data, strip, t, big_t)?;
    if sigma >= 3.0 {
        Ok(absolute_bound(data))
    } else if sigma <= -2.0 {
        let log_delta = log_delta_main(data, sigma, t)?;
        let remainder = v_bound(data, sigma, t)?;
        Ok(absolute_bound(data) * (log_delta + remainder).exp())
    } else {
        middle_band_envelope(data, strip, sigma, t, big_t)
    }
}
