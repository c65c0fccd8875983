//! Assembly of the explicit error-term constants.
//!
//! `r1` bounds the horizontal-integral difference, `r2` and `i3_bound` the
//! argument integrals along a horizontal segment, and `r_total` the full
//! zero-count error `R_L(T0, T)`. [`c_main`] splits `R_L` into
//! `c1 log T + c2(T0) + c3(T0)/T`; [`c_doubling`] does the same for the window
//! `(T, 2T]`.

use core::f64::consts::{E, LN_2, PI};

use num_complex::Complex64;

use crate::admissible::{check_admissible, min_admissible_t0, Admissibility};
use crate::data::LFunctionData;
use crate::error::{Error, Result};
use crate::gamma::{absolute_bound, secant_block, v_star, B2};
use crate::strip::StripParams;

/// `sum_j S_j` per unit of `log(T/T0)`.
fn s_rate(data: &LFunctionData, strip: &StripParams) -> Result<f64> {
    let b = strip.b();
    let mut total = 0.0;
    for g in data.factors() {
        let near = secant_block(data, g.lambda(), -b)?;
        let far = secant_block(data, g.lambda(), -b - 1.0)?;
        total += 2.0 / g.lambda() * (g.remainder_numerator() + B2 / 4.0 * near + B2 / 4.0 * far);
    }
    Ok(total)
}

/// `S(T0, T, b)`, the integrated gamma-ratio remainder along `sigma = b, b+1`.
pub fn s_total(data: &LFunctionData, strip: &StripParams, t0: f64, t: f64) -> Result<f64> {
    if !(t0 > 0.0) {
        return Err(Error::Domain("S requires T0 > 0"));
    }
    if !(t >= t0) {
        return Err(Error::Domain("S requires T >= T0"));
    }
    Ok((t / t0).ln() * s_rate(data, strip)?)
}

/// Coefficient of `log(T/T0)` in `R1` excluding `S`:
/// `-(7/2) d (2b + 1) + 2|-d b + Im(mu) i/2| + 2d`.
fn r1_log_coefficient(data: &LFunctionData, strip: &StripParams) -> f64 {
    let d = data.degree();
    let b = strip.b();
    let im_mu = data.mu_sum().im;
    -3.5 * d * (2.0 * b + 1.0) + 2.0 * Complex64::new(-d * b, im_mu / 2.0).norm() + 2.0 * d
}

/// `R1(T0, T, b)`. Evaluated literally for any `T > 0`, including `T < T0`.
pub fn r1(data: &LFunctionData, strip: &StripParams, t0: f64, t: f64) -> Result<f64> {
    if !(t0 > 0.0) {
        return Err(Error::Domain("R1 requires T0 > 0"));
    }
    if !(t > 0.0) {
        return Err(Error::Domain("R1 requires T > 0"));
    }
    let d = data.degree();
    let b = strip.b();
    let log_ratio = (t / t0).ln();
    Ok(
        log_ratio * (r1_log_coefficient(data, strip) + s_rate(data, strip)?)
            + 3.0 * d * (b * b + b) / t0,
    )
}

/// `pi^2 / (3 log 2)`, bounding each vertical-line integral left of the strip.
pub fn i2_bound() -> f64 {
    PI * PI / (3.0 * LN_2)
}

/// `1/2 - a + 2R`, the exponent offset of the Jensen-disc growth.
fn disc_exponent(strip: &StripParams) -> f64 {
    0.5 - strip.a() + 2.0 * strip.width()
}

/// `max{5/2 log|lambda Q^2|, (1/2 - a + 2R) log|lambda Q^2|}`.
fn conductor_max(data: &LFunctionData, strip: &StripParams) -> f64 {
    let log_c = data.lambda_q2().abs().ln();
    (2.5 * log_c).max(disc_exponent(strip) * log_c)
}

/// `(5d/2 + 1) log 2 + k log 3 + max{0, 5/2 log|lambda Q^2| + 5 sqrt5/2 d + |Im mu|}`.
fn convexity_branch(data: &LFunctionData) -> f64 {
    let d = data.degree();
    let log_c = data.lambda_q2().abs().ln();
    (2.5 * d + 1.0) * LN_2
        + data.pole_order() as f64 * 3f64.ln()
        + (2.5 * log_c + 2.5 * 5f64.sqrt() * d + data.mu_sum().im.abs()).max(0.0)
}

/// `R2(T)`, the Jensen-formula bound on the zeros of `Re L(z + iT)` in the disc.
pub fn r2(data: &LFunctionData, strip: &StripParams, t: f64) -> Result<f64> {
    check_admissible(data, strip, t)?;
    let d = data.degree();
    let a = strip.a();
    let two_r = 2.0 * strip.width();
    let exponent = disc_exponent(strip);
    let reach = a + two_r;
    let half_im = data.mu_sum().im.abs() / 2.0;
    let reflected = conductor_max(data, strip) - 2.0 * d
        + Complex64::new(1.0, -reach / (t - two_r)).norm() * d * exponent
        + d * reach
        + reach / (t - two_r) * half_im;
    let branch = reflected.max(convexity_branch(data));
    Ok((d * exponent * (2.0 * t).ln()
        + absolute_bound(data).ln()
        + v_star(data, strip, t)?
        + branch)
        / LN_2)
}

/// `pi R (R2(T) + 2)`, bounding `|I3(T, a, b)|` and `|I3(T, a, b + 1)|`.
pub fn i3_bound(data: &LFunctionData, strip: &StripParams, t: f64) -> Result<f64> {
    Ok(PI * strip.width() * (r2(data, strip, t)? + 2.0))
}

/// Bound on the trivial and stray zeros with `b < Re(rho) < 0` in the window.
pub fn trivial_zero_window(data: &LFunctionData, strip: &StripParams) -> f64 {
    let b = strip.b();
    let (lmax, lmin) = (data.max_lambda(), data.min_lambda());
    let (mmin, mmax) = (data.min_re_mu(), data.max_re_mu());
    data.len() as f64
        * (((b + 1.0) * lmax + mmin).abs() - b * lmax + (b + 1.0) * lmin - mmin + mmax)
}

/// The `alpha`-selected pair `(h1, h2)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaChoice {
    pub alpha: u8,
    pub h1: f64,
    pub h2: f64,
}

fn h_pair(data: &LFunctionData, strip: &StripParams, alpha: u8) -> (f64, f64) {
    let d = data.degree();
    let reach = strip.a() + 2.0 * strip.width();
    if alpha == 0 {
        let h1 = conductor_max(data, strip) + d * (-1.5 + 4.0 * strip.width());
        let h2 = d * disc_exponent(strip) * reach + reach * (data.mu_sum().im / 2.0).abs();
        (h1, h2)
    } else {
        (convexity_branch(data), 0.0)
    }
}

/// Selects `alpha = 0` only when `h1 + h2/(T0 - 2R)` is strictly larger there.
pub fn h_alpha(data: &LFunctionData, strip: &StripParams, t0: f64) -> Result<AlphaChoice> {
    let gap = t0 - 2.0 * strip.width();
    if !(gap > 0.0) {
        return Err(Error::Domain("alpha selection requires T0 > 2R"));
    }
    let (h1_0, h2_0) = h_pair(data, strip, 0);
    let (h1_1, h2_1) = h_pair(data, strip, 1);
    Ok(if h1_0 + h2_0 / gap > h1_1 + h2_1 / gap {
        AlphaChoice {
            alpha: 0,
            h1: h1_0,
            h2: h2_0,
        }
    } else {
        AlphaChoice {
            alpha: 1,
            h1: h1_1,
            h2: h2_1,
        }
    })
}

fn check_window(data: &LFunctionData, strip: &StripParams, t0: f64, t: f64) -> Result<()> {
    check_admissible(data, strip, t0)?;
    if !(t > t0) {
        return Err(Error::Domain("requires T > T0"));
    }
    Ok(())
}

/// `(d/2pi) T0 log(T0/e) + (T0/2pi) |log(lambda Q^2)|`.
fn height_offset(data: &LFunctionData, t0: f64) -> f64 {
    data.degree() / (2.0 * PI) * t0 * (t0 / E).ln() + t0 / (2.0 * PI) * data.lambda_q2().ln().abs()
}

/// `R_L(T0, T)`, the total bound on `|N(T0, T) - main_term(T)|`.
pub fn r_total(data: &LFunctionData, strip: &StripParams, t0: f64, t: f64) -> Result<f64> {
    check_window(data, strip, t0, t)?;
    let r = strip.width();
    Ok(height_offset(data, t0)
        + r1(data, strip, t0, t)? / (2.0 * PI)
        + PI / (3.0 * LN_2)
        + (r - 0.5) * (r2(data, strip, t0)? + r2(data, strip, t)? + 4.0)
        + trivial_zero_window(data, strip))
}

/// Coefficients of a bound `c1 log T + c2 + c3 / T`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Coefficients {
    pub c1: f64,
    pub c2: f64,
    pub c3: f64,
}

impl Coefficients {
    pub fn at(&self, t: f64) -> f64 {
        self.c1 * t.ln() + self.c2 + self.c3 / t
    }
}

/// `c_{L,1}`, `c_{L,2}(T0)`, `c_{L,3}(T0)` dominating `R_L(T0, T)` for all `T > T0`.
pub fn c_main(data: &LFunctionData, strip: &StripParams, t0: f64) -> Result<Coefficients> {
    check_admissible(data, strip, t0)?;
    let d = data.degree();
    let b = strip.b();
    let r = strip.width();
    let exponent = disc_exponent(strip);
    let choice = h_alpha(data, strip, t0)?;

    let c1 = (r1_log_coefficient(data, strip) + s_rate(data, strip)?) / (2.0 * PI)
        + (r - 0.5) * d * exponent / LN_2;
    let c2 = height_offset(data, t0) + PI / (3.0 * LN_2) + 4.0 * r - 2.0
        + 3.0 * d * (b * b + b) / (2.0 * PI * t0)
        + trivial_zero_window(data, strip)
        + r1(data, strip, t0, 1.0)? / (2.0 * PI)
        + (r - 0.5) * (r2(data, strip, t0)? + d * exponent)
        + (r - 0.5) * (absolute_bound(data).ln() + choice.h1) / LN_2;
    let c3 =
        (r - 0.5) / LN_2 * t0 / (t0 - 2.0 * r) * (v_star(data, strip, 2.0 * r + 1.0)? + choice.h2);
    Ok(Coefficients { c1, c2, c3 })
}

/// Coefficients for the window `(T, 2T]` with `T >= T0`.
///
/// The `1/T` coefficient collects `V*` and `h2` from `R2(T) + R2(2T)`, whose
/// `T`-dependence `(3T - 4R) / (2(T - 2R)(T - R))` is dominated by its value
/// at `T0` times `T0/T`.
pub fn c_doubling(data: &LFunctionData, strip: &StripParams, t0: f64) -> Result<Coefficients> {
    check_admissible(data, strip, t0)?;
    let d = data.degree();
    let b = strip.b();
    let r = strip.width();
    let exponent = disc_exponent(strip);
    let choice = h_alpha(data, strip, t0)?;

    let c1 = d / LN_2 * (2.0 * r - 1.0) * exponent;
    let c2 = LN_2 / (2.0 * PI) * r1_log_coefficient(data, strip)
        + LN_2 * s_rate(data, strip)? / (2.0 * PI)
        + 2.0 * PI / (3.0 * LN_2)
        + 4.0 * r
        - 2.0
        + (2.0 * r - 1.0) * (3.0 * d * exponent + (absolute_bound(data).ln() + choice.h1) / LN_2);
    let growth = t0 * (3.0 * t0 - 4.0 * r) / (2.0 * (t0 - 2.0 * r) * (t0 - r));
    let c3 = 3.0 * d * (b * b + b) / (4.0 * PI)
        + (r - 0.5) / LN_2 * growth * (v_star(data, strip, t0)? + choice.h2);
    Ok(Coefficients { c1, c2, c3 })
}

/// `C_{L,2}(T0) = c_{L,2}(T0) + max{N+(T0), N-(T0)}`.
pub fn corollary_shift(c2_main: f64, n_plus_t0: u64, n_minus_t0: u64) -> f64 {
    c2_main + n_plus_t0.max(n_minus_t0) as f64
}

/// Every intermediate quantity of one `(T0, T)` evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundReport {
    pub t0: f64,
    pub t: f64,
    pub admissibility: Admissibility,
    pub s: f64,
    pub r1: f64,
    pub v_star_t0: f64,
    pub v_star_t: f64,
    pub r2_t0: f64,
    pub r2_t: f64,
    pub alpha: u8,
    pub h1: f64,
    pub h2: f64,
    pub r_total: f64,
    pub main: Coefficients,
    pub doubling: Coefficients,
}

pub fn evaluate(data: &LFunctionData, strip: &StripParams, t0: f64, t: f64) -> Result<BoundReport> {
    check_window(data, strip, t0, t)?;
    let choice = h_alpha(data, strip, t0)?;
    Ok(BoundReport {
        t0,
        t,
        admissibility: min_admissible_t0(data, strip),
        s: s_total(data, strip, t0, t)?,
        r1: r1(data, strip, t0, t)?,
        v_star_t0: v_star(data, strip, t0)?,
        v_star_t: v_star(data, strip, t)?,
        r2_t0: r2(data, strip, t0)?,
        r2_t: r2(data, strip, t)?,
        alpha: choice.alpha,
        h1: choice.h1,
        h2: choice.h2,
        r_total: r_total(data, strip, t0, t)?,
        main: c_main(data, strip, t0)?,
        doubling: c_doubling(data, strip, t0)?,
    })
}
