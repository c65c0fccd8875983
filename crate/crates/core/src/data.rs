//! The functional-equation datum of an L-function and the invariants derived
//! from it.

use alloc::vec::Vec;
use core::f64::consts::{E, PI};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Allowed deviation of `|omega|` from 1.
pub const OMEGA_TOLERANCE: f64 = 1e-12;

/// One gamma factor `Gamma(lambda * s + mu)` of the completed L-function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaFactor {
    lambda: f64,
    mu: Complex64,
}

impl GammaFactor {
    pub fn new(lambda: f64, mu: Complex64) -> Result<Self> {
        if !(lambda.is_finite() && lambda > 0.0) {
            return Err(Error::InvalidFactor("lambda must be a positive real"));
        }
        if !(mu.re.is_finite() && mu.im.is_finite()) {
            return Err(Error::InvalidFactor("mu must be finite"));
        }
        if mu.re < 0.0 {
            return Err(Error::InvalidFactor("mu must have nonnegative real part"));
        }
        Ok(Self { lambda, mu })
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn mu(&self) -> Complex64 {
        self.mu
    }

    /// `lambda + conj(mu)`, the shift appearing in the reflected factor.
    pub fn reflected_shift(&self) -> Complex64 {
        self.mu.conj() + self.lambda
    }

    /// `|l+m̄|² + 2|(l+m̄)(l+m̄−½)| + |m|² + 2|m(m−½)|`, the numerator shared by
    /// every gamma-ratio remainder bound.
    pub fn remainder_numerator(&self) -> f64 {
        let c = self.reflected_shift();
        let mu = self.mu;
        c.norm_sqr() + 2.0 * (c * (c - 0.5)).norm() + mu.norm_sqr() + 2.0 * (mu * (mu - 0.5)).norm()
    }
}

/// Functional-equation datum `(factors, Q, omega, k, a1)`.
#[derive(Debug, Clone, PartialEq)]
pub struct LFunctionData {
    factors: Vec<GammaFactor>,
    q: f64,
    omega: Complex64,
    pole_order: u32,
    a1: f64,
}

impl LFunctionData {
    pub fn new(
        factors: Vec<GammaFactor>,
        q: f64,
        omega: Complex64,
        pole_order: u32,
        a1: f64,
    ) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidData("at least one gamma factor is required"));
        }
        if !(q.is_finite() && q > 0.0) {
            return Err(Error::InvalidData("Q must be a positive real"));
        }
        if !((omega.norm() - 1.0).abs() <= OMEGA_TOLERANCE) {
            return Err(Error::InvalidData("omega must have modulus 1"));
        }
        if !(a1.is_finite() && a1 >= 1.0) {
            return Err(Error::InvalidData("a1 must be a real number >= 1"));
        }
        let degree: f64 = 2.0 * factors.iter().map(GammaFactor::lambda).sum::<f64>();
        if degree < 1.0 {
            return Err(Error::InvalidData(
                "degree 2*sum(lambda_j) must be at least 1",
            ));
        }
        Ok(Self {
            factors,
            q,
            omega,
            pole_order,
            a1,
        })
    }

    pub fn factors(&self) -> &[GammaFactor] {
        &self.factors
    }

    pub fn factor(&self, index: usize) -> Result<&GammaFactor> {
        self.factors.get(index).ok_or(Error::FactorIndex {
            index,
            len: self.factors.len(),
        })
    }

    pub fn q(&self) -> f64 {
        self.q
    }

    pub fn omega(&self) -> Complex64 {
        self.omega
    }

    pub fn pole_order(&self) -> u32 {
        self.pole_order
    }

    pub fn a1(&self) -> f64 {
        self.a1
    }

    /// Number of gamma factors `f`.
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Degree `d = 2 * sum(lambda_j)`.
    pub fn degree(&self) -> f64 {
        2.0 * self.factors.iter().map(GammaFactor::lambda).sum::<f64>()
    }

    /// `lambda = prod(lambda_j^(2 lambda_j))`.
    pub fn lambda_product(&self) -> f64 {
        self.factors
            .iter()
            .map(|g| g.lambda.powf(2.0 * g.lambda))
            .product()
    }

    /// `lambda * Q^2`, the conductor-like quantity of the main term.
    pub fn lambda_q2(&self) -> f64 {
        self.lambda_product() * self.q * self.q
    }

    /// `mu = 4 * sum(1/2 - mu_j)`.
    pub fn mu_sum(&self) -> Complex64 {
        self.factors
            .iter()
            .map(|g| Complex64::new(0.5, 0.0) - g.mu)
            .sum::<Complex64>()
            * 4.0
    }

    /// `max_j 2|lambda_j + conj(mu_j)| / lambda_j`.
    pub fn reflected_threshold(&self) -> f64 {
        self.factors
            .iter()
            .map(|g| 2.0 * g.reflected_shift().norm() / g.lambda)
            .fold(0.0, f64::max)
    }

    /// `max_j 2|mu_j| / lambda_j`.
    pub fn shift_threshold(&self) -> f64 {
        self.factors
            .iter()
            .map(|g| 2.0 * g.mu.norm() / g.lambda)
            .fold(0.0, f64::max)
    }

    /// The larger of the two thresholds; the imaginary offset used in every
    /// secant estimate.
    pub fn height_threshold(&self) -> f64 {
        self.reflected_threshold().max(self.shift_threshold())
    }

    pub fn max_lambda(&self) -> f64 {
        self.factors
            .iter()
            .map(|g| g.lambda)
            .fold(f64::MIN, f64::max)
    }

    pub fn min_lambda(&self) -> f64 {
        self.factors
            .iter()
            .map(|g| g.lambda)
            .fold(f64::MAX, f64::min)
    }

    pub fn max_re_mu(&self) -> f64 {
        self.factors
            .iter()
            .map(|g| g.mu.re)
            .fold(f64::MIN, f64::max)
    }

    pub fn min_re_mu(&self) -> f64 {
        self.factors
            .iter()
            .map(|g| g.mu.re)
            .fold(f64::MAX, f64::min)
    }
}

/// Invariants computed from an [`LFunctionData`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedQuantities {
    pub degree: f64,
    pub lambda: f64,
    pub v: f64,
    pub u: Complex64,
    pub mu: Complex64,
}

pub fn derive_quantities(data: &LFunctionData) -> DerivedQuantities {
    let v = data.factors.iter().map(|g| g.lambda * g.lambda.ln()).sum();
    let u = data
        .factors
        .iter()
        .map(|g| (g.mu.conj() - 0.5) * g.lambda.ln())
        .sum();
    DerivedQuantities {
        degree: data.degree(),
        lambda: data.lambda_product(),
        v,
        u,
        mu: data.mu_sum(),
    }
}

/// Riemann–von Mangoldt main term `(d/2π) T log(T/e) + (T/2π) log(λQ²)`.
pub fn main_term(data: &LFunctionData, t: f64) -> Result<f64> {
    if !(t.is_finite() && t > 0.0) {
        return Err(Error::Domain("main term requires T > 0"));
    }
    let d = data.degree();
    Ok(d / (2.0 * PI) * t * (t / E).ln() + t / (2.0 * PI) * data.lambda_q2().ln())
}
