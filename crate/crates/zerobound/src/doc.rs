//! JSON interchange documents and output rounding.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use zerobound_core::bounds::{BoundReport, Coefficients};
use zerobound_core::{
    select_strip, GammaFactor, LFunctionData, NewformSpec, StripParams, VerificationReport,
};

use crate::error::Result;

/// Significant digits used when no override is set.
pub const DEFAULT_PRECISION: usize = 12;

/// Environment variable overriding the printed significant digits.
pub const PRECISION_ENV: &str = "ZEROBOUND_PRECISION";

/// Rounds printed values to a fixed number of significant digits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rounding {
    digits: usize,
}

impl Rounding {
    pub fn new(digits: usize) -> Self {
        Self {
            digits: digits.clamp(1, 17),
        }
    }

    /// Reads [`PRECISION_ENV`], falling back to [`DEFAULT_PRECISION`] when it
    /// is unset or not a positive integer.
    pub fn from_env() -> Self {
        let digits = std::env::var(PRECISION_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&d| d > 0)
            .unwrap_or(DEFAULT_PRECISION);
        Self::new(digits)
    }

    pub fn digits(&self) -> usize {
        self.digits
    }

    pub fn apply(&self, x: f64) -> f64 {
        if !x.is_finite() || x == 0.0 {
            return x;
        }
        format!("{:.*e}", self.digits - 1, x)
            .parse()
            .expect("formatted float parses")
    }
}

impl Default for Rounding {
    fn default() -> Self {
        Self::new(DEFAULT_PRECISION)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorDoc {
    pub lambda: f64,
    pub mu_re: f64,
    pub mu_im: f64,
}

/// The serialized form of [`LFunctionData`] with optional strip overrides.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DataDoc {
    pub factors: Vec<FactorDoc>,
    #[serde(rename = "Q")]
    pub q: f64,
    pub omega_re: f64,
    pub omega_im: f64,
    pub k: u32,
    pub a1: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<f64>,
}

impl DataDoc {
    pub fn from_data(data: &LFunctionData) -> Self {
        Self {
            factors: data
                .factors()
                .iter()
                .map(|g| FactorDoc {
                    lambda: g.lambda(),
                    mu_re: g.mu().re,
                    mu_im: g.mu().im,
                })
                .collect(),
            q: data.q(),
            omega_re: data.omega().re,
            omega_im: data.omega().im,
            k: data.pole_order(),
            a1: data.a1(),
            a: None,
            b: None,
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_data(&self) -> Result<LFunctionData> {
        let factors = self
            .factors
            .iter()
            .map(|f| GammaFactor::new(f.lambda, Complex64::new(f.mu_re, f.mu_im)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LFunctionData::new(
            factors,
            self.q,
            Complex64::new(self.omega_re, self.omega_im),
            self.k,
            self.a1,
        )?)
    }

    /// The automatic strip, with `a` and `b` replaced by any overrides.
    pub fn to_strip(&self) -> Result<StripParams> {
        let auto = select_strip(self.a1)?;
        if self.a.is_none() && self.b.is_none() {
            return Ok(auto);
        }
        Ok(StripParams::new(
            self.a1,
            self.a.unwrap_or(auto.a()),
            self.b.unwrap_or(auto.b()),
        )?)
    }

    fn rounded(&self, r: Rounding) -> Self {
        Self {
            factors: self
                .factors
                .iter()
                .map(|f| FactorDoc {
                    lambda: r.apply(f.lambda),
                    mu_re: r.apply(f.mu_re),
                    mu_im: r.apply(f.mu_im),
                })
                .collect(),
            q: r.apply(self.q),
            omega_re: r.apply(self.omega_re),
            omega_im: r.apply(self.omega_im),
            k: self.k,
            a1: r.apply(self.a1),
            a: self.a.map(|v| r.apply(v)),
            b: self.b.map(|v| r.apply(v)),
        }
    }
}

/// Named parameter sets available on the command line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Preset {
    Newform(NewformSpec),
    Zeta,
}

impl Preset {
    pub fn data(&self) -> LFunctionData {
        match self {
            Preset::Newform(spec) => zerobound_core::newform::newform_params(spec),
            Preset::Zeta => zeta_data(),
        }
    }
}

/// `Gamma(s/2)`, `Q = pi^{-1/2}`, simple pole at `s = 1`.
pub fn zeta_data() -> LFunctionData {
    let g = GammaFactor::new(0.5, Complex64::new(0.0, 0.0)).expect("valid factor");
    LFunctionData::new(vec![g], PI.sqrt().recip(), Complex64::new(1.0, 0.0), 1, 1.0)
        .expect("valid datum")
}

pub fn data_json(doc: &DataDoc, r: Rounding) -> Result<String> {
    Ok(serde_json::to_string_pretty(&doc.rounded(r))?)
}

#[derive(Serialize)]
struct StripOut {
    a: f64,
    b: f64,
    #[serde(rename = "R")]
    r: f64,
}

#[derive(Serialize)]
struct AdmissibilityOut {
    t0_min: f64,
    binding: String,
    strict_adjusted: bool,
}

#[derive(Serialize)]
struct ReportOut {
    input: DataDoc,
    strip: StripOut,
    admissibility: AdmissibilityOut,
    #[serde(rename = "T0")]
    t0: f64,
    #[serde(rename = "T")]
    t: f64,
    #[serde(rename = "S")]
    s: f64,
    #[serde(rename = "R1")]
    r1: f64,
    #[serde(rename = "V_star_T0")]
    v_star_t0: f64,
    #[serde(rename = "V_star_T")]
    v_star_t: f64,
    #[serde(rename = "R2_T0")]
    r2_t0: f64,
    #[serde(rename = "R2_T")]
    r2_t: f64,
    alpha: u8,
    h1: f64,
    h2: f64,
    #[serde(rename = "R_total")]
    r_total: f64,
    c1_main: f64,
    c2_main: f64,
    c3_main: f64,
    c1_dbl: f64,
    c2_dbl: f64,
    c3_dbl: f64,
}

pub fn report_json(
    input: &DataDoc,
    strip: &StripParams,
    rep: &BoundReport,
    r: Rounding,
) -> Result<String> {
    let out = ReportOut {
        input: input.rounded(r),
        strip: StripOut {
            a: strip.a(),
            b: strip.b(),
            r: strip.width(),
        },
        admissibility: AdmissibilityOut {
            t0_min: r.apply(rep.admissibility.t0_min),
            binding: rep.admissibility.binding.to_string(),
            strict_adjusted: rep.admissibility.strict_adjusted,
        },
        t0: r.apply(rep.t0),
        t: r.apply(rep.t),
        s: r.apply(rep.s),
        r1: r.apply(rep.r1),
        v_star_t0: r.apply(rep.v_star_t0),
        v_star_t: r.apply(rep.v_star_t),
        r2_t0: r.apply(rep.r2_t0),
        r2_t: r.apply(rep.r2_t),
        alpha: rep.alpha,
        h1: r.apply(rep.h1),
        h2: r.apply(rep.h2),
        r_total: r.apply(rep.r_total),
        c1_main: r.apply(rep.main.c1),
        c2_main: r.apply(rep.main.c2),
        c3_main: r.apply(rep.main.c3),
        c1_dbl: r.apply(rep.doubling.c1),
        c2_dbl: r.apply(rep.doubling.c2),
        c3_dbl: r.apply(rep.doubling.c3),
    };
    Ok(serde_json::to_string_pretty(&out)?)
}

#[derive(Serialize)]
struct BoundOut {
    #[serde(rename = "T0")]
    t0: f64,
    #[serde(rename = "T")]
    t: f64,
    #[serde(rename = "R_total")]
    r_total: f64,
    c1: f64,
    c2: f64,
    c3: f64,
    coeff_bound: f64,
}

pub fn bound_json(t0: f64, t: f64, r_total: f64, c: &Coefficients, r: Rounding) -> Result<String> {
    let out = BoundOut {
        t0: r.apply(t0),
        t: r.apply(t),
        r_total: r.apply(r_total),
        c1: r.apply(c.c1),
        c2: r.apply(c.c2),
        c3: r.apply(c.c3),
        coeff_bound: r.apply(c.at(t)),
    };
    Ok(serde_json::to_string_pretty(&out)?)
}

#[derive(Serialize)]
struct VerificationOut {
    count: usize,
    main_term: f64,
    deviation: f64,
    r_total: f64,
    coeff_bound: f64,
    pass_lemma: bool,
    pass_theorem: bool,
}

pub fn verification_json(rep: &VerificationReport, r: Rounding) -> Result<String> {
    let out = VerificationOut {
        count: rep.count,
        main_term: r.apply(rep.main_term),
        deviation: r.apply(rep.deviation),
        r_total: r.apply(rep.r_total),
        coeff_bound: r.apply(rep.coeff_bound),
        pass_lemma: rep.pass_lemma,
        pass_theorem: rep.pass_theorem,
    };
    Ok(serde_json::to_string_pretty(&out)?)
}
