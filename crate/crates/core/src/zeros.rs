//! Zero ordinate lists and the comparison of observed counts with the bounds.

use alloc::string::String;
use alloc::vec::Vec;

use crate::admissible::check_admissible;
use crate::bounds::{c_main, r_total};
use crate::data::{main_term, LFunctionData};
use crate::error::{Error, Result};
use crate::strip::StripParams;

/// Positive zero ordinates in ascending order, repeated by multiplicity.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroList {
    ordinates: Vec<f64>,
    label: String,
}

impl ZeroList {
    pub fn new(mut ordinates: Vec<f64>, label: impl Into<String>) -> Result<Self> {
        if let Some((index, &value)) = ordinates
            .iter()
            .enumerate()
            .find(|(_, v)| !(v.is_finite() && **v > 0.0))
        {
            return Err(Error::InvalidOrdinate { index, value });
        }
        ordinates.sort_by(f64::total_cmp);
        Ok(Self {
            ordinates,
            label: label.into(),
        })
    }

    pub fn ordinates(&self) -> &[f64] {
        &self.ordinates
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn len(&self) -> usize {
        self.ordinates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ordinates.is_empty()
    }

    /// Number of ordinates `gamma` with `t0 < gamma <= t`.
    pub fn count_window(&self, t0: f64, t: f64) -> Result<usize> {
        if !(t > t0) {
            return Err(Error::Domain("count window requires T > T0"));
        }
        let upto = |x: f64| self.ordinates.partition_point(|&g| g <= x);
        Ok(upto(t) - upto(t0))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerificationReport {
    pub count: usize,
    pub main_term: f64,
    pub deviation: f64,
    pub r_total: f64,
    pub coeff_bound: f64,
    /// `deviation < r_total`
    pub pass_lemma: bool,
    /// `deviation < c1 log T + c2(T0) + c3(T0)/T`
    pub pass_theorem: bool,
}

pub fn check_bound(
    data: &LFunctionData,
    strip: &StripParams,
    zeros: &ZeroList,
    t0: f64,
    t: f64,
) -> Result<VerificationReport> {
    check_admissible(data, strip, t0)?;
    let count = zeros.count_window(t0, t)?;
    let main = main_term(data, t)?;
    let deviation = (count as f64 - main).abs();
    let r = r_total(data, strip, t0, t)?;
    let coeff_bound = c_main(data, strip, t0)?.at(t);
    Ok(VerificationReport {
        count,
        main_term: main,
        deviation,
        r_total: r,
        coeff_bound,
        pass_lemma: deviation < r,
        pass_theorem: deviation < coeff_bound,
    })
}
