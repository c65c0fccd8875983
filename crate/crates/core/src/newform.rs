//! Holomorphic newforms of weight `kappa` and level `N` with trivial character.

use core::f64::consts::PI;

use alloc::vec;
use num_complex::Complex64;

use crate::bounds::{c_doubling, c_main, Coefficients};
use crate::data::{GammaFactor, LFunctionData};
use crate::error::{Error, Result};
use crate::strip::{select_strip, StripParams};

/// Minimum distance of a pre-ceiling value from an integer before its
/// ceiling is considered numerically unreliable.
pub const CEILING_GUARD: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NewformSpec {
    level: u64,
    weight: u32,
}

impl NewformSpec {
    pub fn new(level: u64, weight: u32) -> Result<Self> {
        if level == 0 {
            return Err(Error::InvalidNewform("level must be a positive integer"));
        }
        if weight < 2 || !weight.is_multiple_of(2) {
            return Err(Error::InvalidNewform("weight must be an even integer >= 2"));
        }
        Ok(Self { level, weight })
    }

    pub fn level(&self) -> u64 {
        self.level
    }

    pub fn weight(&self) -> u32 {
        self.weight
    }

    /// `15 + kappa`, the smallest admissible height.
    pub fn t0(&self) -> f64 {
        15.0 + self.weight as f64
    }
}

/// `i^kappa`, exact for even weight.
fn root_number(weight: u32) -> Complex64 {
    if weight.is_multiple_of(4) {
        Complex64::new(1.0, 0.0)
    } else {
        Complex64::new(-1.0, 0.0)
    }
}

/// One factor `Gamma(s + (kappa-1)/2)`, `Q = sqrt(N)/(2 pi)`, `omega = i^kappa`,
/// no pole, Deligne bound `a1 = 1`.
pub fn newform_params(spec: &NewformSpec) -> LFunctionData {
    let kappa = spec.weight as f64;
    let g = GammaFactor::new(1.0, Complex64::new((kappa - 1.0) / 2.0, 0.0))
        .expect("newform gamma factor is valid");
    LFunctionData::new(
        vec![g],
        (spec.level as f64).sqrt() / (2.0 * PI),
        root_number(spec.weight),
        0,
        1.0,
    )
    .expect("newform datum is valid")
}

pub fn newform_strip() -> StripParams {
    select_strip(1.0).expect("a1 = 1 has a strip")
}

/// Pre-ceiling constants of one table row.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TableRow {
    pub spec: NewformSpec,
    pub t0: f64,
    pub main: Coefficients,
    pub doubling: Coefficients,
}

impl TableRow {
    /// Values in column order `cL1, cL2, cL3, c1, c2, c3`.
    pub fn values(&self) -> [f64; 6] {
        [
            self.main.c1,
            self.main.c2,
            self.main.c3,
            self.doubling.c1,
            self.doubling.c2,
            self.doubling.c3,
        ]
    }

    /// Integer ceilings in column order, or a domain error when a value lies
    /// within [`CEILING_GUARD`] of an integer.
    pub fn ceilings(&self) -> Result<[i64; 6]> {
        let mut out = [0i64; 6];
        for (slot, v) in out.iter_mut().zip(self.values()) {
            if !v.is_finite() {
                return Err(Error::Domain("non-finite table value"));
            }
            if (v - v.round()).abs() < CEILING_GUARD {
                return Err(Error::Domain("table value too close to an integer"));
            }
            *slot = v.ceil() as i64;
        }
        Ok(out)
    }
}

pub fn table_row(spec: &NewformSpec) -> Result<TableRow> {
    let data = newform_params(spec);
    let strip = newform_strip();
    let t0 = spec.t0();
    Ok(TableRow {
        spec: *spec,
        t0,
        main: c_main(&data, &strip, t0)?,
        doubling: c_doubling(&data, &strip, t0)?,
    })
}

/// The same constants written out by hand for `lambda = 1`, `mu = (kappa-1)/2`,
/// `a = 3`, `b = -4`, `T0 = 15 + kappa`. Shares no code with [`crate::bounds`].
pub mod closed_form {
    use core::f64::consts::{E, LN_2, PI};

    use num_complex::Complex64;

    use super::NewformSpec;
    use crate::bounds::Coefficients;

    fn sec2(x: f64, kappa: f64) -> f64 {
        let half = (kappa + 1.0).atan2(x) / 2.0;
        1.0 / (half.cos() * half.cos())
    }

    fn pieces(spec: &NewformSpec) -> (f64, f64, f64, f64, f64) {
        let k = spec.weight() as f64;
        let log_c = (spec.level() as f64 / (4.0 * PI * PI)).ln();
        let sec_pair = sec2(4.0, k) + sec2(3.0, k);
        let sec_far = sec2(-17.0, k);
        (k, log_c, sec_pair, sec_far, 15.0 + k)
    }

    pub fn main(spec: &NewformSpec) -> Coefficients {
        let (k, log_c, sec_pair, sec_far, t0) = pieces(spec);
        let quad = 9.0 * k * k - 6.0 * k;
        let c1 = 299.0 / (2.0 * LN_2)
            + (3.0 * k * k - 2.0 * k + 217.0 / 3.0 + sec_pair / 12.0) / (2.0 * PI);
        let c2 = t0 / PI * (t0 / E).ln()
            + t0 / (2.0 * PI) * log_c.abs()
            + PI / (3.0 * LN_2)
            + 353.0 / 2.0
            + 36.0 / (PI * t0)
            + ((k - 7.0) / 2.0).abs()
            + 72.0 / (2.0 * PI * t0)
            - t0.ln() / (2.0 * PI) * ((quad + 217.0) / 3.0 + sec_pair / 12.0)
            + 13.0 / (12.0 * (1.0 + k) * LN_2) * (quad + 10.0 + sec_far / 2.0)
            + 299.0 / (2.0 * LN_2)
                * ((30.0 + 2.0 * k).ln() + Complex64::new(1.0, -17.0 / (k + 1.0)).norm())
            + 13.0 / (2.0 * LN_2)
                * (2.0 * (PI * PI / 6.0).ln() + 2.0 * (2.5 * log_c).max(11.5 * log_c) + 83.0);
        let c3 = 13.0 / (12.0 * LN_2) * t0 / (1.0 + k) * (quad + 2356.0 + sec_far / 2.0);
        Coefficients { c1, c2, c3 }
    }

    pub fn doubling(spec: &NewformSpec) -> Coefficients {
        let (k, log_c, sec_pair, sec_far, _) = pieces(spec);
        let quad = 9.0 * k * k - 6.0 * k;
        let c1 = 299.0 / LN_2;
        let c2 = 2.0 * PI / (3.0 * LN_2)
            + 923.0
            + LN_2 / (6.0 * PI) * (quad + 217.0 + sec_pair / 4.0)
            + 13.0 / LN_2 * ((PI * PI / 6.0).ln() + (2.5 * log_c).max(11.5 * log_c) + 53.0);
        let c3 = 18.0 / PI
            + 13.0 * (15.0 + k) * (17.0 + 3.0 * k) / (4.0 * (1.0 + k) * (8.0 + k) * LN_2)
                * ((quad + 10.0 + sec_far / 2.0) / (6.0 * (1.0 + k)) + 391.0);
        Coefficients { c1, c2, c3 }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(1.0)
    }

    #[test]
    fn spec_validation() {
        assert!(NewformSpec::new(0, 12).is_err());
        assert!(NewformSpec::new(11, 3).is_err());
        assert!(NewformSpec::new(11, 0).is_err());
        assert_eq!(NewformSpec::new(11, 2).unwrap().t0(), 17.0);
    }

    #[test]
    fn datum_shape() {
        let data = newform_params(&NewformSpec::new(11, 2).unwrap());
        assert_eq!(data.degree(), 2.0);
        assert_eq!(data.lambda_product(), 1.0);
        assert!((data.lambda_q2() - 11.0 / (4.0 * PI * PI)).abs() < 1e-15);
        assert_eq!(data.omega(), Complex64::new(-1.0, 0.0));
        let data = newform_params(&NewformSpec::new(1, 12).unwrap());
        assert_eq!(data.omega(), Complex64::new(1.0, 0.0));
        assert_eq!(data.mu_sum(), Complex64::new(-20.0, 0.0));
    }

    #[test]
    fn delta_row() {
        let row = table_row(&NewformSpec::new(1, 12).unwrap()).unwrap();
        assert_eq!(
            row.ceilings().unwrap(),
            [293, 1945, 11637, 432, 1811, 10506]
        );
        assert!((row.doubling.c1 - 431.37).abs() < 0.01);
    }

    #[test]
    fn routes_agree() {
        for (n, k) in [(1, 12), (11, 38), (64, 40), (40, 2), (1, 50)] {
            let spec = NewformSpec::new(n, k).unwrap();
            let row = table_row(&spec).unwrap();
            let m = closed_form::main(&spec);
            let d = closed_form::doubling(&spec);
            let hand = [m.c1, m.c2, m.c3, d.c1, d.c2, d.c3];
            for (a, b) in row.values().into_iter().zip(hand) {
                assert!(rel(a, b) < 1e-9, "{n} {k}: {a} vs {b}");
            }
        }
    }
}
