//! Dirichlet-series tail sums and the choice of the abscissae `a` and `b`.

use crate::error::{Error, Result};

/// Target accuracy of [`tail_sum`].
pub const TAIL_TOLERANCE: f64 = 1e-12;

const MIN_CUTOFF: u64 = 1 << 10;
const MAX_CUTOFF: u64 = 1 << 22;
const SEARCH_LIMIT: i64 = 100_000;

/// Upper bound for `sum_{n>=2} a1 n^{-x}`, accurate to [`TAIL_TOLERANCE`].
///
/// Terms `2..M` are summed directly (smallest first). The remainder
/// `sum_{n>=M} n^{-x}` is replaced by its Euler–Maclaurin expansion truncated
/// after the `B_2` term; for `t^{-x}` the first omitted term is negative, so
/// the truncation over-approximates and the overshoot is at most
/// `x(x+1)(x+2) M^{-x-3} / 720`.
pub fn tail_sum(x: f64, a1: f64) -> Result<f64> {
    if x.is_nan() || x <= 1.0 {
        return Err(Error::Divergent { exponent: x });
    }
    if a1 == 0.0 {
        return Ok(0.0);
    }
    let overshoot = |m: f64| a1.abs() * x * (x + 1.0) * (x + 2.0) * m.powf(-x - 3.0) / 720.0;
    let mut cutoff = MIN_CUTOFF;
    while cutoff < MAX_CUTOFF && overshoot(cutoff as f64) > 0.1 * TAIL_TOLERANCE {
        cutoff *= 2;
    }
    let m = cutoff as f64;
    let remainder = m.powf(1.0 - x) / (x - 1.0) + 0.5 * m.powf(-x) + x * m.powf(-x - 1.0) / 12.0;
    let partial: f64 = (2..cutoff).rev().map(|n| (n as f64).powf(-x)).sum();
    Ok(a1 * (partial + remainder))
}

/// The abscissae `a > 2`, `b < -3` bounding the integration rectangle.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StripParams {
    a: f64,
    b: f64,
}

impl StripParams {
    /// Validates user-supplied abscissae against both tail conditions.
    pub fn new(a1: f64, a: f64, b: f64) -> Result<Self> {
        if !(a > 2.0) {
            return Err(Error::InvalidStrip {
                condition: "a > 2",
                value: a,
            });
        }
        if !(b < -3.0) {
            return Err(Error::InvalidStrip {
                condition: "b < -3",
                value: b,
            });
        }
        let right = tail_sum(a, a1)?;
        if !(right < 0.5) {
            return Err(Error::InvalidStrip {
                condition: "sum_{n>=2} a1 n^-a < 1/2",
                value: right,
            });
        }
        let left = tail_sum(-b - 1.0, a1)?;
        if !(left < 1.0) {
            return Err(Error::InvalidStrip {
                condition: "sum_{n>=2} a1 n^(b+1) < 1",
                value: left,
            });
        }
        Ok(Self { a, b })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// Width `R = a - b`.
    pub fn width(&self) -> f64 {
        self.a - self.b
    }
}

/// Smallest integer `a > 2` and largest integer `b < -3` meeting the tail
/// conditions for the given Ramanujan constant.
pub fn select_strip(a1: f64) -> Result<StripParams> {
    if !(a1.is_finite() && a1 >= 1.0) {
        return Err(Error::InvalidData("a1 must be a real number >= 1"));
    }
    let a = (3..SEARCH_LIMIT)
        .map(|a| a as f64)
        .find(|&a| matches!(tail_sum(a, a1), Ok(s) if s < 0.5))
        .ok_or(Error::StripSearchExhausted { a1 })?;
    let b = (4..SEARCH_LIMIT)
        .map(|n| -(n as f64))
        .find(|&b| matches!(tail_sum(-b - 1.0, a1), Ok(s) if s < 1.0))
        .ok_or(Error::StripSearchExhausted { a1 })?;
    Ok(StripParams { a, b })
}

#[cfg(test)]
mod tests {
    use super::*;

    // zeta(3) - 1 and zeta(2) - 1 to 16 digits.
    const ZETA3_TAIL: f64 = 0.202_056_903_159_594_3;
    const ZETA2_TAIL: f64 = 0.644_934_066_848_226_4;
    const ZETA4_TAIL: f64 = 0.082_323_233_711_138_19;

    #[test]
    fn known_tails() {
        let t3 = tail_sum(3.0, 1.0).unwrap();
        let t2 = tail_sum(2.0, 1.0).unwrap();
        assert!((t3 - ZETA3_TAIL).abs() < 1e-12, "{t3}");
        assert!((t2 - ZETA2_TAIL).abs() < 1e-12, "{t2}");
        assert!(t3 >= ZETA3_TAIL - 1e-15 && t2 >= ZETA2_TAIL - 1e-15);
        assert!((tail_sum(4.0, 3.0).unwrap() - 3.0 * ZETA4_TAIL).abs() < 1e-12);
        assert_eq!(tail_sum(3.0, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn divergent_exponent() {
        assert_eq!(tail_sum(1.0, 1.0), Err(Error::Divergent { exponent: 1.0 }));
        assert!(tail_sum(0.5, 1.0).is_err());
        assert!(tail_sum(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn default_strip() {
        let s = select_strip(1.0).unwrap();
        assert_eq!((s.a(), s.b(), s.width()), (3.0, -4.0, 7.0));
    }

    #[test]
    fn larger_ramanujan_constants() {
        // 3(zeta(3)-1) ~ 0.606 fails the right condition, 3(zeta(4)-1) ~ 0.247 passes.
        assert_eq!(select_strip(3.0).unwrap().a(), 4.0);
        // 5(zeta(3)-1) ~ 1.01 fails the left condition, 5(zeta(4)-1) ~ 0.412 passes.
        assert_eq!(select_strip(5.0).unwrap().b(), -5.0);
    }

    #[test]
    fn overrides() {
        assert!(StripParams::new(1.0, 3.5, -4.5).is_ok());
        match StripParams::new(1.0, 2.0, -4.0) {
            Err(Error::InvalidStrip { condition, .. }) => assert_eq!(condition, "a > 2"),
            other => panic!("{other:?}"),
        }
        match StripParams::new(1.0, 2.1, -4.0) {
            Err(Error::InvalidStrip { condition, .. }) => {
                assert_eq!(condition, "sum_{n>=2} a1 n^-a < 1/2")
            }
            other => panic!("{other:?}"),
        }
        match StripParams::new(5.0, 4.0, -4.0) {
            Err(Error::InvalidStrip { condition, .. }) => {
                assert_eq!(condition, "sum_{n>=2} a1 n^(b+1) < 1")
            }
            other => panic!("{other:?}"),
        }
        assert!(StripParams::new(1.0, 3.0, -3.0).is_err());
    }

    #[test]
    fn selected_strip_satisfies_conditions() {
        for a1 in [1.0, 1.5, 2.0, 3.0, 7.5, 40.0, 1000.0] {
            let s = select_strip(a1).unwrap();
            assert!(tail_sum(s.a(), a1).unwrap() < 0.5);
            assert!(tail_sum(-s.b() - 1.0, a1).unwrap() < 1.0);
            assert!(s.width() > 5.0);
            assert!(StripParams::new(a1, s.a(), s.b()).is_ok());
        }
    }
}
