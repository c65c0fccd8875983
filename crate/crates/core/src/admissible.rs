//! Lower limits on the heights `T0`, `T` at which the convexity envelope and
//! the Jensen-disc argument are valid.

use core::fmt;

use crate::data::LFunctionData;
use crate::error::{Error, Result};
use crate::strip::StripParams;

/// Offset added when the strict constraint is the binding one.
pub const STRICT_OFFSET: f64 = 1e-9;

/// The four height constraints.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Constraint {
    /// `T >= 2R + 1`
    UnitMargin,
    /// `T >= 2R + max_j 2|lambda_j + conj(mu_j)| / lambda_j`
    ReflectedShift,
    /// `T >= 2R + 1/(2^(1/k) - 1)`, present only for `k > 0`
    PoleOrder,
    /// `T > 2R + max_j 2|mu_j| / lambda_j` (strict)
    Shift,
}

impl Constraint {
    pub fn is_strict(self) -> bool {
        matches!(self, Constraint::Shift)
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Constraint::UnitMargin => "T >= 2R + 1",
            Constraint::ReflectedShift => "T >= 2R + max_j 2|lambda_j + conj(mu_j)|/lambda_j",
            Constraint::PoleOrder => "T >= 2R + 1/(2^(1/k) - 1)",
            Constraint::Shift => "T > 2R + max_j 2|mu_j|/lambda_j",
        })
    }
}

/// Smallest admissible height together with the constraint that fixes it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Admissibility {
    pub t0_min: f64,
    pub binding: Constraint,
    /// Set when the strict constraint binds and [`STRICT_OFFSET`] was added.
    pub strict_adjusted: bool,
}

fn constraints(data: &LFunctionData, strip: &StripParams) -> [(Constraint, Option<f64>); 4] {
    let two_r = 2.0 * strip.width();
    let k = data.pole_order();
    let pole = (k > 0).then(|| two_r + 1.0 / (2f64.powf(1.0 / k as f64) - 1.0));
    [
        (Constraint::UnitMargin, Some(two_r + 1.0)),
        (
            Constraint::ReflectedShift,
            Some(two_r + data.reflected_threshold()),
        ),
        (Constraint::PoleOrder, pole),
        (Constraint::Shift, Some(two_r + data.shift_threshold())),
    ]
}

pub fn min_admissible_t0(data: &LFunctionData, strip: &StripParams) -> Admissibility {
    let mut best = (Constraint::UnitMargin, f64::MIN);
    let mut strict = f64::MIN;
    for (constraint, bound) in constraints(data, strip) {
        let Some(bound) = bound else { continue };
        if constraint.is_strict() {
            strict = bound;
        } else if bound > best.1 {
            best = (constraint, bound);
        }
    }
    if strict >= best.1 {
        Admissibility {
            t0_min: strict + STRICT_OFFSET,
            binding: Constraint::Shift,
            strict_adjusted: true,
        }
    } else {
        Admissibility {
            t0_min: best.1,
            binding: best.0,
            strict_adjusted: false,
        }
    }
}

/// Checks every height constraint, naming the first violated one.
pub fn check_admissible(data: &LFunctionData, strip: &StripParams, t: f64) -> Result<()> {
    for (constraint, bound) in constraints(data, strip) {
        let Some(bound) = bound else { continue };
        let ok = if constraint.is_strict() {
            t > bound
        } else {
            t >= bound
        };
        if !ok {
            return Err(Error::Inadmissible {
                constraint,
                bound,
                value: t,
            });
        }
    }
    Ok(())
}
