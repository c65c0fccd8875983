use crate::admissible::Constraint;

/// Errors raised by the bound computations.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid gamma factor: {0}")]
    InvalidFactor(&'static str),

    #[error("invalid L-function data: {0}")]
    InvalidData(&'static str),

    #[error("series diverges: exponent {exponent} must exceed 1")]
    Divergent { exponent: f64 },

    #[error("invalid strip: {condition} does not hold (value {value})")]
    InvalidStrip { condition: &'static str, value: f64 },

    #[error("no admissible strip parameter found for a1 = {a1}")]
    StripSearchExhausted { a1: f64 },

    #[error("height {value} is not admissible: requires {constraint} (bound {bound})")]
    Inadmissible {
        constraint: Constraint,
        bound: f64,
        value: f64,
    },

    #[error("domain error: {0}")]
    Domain(&'static str),

    #[error("gamma factor index {index} out of range ({len} factors)")]
    FactorIndex { index: usize, len: usize },

    #[error("invalid newform: {0}")]
    InvalidNewform(&'static str),

    #[error("invalid zero ordinate {value} at position {index}")]
    InvalidOrdinate { index: usize, value: f64 },
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
