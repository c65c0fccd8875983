//! Explicit bounds for the error term in the zero-counting function of
//! L-functions in the Selberg class.
//!
//! The entry point is an [`LFunctionData`] describing the functional
//! equation. [`select_strip`] picks the integration abscissae, and
//! [`bounds::evaluate`] produces every intermediate constant for a pair of
//! heights `(T0, T)`.

#![no_std]
// `!(x > y)` also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod admissible;
pub mod bounds;
pub mod data;
pub mod error;
pub mod gamma;
pub mod lemmas;
pub mod newform;
pub mod strip;
pub mod zeros;

pub use admissible::{check_admissible, min_admissible_t0, Admissibility, Constraint};
pub use bounds::{c_doubling, c_main, evaluate, r_total, BoundReport, Coefficients};
pub use data::{derive_quantities, main_term, DerivedQuantities, GammaFactor, LFunctionData};
pub use error::{Error, Result};
pub use newform::{table_row, NewformSpec, TableRow};
pub use strip::{select_strip, StripParams};
pub use zeros::{check_bound, VerificationReport, ZeroList};
