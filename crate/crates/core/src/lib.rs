//! Numerics for sectional approximations of the Hardy Z-function.
//!
//! This crate is `no_std` (it needs `alloc`) and has no IO. It provides:
//!
//! * [`special`]: complex log-gamma and the Riemann–Siegel theta function.
//! * [`reference`]: two independent evaluations of `Z(t)`, the first-order
//!   Riemann–Siegel formula and an Euler–Maclaurin oracle.
//! * [`sections`]: plain sections `Z_N(t)`, the Hardy–Littlewood main sum,
//!   Spira's high cutoff and coefficient-weighted sections `Z(t; α)`.
//! * [`acceleration`]: the binomially accelerated section, summed both
//!   row-first over the β triangle and column-first through its coefficient
//!   vector.
//! * [`scheme`] and [`zeros`]: a uniform way to name and evaluate any of
//!   the above, and a sign-change zero scanner built on top of it.
//!
//! Everything here is a pure function of its inputs, so callers are free to
//! evaluate in parallel. The companion `zsections` crate does exactly that.

#![no_std]
#![forbid(unsafe_code)]
// `!(x > a)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

extern crate alloc;

pub mod acceleration;
pub mod error;
pub mod reference;
pub mod scheme;
pub mod sections;
pub mod special;
pub mod sum;
pub mod zeros;

pub use acceleration::{
    accelerated_coefficients, accelerated_triangle, accelerated_vertical, coefficient_l2_distance,
    step_coefficients, AcceleratedCoefficients, BetaTriangle,
};
pub use error::{Error, Result};
pub use reference::{z_euler_maclaurin, z_riemann_siegel, ReferenceMethod, ReferenceValue};
pub use scheme::{CoefficientSource, Evaluator, SchemeSpec, Uncached};
pub use sections::{afe, section, spira, z_custom, CoefficientVector, CutoffPolicy};
pub use special::{log_gamma, theta};
pub use zeros::{compare_zero_sets, conjecture_sweep, scan_zeros, TimeGrid, ZeroRecord};
