//! Sections of the Hardy Z-function and their coefficient-weighted
//! generalisation.
//!
//! Every function here sums terms `α_k cos(θ(t) - t ln k) / √k` in ascending
//! `k` with compensated accumulation; `θ(t)` is computed once per call.

use alloc::vec::Vec;
use core::f64::consts::PI;

// Unused whenever std is in the crate graph, since its inherent f64 methods win.
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::special::theta;
use crate::sum::CompensatedSum;

/// How the number of terms of a section is chosen at height `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CutoffPolicy {
    /// Hardy–Littlewood cutoff `floor(√(t/2π))`.
    Afe,
    /// Spira's cutoff `floor(t/2)`.
    Spira,
    /// A constant number of terms, independent of `t`.
    Fixed(usize),
}

impl CutoffPolicy {
    /// Number of terms at height `t` (`t ≥ 0`).
    pub fn resolve(self, t: f64) -> usize {
        match self {
            CutoffPolicy::Afe => afe_cutoff(t),
            CutoffPolicy::Spira => (0.5 * t).floor() as usize,
            CutoffPolicy::Fixed(n) => n,
        }
    }

    /// The smallest height strictly above `t` at which [`resolve`](Self::resolve)
    /// changes value, or `None` for a fixed cutoff.
    pub fn next_jump_after(self, t: f64) -> Option<f64> {
        match self {
            CutoffPolicy::Afe => {
                let next = (afe_cutoff(t) + 1) as f64;
                Some(2.0 * PI * next * next)
            }
            CutoffPolicy::Spira => Some(2.0 * ((0.5 * t).floor() + 1.0)),
            CutoffPolicy::Fixed(_) => None,
        }
    }
}

/// `floor(√(t/2π))`, corrected so that exact squares land on the right
/// integer despite rounding in the square root.
pub fn afe_cutoff(t: f64) -> usize {
    let x = t / (2.0 * PI);
    let mut n = x.sqrt().floor();
    if (n + 1.0) * (n + 1.0) <= x {
        n += 1.0;
    } else if n * n > x {
        n -= 1.0;
    }
    n.max(0.0) as usize
}

/// A finite coefficient sequence `α_1..α_N` for `Z(t; α)`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientVector {
    alpha: Vec<f64>,
}

impl CoefficientVector {
    pub fn new(alpha: Vec<f64>) -> Result<Self> {
        if let Some(bad) = alpha.iter().find(|a| !a.is_finite()) {
            return Err(Error::Domain {
                what: "coefficients must be finite",
                value: *bad,
            });
        }
        Ok(CoefficientVector { alpha })
    }

    /// All-ones vector of length `n`.
    pub fn ones(n: usize) -> Self {
        CoefficientVector {
            alpha: alloc::vec![1.0; n],
        }
    }

    pub fn zeros(n: usize) -> Self {
        CoefficientVector {
            alpha: alloc::vec![0.0; n],
        }
    }

    pub fn len(&self) -> usize {
        self.alpha.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alpha.is_empty()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.alpha
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.alpha
    }

    pub fn l2_norm(&self) -> f64 {
        self.alpha
            .iter()
            .map(|a| a * a)
            .collect::<CompensatedSum>()
            .value()
            .sqrt()
    }
}

#[inline]
fn check_height(t: f64) -> Result<()> {
    if t >= 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain {
            what: "height t must be finite and non-negative",
            value: t,
        })
    }
}

/// `cos(θ - t ln k) / √k`.
#[inline]
pub fn section_term(theta: f64, t: f64, k: usize) -> f64 {
    let kf = k as f64;
    (theta - t * kf.ln()).cos() / kf.sqrt()
}

pub(crate) fn section_with_theta(theta: f64, t: f64, n: usize) -> f64 {
    let mut acc = CompensatedSum::new();
    for k in 1..=n {
        acc += section_term(theta, t, k);
    }
    acc.value()
}

pub(crate) fn weighted_with_theta(theta: f64, t: f64, alpha: &[f64]) -> f64 {
    let mut acc = CompensatedSum::new();
    for (i, &a) in alpha.iter().enumerate() {
        if a != 0.0 {
            acc += a * section_term(theta, t, i + 1);
        }
    }
    acc.value()
}

/// The section `Z_N(t) = Σ_{k=1..N} cos(θ(t) - t ln k) / √k`.
pub fn section(t: f64, n: usize) -> Result<f64> {
    check_height(t)?;
    Ok(section_with_theta(theta(t)?, t, n))
}

/// All partial sections `Z_1(t), ..., Z_N(t)` in one pass.
pub fn section_prefixes(t: f64, n: usize) -> Result<Vec<f64>> {
    check_height(t)?;
    let th = theta(t)?;
    let mut acc = CompensatedSum::new();
    Ok((1..=n)
        .map(|k| {
            acc += section_term(th, t, k);
            acc.value()
        })
        .collect())
}

/// The Hardy–Littlewood main sum `2 Z_Ñ(t)` with `Ñ = floor(√(t/2π))`, no remainder.
pub fn afe(t: f64) -> Result<f64> {
    if !(t >= 2.0 * PI) {
        return Err(Error::Domain {
            what: "afe requires t >= 2π",
            value: t,
        });
    }
    Ok(2.0 * section(t, afe_cutoff(t))?)
}

/// Spira's approximation `Z_{floor(t/2)}(t)`.
pub fn spira(t: f64) -> Result<f64> {
    if !(t >= 2.0) {
        return Err(Error::Domain {
            what: "spira requires t >= 2",
            value: t,
        });
    }
    section(t, CutoffPolicy::Spira.resolve(t))
}

/// `Z(t; α) = Σ_{k=1..N} α_k cos(θ(t) - t ln k) / √k`.
pub fn z_custom(t: f64, alpha: &CoefficientVector) -> Result<f64> {
    check_height(t)?;
    Ok(weighted_with_theta(theta(t)?, t, alpha.as_slice()))
}
