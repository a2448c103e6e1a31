//! The binomially accelerated section.
//!
//! The accelerated value at order `N` is the sum of
//! `β_{n,k}(t) = 2^{-(n+1)} C(n,k) cos(θ(t) - t ln(k+1)) / √(k+1)` over the
//! triangle `0 ≤ k ≤ n ≤ N`. Summing each row first gives
//! [`accelerated_triangle`]; summing each column first collapses the
//! binomial weights into one coefficient per term,
//!
//! ```text
//! α̃_k = Σ_{n=k-1..N} 2^{-(n+1)} C(n, k-1) = P[Binomial(N+1, 1/2) ≥ k],
//! ```
//!
//! which is [`accelerated_vertical`]. The triangle has `N + 1` columns, so
//! the coefficient vector runs to `k = N + 1`; the last column holds the
//! single cell `β⁰_{N,N} = 2^{-(N+1)}`. With it the two orders cover the
//! same cells and agree to rounding. The two routes share only the cosine
//! terms: the triangle builds its rows by Pascal averaging while the
//! coefficients come from a normalised binomial tail, so agreement between
//! them checks the weights independently.

use alloc::vec;
use alloc::vec::Vec;

// Unused whenever std is in the crate graph, since its inherent f64 methods win.
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::sections::{section_term, weighted_with_theta, CoefficientVector};
use crate::special::theta;
use crate::sum::CompensatedSum;

/// Largest order accepted by [`accelerated_triangle`] (the row-first sum is
/// quadratic in `N`).
pub const MAX_TRIANGLE_ORDER: usize = 1_000_000;

/// The weights `β⁰_{n,k} = 2^{-(n+1)} C(n,k)` for `0 ≤ k ≤ n ≤ N`.
#[derive(Debug, Clone, PartialEq)]
pub struct BetaTriangle {
    rows: Vec<Vec<f64>>,
}

impl BetaTriangle {
    /// Builds rows `0..=order` by `β⁰_{n+1,k} = (β⁰_{n,k} + β⁰_{n,k-1}) / 2`.
    pub fn new(order: usize) -> Self {
        let mut rows = Vec::with_capacity(order + 1);
        let mut row = vec![0.5];
        for _ in 0..order {
            let next = pascal_average(&row);
            rows.push(core::mem::replace(&mut row, next));
        }
        rows.push(row);
        BetaTriangle { rows }
    }

    pub fn order(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, n: usize, k: usize) -> Option<f64> {
        self.rows.get(n).and_then(|r| r.get(k)).copied()
    }

    pub fn row(&self, n: usize) -> &[f64] {
        &self.rows[n]
    }

    pub fn row_sum(&self, n: usize) -> f64 {
        self.rows[n]
            .iter()
            .copied()
            .collect::<CompensatedSum>()
            .value()
    }

    /// Column sums `Σ_{n=k-1..N} β⁰_{n,k-1}` for `k = 1..=N+1`.
    pub fn column_sums(&self) -> Vec<f64> {
        let order = self.order();
        (0..=order)
            .map(|col| {
                self.rows[col..]
                    .iter()
                    .map(|r| r[col])
                    .collect::<CompensatedSum>()
                    .value()
            })
            .collect()
    }
}

fn pascal_average(row: &[f64]) -> Vec<f64> {
    let mut next = Vec::with_capacity(row.len() + 1);
    next.push(0.5 * row[0]);
    for w in row.windows(2) {
        next.push(0.5 * (w[0] + w[1]));
    }
    next.push(0.5 * row[row.len() - 1]);
    next
}

/// Upper tails `P[B ≥ j]` for `B ~ Binomial(m, 1/2)`, `j = 0..=m+1`.
///
/// The pmf is built by ratio recurrence outward from the mode and normalised
/// by its compensated total. Tails above the median are summed from the top
/// down (smallest terms first); the rest follow from the symmetry
/// `P[B ≥ j] = 1 - P[B ≥ m + 1 - j]`, so every small tail is a direct sum
/// and only values near 1 come from a subtraction.
///
/// For `m` beyond roughly 1070 the outermost probabilities underflow to zero.
pub fn binomial_half_upper_tails(m: usize) -> Vec<f64> {
    let mode = m / 2;
    let mut pmf = vec![0.0; m + 1];
    pmf[mode] = 1.0;
    for j in mode + 1..=m {
        pmf[j] = pmf[j - 1] * (m - j + 1) as f64 / j as f64;
    }
    for j in (0..mode).rev() {
        pmf[j] = pmf[j + 1] * (j + 1) as f64 / (m - j) as f64;
    }
    let total = pmf.iter().copied().collect::<CompensatedSum>().value();
    for p in pmf.iter_mut() {
        *p /= total;
    }

    let mut upper = vec![0.0; m + 2];
    let mut acc = CompensatedSum::new();
    for j in (0..=m).rev() {
        acc += pmf[j];
        upper[j] = acc.value();
    }
    // j ≤ m/2: use the complement of the small tail instead
    for j in 0..=m / 2 {
        upper[j] = 1.0 - upper[m + 1 - j];
    }
    upper
}

/// The accelerated coefficients `α̃_1..α̃_{N+1}` at order `N`, one per
/// column of the β triangle.
#[derive(Debug, Clone, PartialEq)]
pub struct AcceleratedCoefficients {
    order: usize,
    alpha: Vec<f64>,
    /// `1 - α̃_k`, kept separately because it is tiny for small `k`.
    deficit: Vec<f64>,
}

impl AcceleratedCoefficients {
    pub fn order(&self) -> usize {
        self.order
    }

    /// `α̃_k` for `k = 1..=N+1` (index `k - 1`).
    pub fn as_slice(&self) -> &[f64] {
        &self.alpha
    }

    /// `1 - α̃_k` for `k = 1..=N+1`, computed without cancellation. Near
    /// `k = 1` the coefficients round to exactly `1.0` once `N ≥ 53`; the
    /// deficits keep their ordering visible.
    pub fn deficits(&self) -> &[f64] {
        &self.deficit
    }

    pub fn get(&self, k: usize) -> Option<f64> {
        k.checked_sub(1).and_then(|i| self.alpha.get(i)).copied()
    }

    pub fn to_vector(&self) -> CoefficientVector {
        CoefficientVector::new(self.alpha.clone()).expect("binomial tails are finite")
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::Parameter("order N must be at least 1"))
    } else {
        Ok(())
    }
}

/// `α̃_k = P[Binomial(N+1, 1/2) ≥ k]` for `k = 1..=N+1`.
pub fn accelerated_coefficients(n: usize) -> Result<AcceleratedCoefficients> {
    check_order(n)?;
    let m = n + 1;
    let upper = binomial_half_upper_tails(m);
    let alpha = upper[1..=m].to_vec();
    // 1 - P[B ≥ k] = P[B ≤ k-1] = P[B ≥ m-k+1]
    let deficit = (1..=m).map(|k| upper[m + 1 - k]).collect();
    Ok(AcceleratedCoefficients {
        order: n,
        alpha,
        deficit,
    })
}

/// The all-ones step coefficients of the plain section `Z_N`.
pub fn step_coefficients(n: usize) -> Result<CoefficientVector> {
    check_order(n)?;
    Ok(CoefficientVector::ones(n))
}

/// `‖α̃ - α^step‖₂` over `k = 1..=N`, the common length of the two vectors.
pub fn coefficient_l2_distance(n: usize) -> Result<f64> {
    let coeffs = accelerated_coefficients(n)?;
    Ok(l2_distance_to_step(&coeffs))
}

pub fn l2_distance_to_step(coeffs: &AcceleratedCoefficients) -> f64 {
    coeffs.deficits()[..coeffs.order()]
        .iter()
        .map(|d| d * d)
        .collect::<CompensatedSum>()
        .value()
        .sqrt()
}

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

/// Row sums `A(n, t) = Σ_{k=0..n} β⁰_{n,k} cos(θ - t ln(k+1)) / √(k+1)` for `n = 0..=N`.
pub fn triangle_rows(t: f64, n: usize) -> Result<Vec<f64>> {
    check_height(t)?;
    if n > MAX_TRIANGLE_ORDER {
        return Err(Error::Resource {
            requested: n,
            limit: MAX_TRIANGLE_ORDER,
        });
    }
    let th = theta(t)?;
    let terms: Vec<f64> = (1..=n + 1).map(|k| section_term(th, t, k)).collect();
    let mut weights = Vec::with_capacity(n + 1);
    weights.push(0.5);
    let mut rows = Vec::with_capacity(n + 1);
    for row in 0..=n {
        if row > 0 {
            // in-place Pascal averaging, right to left
            weights.push(0.5 * weights[row - 1]);
            for k in (1..row).rev() {
                weights[k] = 0.5 * (weights[k] + weights[k - 1]);
            }
            weights[0] *= 0.5;
        }
        let a = weights
            .iter()
            .zip(&terms)
            .map(|(w, c)| w * c)
            .collect::<CompensatedSum>()
            .value();
        rows.push(a);
    }
    Ok(rows)
}

/// Row-first (horizontal) accelerated sum `Σ_{n=0..N} A(n, t)`.
pub fn accelerated_triangle(t: f64, n: usize) -> Result<f64> {
    Ok(triangle_rows(t, n)?
        .into_iter()
        .collect::<CompensatedSum>()
        .value())
}

/// Column-first (vertical) accelerated sum `Σ_{k=1..N+1} α̃_k cos(θ - t ln k) / √k`.
pub fn accelerated_vertical(t: f64, n: usize) -> Result<f64> {
    let coeffs = accelerated_coefficients(n)?;
    accelerated_vertical_with(t, &coeffs)
}

/// [`accelerated_vertical`] with precomputed coefficients.
pub fn accelerated_vertical_with(t: f64, coeffs: &AcceleratedCoefficients) -> Result<f64> {
    check_height(t)?;
    Ok(weighted_with_theta(theta(t)?, t, coeffs.as_slice()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_rows_sum_to_half() {
        let tri = BetaTriangle::new(300);
        for n in 0..=300 {
            assert!((tri.row_sum(n) - 0.5).abs() <= 1e-14, "row {n}");
            assert!(tri.row(n).iter().all(|&b| b > 0.0 && b <= 1.0));
        }
        assert_eq!(tri.get(2, 1), Some(0.25));
        assert_eq!(tri.get(2, 3), None);
    }

    #[test]
    fn small_orders_by_hand() {
        let c = accelerated_coefficients(1).unwrap();
        assert_eq!(c.as_slice(), &[0.75, 0.25]);
        let c = accelerated_coefficients(3).unwrap();
        assert!((c.get(2).unwrap() - 11.0 / 16.0).abs() <= 1e-15);
        assert!(accelerated_coefficients(0).is_err());
    }

    #[test]
    fn triangle_order_zero_and_one() {
        let t = 37.5;
        let th = theta(t).unwrap();
        let n0 = accelerated_triangle(t, 0).unwrap();
        assert!((n0 - 0.5 * th.cos()).abs() < 1e-15);
        let n1 = accelerated_triangle(t, 1).unwrap();
        let want = 0.75 * th.cos() + 2f64.sqrt() / 8.0 * (th - t * 2f64.ln()).cos();
        assert!((n1 - want).abs() < 1e-15);
        let v1 = accelerated_vertical(t, 1).unwrap();
        assert!((v1 - want).abs() < 1e-15);
    }

    #[test]
    fn triangle_resource_limit() {
        assert!(matches!(
            accelerated_triangle(10.0, MAX_TRIANGLE_ORDER + 1),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn column_sums_match_tails() {
        let tri = BetaTriangle::new(40);
        let coeffs = accelerated_coefficients(40).unwrap();
        for (a, b) in tri.column_sums().iter().zip(coeffs.as_slice()) {
            assert!((a - b).abs() < 1e-14);
        }
    }

    #[test]
    fn step_vector() {
        let s = step_coefficients(3).unwrap();
        assert_eq!(s.as_slice(), &[1.0, 1.0, 1.0]);
        assert!((step_coefficients(16).unwrap().l2_norm() - 4.0).abs() < 1e-15);
        assert!(step_coefficients(0).is_err());
    }

    #[test]
    fn l2_distance_small_orders() {
        assert!((coefficient_l2_distance(1).unwrap() - 0.25).abs() < 1e-15);
    }

    #[test]
    fn coefficients_limit_to_one_at_fixed_index() {
        let c = accelerated_coefficients(100).unwrap();
        assert!(c.get(5).unwrap() >= 1.0 - 1e-10);
    }
}
