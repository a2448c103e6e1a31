//! Complex log-gamma and the Riemann–Siegel theta function.
//!
//! `log_gamma` shifts its argument upward with `Γ(z) = Γ(z + m) / (z (z+1) ... (z+m-1))`
//! until `|z + m| ≥ STIRLING_MIN_MODULUS`, then applies the Stirling series
//! with `STIRLING_TERMS` Bernoulli corrections. With the defaults the
//! truncation error is below `1e-19` relative, so the result is limited by
//! double-precision rounding only.

use core::f64::consts::PI;

use num_complex::Complex64;
// Unused whenever std is in the crate graph, since its inherent f64 methods win.
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::sum::CompensatedSum;

/// Arguments are shifted until their modulus reaches this value before the
/// Stirling series is applied.
pub const STIRLING_MIN_MODULUS: f64 = 10.0;

/// Number of Bernoulli terms used in the Stirling series.
pub const STIRLING_TERMS: usize = 10;

/// `B_{2j} / (2j (2j - 1))` for `j = 1..=10`.
const STIRLING_COEFFS: [f64; STIRLING_TERMS] = [
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    1.0 / 156.0,
    -3617.0 / 122400.0,
    43867.0 / 244188.0,
    -174611.0 / 125400.0,
];

// ln(2π) / 2
const HALF_LN_TWO_PI: f64 = 0.918_938_533_204_672_7;

/// `Σ_j c_j / z^(2j-1)`, evaluated by Horner's rule in `1/z²`.
fn stirling_series(z: Complex64) -> Complex64 {
    let w = z.inv();
    let w2 = w * w;
    let mut acc = Complex64::new(0.0, 0.0);
    for &c in STIRLING_COEFFS.iter().rev() {
        acc = acc * w2 + c;
    }
    acc * w
}

/// Principal branch of `ln Γ(z)` for `Re(z) > 0`.
///
/// The branch is the analytic continuation of the real log-gamma on the
/// positive axis, so the imaginary part grows continuously with `Im(z)`
/// instead of being reduced modulo `2π`.
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if !(z.re > 0.0) || !z.im.is_finite() {
        return Err(Error::Domain {
            what: "log_gamma requires Re(z) > 0",
            value: z.re,
        });
    }
    let mut shifted = z;
    let mut shift_re = CompensatedSum::new();
    let mut shift_im = CompensatedSum::new();
    while shifted.norm() < STIRLING_MIN_MODULUS {
        let l = shifted.ln();
        shift_re += l.re;
        shift_im += l.im;
        shifted += 1.0;
    }
    let stirling =
        (shifted - 0.5) * shifted.ln() - shifted + HALF_LN_TWO_PI + stirling_series(shifted);
    Ok(Complex64::new(
        stirling.re - shift_re.value(),
        stirling.im - shift_im.value(),
    ))
}

/// Riemann–Siegel theta, `θ(t) = Im ln Γ(1/4 + it/2) - (t/2) ln π`, for `t ≥ 0`.
///
/// Once `t/2 ≥ STIRLING_MIN_MODULUS` no shift is needed and the imaginary
/// part of the Stirling expression is expanded by hand, which lets the two
/// large terms `(t/2) ln(t/2π)` and `-t/2` be combined with a single
/// rounding. This keeps the absolute error near one ulp of `θ(t)`.
pub fn theta(t: f64) -> Result<f64> {
    if !(t >= 0.0) || !t.is_finite() {
        return Err(Error::Domain {
            what: "theta requires finite t >= 0",
            value: t,
        });
    }
    let tau = 0.5 * t;
    if tau < STIRLING_MIN_MODULUS {
        let lg = log_gamma(Complex64::new(0.25, tau))?;
        return Ok(lg.im - tau * PI.ln());
    }
    let z = Complex64::new(0.25, tau);
    // Im[(z - 1/2) ln z - z] - τ ln π
    //   = τ ln(τ/π) - τ + (τ/2) ln(1 + 1/(16τ²)) - arg(z)/4
    let main = libm::fma(tau, (t / (2.0 * PI)).ln(), -tau);
    let small = 0.5 * tau * (1.0 / (16.0 * tau * tau)).ln_1p() - 0.25 * tau.atan2(0.25)
        + stirling_series(z).im;
    Ok(main + small)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn log_gamma_at_one_and_half() {
        let one = log_gamma(Complex64::new(1.0, 0.0)).unwrap();
        assert!(one.re.abs() < 1e-14 && one.im == 0.0);
        let half = log_gamma(Complex64::new(0.5, 0.0)).unwrap();
        assert!((half.re - 0.572_364_942_924_700_1).abs() < 1e-14);
    }

    #[test]
    fn log_gamma_factorials() {
        let mut fact = 1.0f64;
        for n in 1..30 {
            let lg = log_gamma(Complex64::new(n as f64, 0.0)).unwrap();
            assert!(
                (lg.re - fact.ln()).abs() <= 1e-13 * fact.ln().abs().max(1.0),
                "n={n}"
            );
            fact *= n as f64;
        }
    }

    #[test]
    fn log_gamma_rejects_left_half_plane() {
        assert!(log_gamma(Complex64::new(0.0, 1.0)).is_err());
        assert!(log_gamma(Complex64::new(-0.5, 0.0)).is_err());
        assert!(log_gamma(Complex64::new(f64::NAN, 0.0)).is_err());
    }

    #[test]
    fn log_gamma_recurrence() {
        // ln Γ(z+1) = ln Γ(z) + ln z on the quarter line
        for i in 0..50 {
            let z = Complex64::new(0.25, 0.37 * i as f64);
            let lhs = log_gamma(z + 1.0).unwrap();
            let rhs = log_gamma(z).unwrap() + z.ln();
            assert!((lhs - rhs).norm() < 1e-12 * lhs.norm().max(1.0), "z={z}");
        }
    }

    #[test]
    fn theta_at_zero_and_domain() {
        assert_eq!(theta(0.0).unwrap(), 0.0);
        assert!(theta(-1.0).is_err());
        assert!(theta(f64::INFINITY).is_err());
    }

    #[test]
    fn theta_branches_agree_at_switch() {
        // both evaluation paths describe the same function
        for &t in &[20.0, 20.5, 25.0, 40.0, 100.0] {
            let direct = log_gamma(Complex64::new(0.25, t / 2.0)).unwrap().im - t / 2.0 * PI.ln();
            assert!((direct - theta(t).unwrap()).abs() < 1e-12, "t={t}");
        }
    }

    #[test]
    fn theta_is_continuous_on_grid() {
        let h = 0.01;
        let mut prev = theta(0.0).unwrap();
        for i in 1..=1_000_000 {
            let cur = theta(i as f64 * h).unwrap();
            assert!((cur - prev).abs() < 0.5, "jump at t={}", i as f64 * h);
            prev = cur;
        }
    }

    #[test]
    fn theta_derivative_matches_leading_asymptotic() {
        // θ'(t) = ln(t/2π)/2 + O(1/t²); 100 deterministic pseudo-random t in [10, 1e4]
        let mut state = 0x9E37_79B9_7F4A_7C15u64;
        for _ in 0..100 {
            state = state
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            let u = (state >> 11) as f64 / (1u64 << 53) as f64;
            let t = 10.0 + u * (1e4 - 10.0);
            let h = 1e-4;
            let fd = (theta(t + h).unwrap() - theta(t - h).unwrap()) / (2.0 * h);
            assert!((fd - 0.5 * (t / (2.0 * PI)).ln()).abs() < 1e-4, "t={t}");
        }
    }
}
