//! Trusted values of `Z(t)` from two independent routes.
//!
//! * [`z_riemann_siegel`]: the Hardy–Littlewood main sum plus the first
//!   Riemann–Siegel correction term. Cheap, error `O(t^{-3/4})`.
//! * [`z_euler_maclaurin`]: `ζ(1/2 + it)` by Euler–Maclaurin summation,
//!   rotated by `e^{iθ(t)}`. Costs `O(t)` terms but is accurate to roughly
//!   `1e-11` across the supported range and shares no code with the
//!   Riemann–Siegel path beyond `θ`.

use core::f64::consts::PI;

use num_complex::Complex64;
// Unused whenever std is in the crate graph, since its inherent f64 methods win.
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::sections::{afe_cutoff, section_with_theta};
use crate::special::theta;
use crate::sum::CompensatedSum;

/// `err_estimate = RS_ERROR_CONSTANT * t^{-3/4}` for the Riemann–Siegel path.
///
/// The first neglected term is `(t/2π)^{-3/4} C_1(p)` with `|C_1| < 0.04`,
/// so this bounds it with room for the higher terms at small `t`.
pub const RS_ERROR_CONSTANT: f64 = 0.5;

/// `|cos(2πp)|` below this value marks an evaluation as close to a removable
/// singularity of the correction quotient.
pub const RS_SINGULAR_THRESHOLD: f64 = 1e-8;

/// Largest Bernoulli correction order accepted by the oracle.
pub const EM_MAX_ORDER: usize = 10;

/// The oracle fails when its last correction exceeds this fraction of
/// `max(1, |ζ|)`.
pub const EM_CONVERGENCE_TOL: f64 = 1e-12;

/// `B_{2j} / (2j)!` for `j = 1..=10`.
const EM_COEFFS: [f64; EM_MAX_ORDER] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
    43867.0 / 5109094217170944000.0,
    -174611.0 / 802857662698291200000.0,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ReferenceMethod {
    RiemannSiegel,
    EulerMaclaurin,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceValue {
    pub t: f64,
    pub z: f64,
    pub method: ReferenceMethod,
    pub err_estimate: f64,
    /// Imaginary part of `e^{iθ} ζ(1/2 + it)`; zero for the Riemann–Siegel path.
    pub imag_residual: f64,
    /// Set when `|cos(2πp)| < RS_SINGULAR_THRESHOLD`.
    pub near_singular: bool,
}

/// `cos(2π(p² - p - 1/16)) / cos(2πp)` for `p ∈ [0, 1)`.
///
/// The denominator vanishes at `p = 1/4` and `p = 3/4`, where the numerator
/// vanishes too. Around those points the quotient is rewritten with
/// `p = p₀ + ε` as a ratio of `sin(x)/x` factors, which is exact algebra and
/// has no cancellation.
pub fn riemann_siegel_psi(p: f64) -> f64 {
    fn sinc(x: f64) -> f64 {
        if x == 0.0 {
            1.0
        } else {
            x.sin() / x
        }
    }
    let near_quarter = p - 0.25;
    let near_three_quarters = p - 0.75;
    if near_quarter.abs() < 0.125 {
        let e = near_quarter;
        (0.5 - e) * sinc(2.0 * PI * (e * e - 0.5 * e)) / sinc(2.0 * PI * e)
    } else if near_three_quarters.abs() < 0.125 {
        let e = near_three_quarters;
        (0.5 + e) * sinc(2.0 * PI * (e * e + 0.5 * e)) / sinc(2.0 * PI * e)
    } else {
        (2.0 * PI * (p * p - p - 0.0625)).cos() / (2.0 * PI * p).cos()
    }
}

fn rs_parts(t: f64) -> (usize, f64, f64) {
    let a = (t / (2.0 * PI)).sqrt();
    let n = afe_cutoff(t);
    (n, a, a - n as f64)
}

/// The first-order remainder `(-1)^{Ñ-1} (t/2π)^{-1/4} Ψ(p)` alone.
pub fn riemann_siegel_correction(t: f64) -> Result<f64> {
    check_rs_domain(t)?;
    let (n, a, p) = rs_parts(t);
    let sign = if (n - 1) % 2 == 0 { 1.0 } else { -1.0 };
    Ok(sign * riemann_siegel_psi(p) / a.sqrt())
}

fn check_rs_domain(t: f64) -> Result<()> {
    if t >= 2.0 * PI && t.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain {
            what: "Riemann-Siegel evaluation requires t >= 2π",
            value: t,
        })
    }
}

/// `Z(t)` from the Hardy–Littlewood main sum with first-order Riemann–Siegel
/// correction. Requires `t ≥ 2π`.
pub fn z_riemann_siegel(t: f64) -> Result<ReferenceValue> {
    check_rs_domain(t)?;
    let th = theta(t)?;
    let (n, _, p) = rs_parts(t);
    let main = 2.0 * section_with_theta(th, t, n);
    let z = main + riemann_siegel_correction(t)?;
    Ok(ReferenceValue {
        t,
        z,
        method: ReferenceMethod::RiemannSiegel,
        err_estimate: RS_ERROR_CONSTANT * t.powf(-0.75),
        imag_residual: 0.0,
        near_singular: (2.0 * PI * p).cos().abs() < RS_SINGULAR_THRESHOLD,
    })
}

/// Default oracle settings: `max(100, 2⌈t⌉)` terms, six Bernoulli corrections.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmConfig {
    pub terms: usize,
    pub order: usize,
}

impl EmConfig {
    pub const DEFAULT_ORDER: usize = 6;

    pub fn for_height(t: f64) -> Self {
        EmConfig {
            terms: 100usize.max(2 * t.ceil() as usize),
            order: Self::DEFAULT_ORDER,
        }
    }
}

/// `ζ(1/2 + it)` by Euler–Maclaurin summation with `terms` explicit terms
/// and `order` Bernoulli corrections. Returns the value and the magnitude of
/// the last correction.
pub fn zeta_critical_line(t: f64, terms: usize, order: usize) -> Result<(Complex64, f64)> {
    if !(t >= 0.0) || !t.is_finite() {
        return Err(Error::Domain {
            what: "Euler-Maclaurin oracle requires finite t >= 0",
            value: t,
        });
    }
    if terms < 50usize.max(t.ceil() as usize) {
        return Err(Error::Parameter(
            "oracle terms must be at least max(50, ceil(t))",
        ));
    }
    if order == 0 || order > EM_MAX_ORDER {
        return Err(Error::Parameter(
            "oracle correction order must be in 1..=10",
        ));
    }
    let s = Complex64::new(0.5, t);

    let mut re = CompensatedSum::new();
    let mut im = CompensatedSum::new();
    for n in 1..terms {
        let nf = n as f64;
        let (sin, cos) = libm::sincos(t * nf.ln());
        let mag = 1.0 / nf.sqrt();
        re += mag * cos;
        im += -mag * sin;
    }

    let big_n = terms as f64;
    let n_pow_s = Complex64::from_polar(1.0 / big_n.sqrt(), -t * big_n.ln()); // N^{-s}
    let tail = n_pow_s * big_n / (s - 1.0) + n_pow_s * 0.5;
    re += tail.re;
    im += tail.im;

    // B_{2j}/(2j)! · s(s+1)···(s+2j-2) · N^{-s-2j+1}
    let mut rising = s;
    let mut power = n_pow_s / big_n;
    let mut last = 0.0;
    for (j, &c) in EM_COEFFS.iter().enumerate().take(order) {
        let term = rising * power * c;
        re += term.re;
        im += term.im;
        last = term.norm();
        let k = (2 * j + 1) as f64;
        rising = rising * (s + k) * (s + k + 1.0);
        power /= big_n * big_n;
    }

    let zeta = Complex64::new(re.value(), im.value());
    if last > EM_CONVERGENCE_TOL * zeta.norm().max(1.0) {
        return Err(Error::Convergence {
            last_correction: last,
            running: zeta.norm(),
        });
    }
    Ok((zeta, last))
}

/// `Z(t) = Re(e^{iθ(t)} ζ(1/2 + it))` through [`zeta_critical_line`]. The
/// imaginary part of the rotated value is kept as a self-consistency check.
pub fn z_euler_maclaurin(t: f64, terms: usize, order: usize) -> Result<ReferenceValue> {
    let (zeta, last) = zeta_critical_line(t, terms, order)?;
    let rotated = Complex64::from_polar(1.0, theta(t)?) * zeta;
    Ok(ReferenceValue {
        t,
        z: rotated.re,
        method: ReferenceMethod::EulerMaclaurin,
        err_estimate: last,
        imag_residual: rotated.im,
        near_singular: false,
    })
}

/// [`z_euler_maclaurin`] with [`EmConfig::for_height`].
pub fn z_oracle(t: f64) -> Result<ReferenceValue> {
    let cfg = EmConfig::for_height(t);
    z_euler_maclaurin(t, cfg.terms, cfg.order)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn correction_at_exact_square() {
        // t = 8π: p = 0, Ñ = 2
        let c = riemann_siegel_correction(8.0 * PI).unwrap();
        let want = -(PI / 8.0).cos() / 2f64.sqrt();
        assert!((c - want).abs() < 1e-15);
        assert!((c + 0.653_281_5).abs() < 1e-7);
    }

    #[test]
    fn psi_rewrite_matches_direct_quotient() {
        let direct = |p: f64| (2.0 * PI * (p * p - p - 0.0625)).cos() / (2.0 * PI * p).cos();
        for &p in &[0.13, 0.2, 0.24, 0.26, 0.37, 0.63, 0.7, 0.74, 0.76, 0.87] {
            assert!((riemann_siegel_psi(p) - direct(p)).abs() < 1e-12, "p={p}");
        }
        assert!((riemann_siegel_psi(0.25) - 0.5).abs() < 1e-15);
        assert!((riemann_siegel_psi(0.75) - 0.5).abs() < 1e-15);
        // symmetric about 1/2 and continuous through the singular points
        for i in 0..1000 {
            let p = i as f64 / 1000.0;
            assert!((riemann_siegel_psi(p) - riemann_siegel_psi(1.0 - p)).abs() < 1e-12);
            let q = p + 1e-6;
            assert!((riemann_siegel_psi(p) - riemann_siegel_psi(q)).abs() < 1e-5);
        }
    }

    #[test]
    fn correction_sign_follows_cutoff_parity() {
        // Across t = 2π m² the cutoff parity flips; the signed factor
        // (-1)^{Ñ-1} must flip with it.
        for m in 2..30usize {
            let jump = 2.0 * PI * (m * m) as f64;
            for &t in &[jump - 1e-6, jump + 1e-6] {
                let (n, a, p) = rs_parts(t);
                let c = riemann_siegel_correction(t).unwrap();
                let ratio = c * a.sqrt() / riemann_siegel_psi(p);
                let want = if n % 2 == 1 { 1.0 } else { -1.0 };
                assert!((ratio - want).abs() < 1e-12, "m={m} t={t}");
            }
        }
    }

    #[test]
    fn rs_domain() {
        assert!(z_riemann_siegel(6.0).is_err());
        let v = z_riemann_siegel(100.0).unwrap();
        assert_eq!(v.method, ReferenceMethod::RiemannSiegel);
        assert!((v.err_estimate - RS_ERROR_CONSTANT * 100f64.powf(-0.75)).abs() < 1e-15);
    }

    #[test]
    fn oracle_parameter_checks() {
        assert!(matches!(
            z_euler_maclaurin(100.0, 99, 6),
            Err(Error::Parameter(_))
        ));
        assert!(matches!(
            z_euler_maclaurin(10.0, 49, 6),
            Err(Error::Parameter(_))
        ));
        assert!(matches!(
            z_euler_maclaurin(10.0, 100, 0),
            Err(Error::Parameter(_))
        ));
        assert!(matches!(
            z_euler_maclaurin(10.0, 100, 11),
            Err(Error::Parameter(_))
        ));
        assert!(z_euler_maclaurin(-1.0, 100, 6).is_err());
        // too few terms for order 1 to converge
        assert!(matches!(
            z_euler_maclaurin(1000.0, 1000, 1),
            Err(Error::Convergence { .. })
        ));
    }

    #[test]
    fn zeta_half() {
        let v = z_oracle(0.0).unwrap();
        assert!((v.z + 1.460_354_508_809_586_8).abs() < 1e-12);
        assert_eq!(v.imag_residual, 0.0);
    }
}
