//! Naming and evaluating approximation schemes uniformly.

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use core::f64::consts::PI;
use core::fmt;
use core::str::FromStr;

use crate::acceleration::{
    accelerated_coefficients, accelerated_triangle, accelerated_vertical_with,
    AcceleratedCoefficients,
};
use crate::error::{Error, Result};
use crate::reference::{z_euler_maclaurin, z_riemann_siegel, EmConfig, ReferenceValue};
use crate::sections::{section, z_custom, CoefficientVector, CutoffPolicy};

/// An approximation of `Z(t)` (or a reference evaluation of it).
#[derive(Debug, Clone, PartialEq)]
pub enum SchemeSpec {
    /// Riemann–Siegel main sum with first-order correction.
    ReferenceRs,
    /// Euler–Maclaurin oracle.
    OracleEm,
    /// `2 Z_N(t)`; the default cutoff is the Hardy–Littlewood one.
    Afe(CutoffPolicy),
    /// `Z_N(t)`; the default cutoff is `floor(t/2)`.
    Spira(CutoffPolicy),
    /// Accelerated section, summed row-first over the β triangle.
    AcceleratedTriangle(CutoffPolicy),
    /// Accelerated section, summed through its coefficient vector.
    AcceleratedCoeff(CutoffPolicy),
    /// `Z(t; α)` for a fixed coefficient vector.
    Custom(Arc<CoefficientVector>),
}

impl SchemeSpec {
    pub fn afe() -> Self {
        SchemeSpec::Afe(CutoffPolicy::Afe)
    }

    pub fn spira() -> Self {
        SchemeSpec::Spira(CutoffPolicy::Spira)
    }

    pub fn spira_fixed(n: usize) -> Self {
        SchemeSpec::Spira(CutoffPolicy::Fixed(n))
    }

    pub fn accelerated() -> Self {
        SchemeSpec::AcceleratedCoeff(CutoffPolicy::Spira)
    }

    pub fn custom(alpha: CoefficientVector) -> Self {
        SchemeSpec::Custom(Arc::new(alpha))
    }

    pub fn is_reference(&self) -> bool {
        matches!(self, SchemeSpec::ReferenceRs | SchemeSpec::OracleEm)
    }

    /// The cutoff rule of a sectional scheme; `None` for references and
    /// custom vectors, which are continuous in `t`.
    pub fn cutoff_policy(&self) -> Option<CutoffPolicy> {
        match self {
            SchemeSpec::Afe(p)
            | SchemeSpec::Spira(p)
            | SchemeSpec::AcceleratedTriangle(p)
            | SchemeSpec::AcceleratedCoeff(p) => Some(*p),
            _ => None,
        }
    }

    pub fn cutoff_at(&self, t: f64) -> Option<usize> {
        self.cutoff_policy().map(|p| p.resolve(t))
    }

    /// Smallest height at which the scheme is defined.
    pub fn min_height(&self) -> f64 {
        match self {
            SchemeSpec::ReferenceRs | SchemeSpec::Afe(CutoffPolicy::Afe) => 2.0 * PI,
            SchemeSpec::Spira(CutoffPolicy::Spira)
            | SchemeSpec::AcceleratedCoeff(CutoffPolicy::Spira) => 2.0,
            SchemeSpec::AcceleratedCoeff(CutoffPolicy::Afe) => 2.0 * PI,
            _ => 0.0,
        }
    }

    fn default_policy(&self) -> Option<CutoffPolicy> {
        match self {
            SchemeSpec::Afe(_) => Some(CutoffPolicy::Afe),
            SchemeSpec::Spira(_)
            | SchemeSpec::AcceleratedTriangle(_)
            | SchemeSpec::AcceleratedCoeff(_) => Some(CutoffPolicy::Spira),
            _ => None,
        }
    }

    /// Short label, also accepted by [`FromStr`] (except for custom vectors).
    pub fn label(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for SchemeSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = match self {
            SchemeSpec::ReferenceRs => "rs",
            SchemeSpec::OracleEm => "em",
            SchemeSpec::Afe(_) => "afe",
            SchemeSpec::Spira(_) => "spira",
            SchemeSpec::AcceleratedTriangle(_) => "acc-triangle",
            SchemeSpec::AcceleratedCoeff(_) => "acc-coeff",
            SchemeSpec::Custom(alpha) => return write!(f, "custom[{}]", alpha.len()),
        };
        f.write_str(base)?;
        match (self.cutoff_policy(), self.default_policy()) {
            (Some(p), Some(d)) if p == d => Ok(()),
            (Some(CutoffPolicy::Fixed(n)), _) => write!(f, "@{n}"),
            (Some(CutoffPolicy::Afe), _) => f.write_str("@afe"),
            (Some(CutoffPolicy::Spira), _) => f.write_str("@spira"),
            _ => Ok(()),
        }
    }
}

impl FromStr for SchemeSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().to_ascii_lowercase();
        let (base, suffix) = match s.split_once('@') {
            Some((b, rest)) => (b.to_string(), Some(rest.to_string())),
            None => (s.clone(), None),
        };
        let policy = match suffix.as_deref() {
            None => None,
            Some("afe") => Some(CutoffPolicy::Afe),
            Some("spira") => Some(CutoffPolicy::Spira),
            Some(n) => Some(CutoffPolicy::Fixed(n.parse().map_err(|_| {
                Error::Parameter("cutoff suffix must be @<N>, @afe or @spira")
            })?)),
        };
        let scheme = match base.as_str() {
            "rs" | "reference_rs" | "rs1" => SchemeSpec::ReferenceRs,
            "em" | "oracle_em" | "oracle" => SchemeSpec::OracleEm,
            "afe" => SchemeSpec::Afe(policy.unwrap_or(CutoffPolicy::Afe)),
            "spira" | "section" => SchemeSpec::Spira(policy.unwrap_or(CutoffPolicy::Spira)),
            "acc-triangle" | "accelerated_triangle" => {
                SchemeSpec::AcceleratedTriangle(policy.unwrap_or(CutoffPolicy::Spira))
            }
            "acc-coeff" | "accelerated_coeff" | "acc" | "accelerated" => {
                SchemeSpec::AcceleratedCoeff(policy.unwrap_or(CutoffPolicy::Spira))
            }
            _ => return Err(Error::Parameter("unknown scheme name")),
        };
        if scheme.is_reference() && policy.is_some() {
            return Err(Error::Parameter("reference schemes take no cutoff suffix"));
        }
        Ok(scheme)
    }
}

/// Supplies accelerated coefficient vectors by order.
///
/// Coefficients depend on `N` only, so sweeps over `t` at a fixed order can
/// share one vector; the std companion crate provides a concurrent cache.
pub trait CoefficientSource {
    fn accelerated(&self, n: usize) -> Result<Arc<AcceleratedCoefficients>>;
}

/// Recomputes coefficients on every request.
#[derive(Debug, Clone, Copy, Default)]
pub struct Uncached;

impl CoefficientSource for Uncached {
    fn accelerated(&self, n: usize) -> Result<Arc<AcceleratedCoefficients>> {
        accelerated_coefficients(n).map(Arc::new)
    }
}

impl<T: CoefficientSource + ?Sized> CoefficientSource for &T {
    fn accelerated(&self, n: usize) -> Result<Arc<AcceleratedCoefficients>> {
        (**self).accelerated(n)
    }
}

/// Evaluates any [`SchemeSpec`] at a height.
#[derive(Debug, Clone)]
pub struct Evaluator<C = Uncached> {
    coefficients: C,
    oracle_terms: Option<usize>,
    oracle_order: usize,
}

impl Default for Evaluator<Uncached> {
    fn default() -> Self {
        Evaluator::new(Uncached)
    }
}

impl<C: CoefficientSource> Evaluator<C> {
    pub fn new(coefficients: C) -> Self {
        Evaluator {
            coefficients,
            oracle_terms: None,
            oracle_order: EmConfig::DEFAULT_ORDER,
        }
    }

    /// Overrides the Euler–Maclaurin term count (`None` restores the
    /// height-dependent default) and correction order.
    pub fn with_oracle(mut self, terms: Option<usize>, order: usize) -> Self {
        self.oracle_terms = terms;
        self.oracle_order = order;
        self
    }

    pub fn coefficients(&self) -> &C {
        &self.coefficients
    }

    pub fn oracle_config(&self, t: f64) -> EmConfig {
        let default = EmConfig::for_height(t);
        EmConfig {
            terms: self.oracle_terms.unwrap_or(default.terms),
            order: self.oracle_order,
        }
    }

    /// Full reference value for [`SchemeSpec::ReferenceRs`] or [`SchemeSpec::OracleEm`].
    pub fn reference(&self, scheme: &SchemeSpec, t: f64) -> Result<ReferenceValue> {
        match scheme {
            SchemeSpec::ReferenceRs => z_riemann_siegel(t),
            SchemeSpec::OracleEm => {
                let cfg = self.oracle_config(t);
                z_euler_maclaurin(t, cfg.terms, cfg.order)
            }
            _ => Err(Error::Parameter("not a reference scheme")),
        }
    }

    pub fn evaluate(&self, scheme: &SchemeSpec, t: f64) -> Result<f64> {
        self.evaluate_at_cutoff(scheme, t, scheme.cutoff_at(t))
    }

    /// Evaluates with an explicit cutoff instead of the one the scheme's
    /// policy gives at `t`. Used for one-sided limits at cutoff jumps.
    /// The cutoff is ignored by references and custom vectors.
    pub fn evaluate_at_cutoff(
        &self,
        scheme: &SchemeSpec,
        t: f64,
        cutoff: Option<usize>,
    ) -> Result<f64> {
        if !(t >= scheme.min_height()) {
            return Err(Error::Domain {
                what: "height below the scheme's domain",
                value: t,
            });
        }
        let n = || cutoff.ok_or(Error::Parameter("sectional scheme needs a cutoff"));
        match scheme {
            SchemeSpec::ReferenceRs | SchemeSpec::OracleEm => Ok(self.reference(scheme, t)?.z),
            SchemeSpec::Afe(_) => Ok(2.0 * section(t, n()?)?),
            SchemeSpec::Spira(_) => section(t, n()?),
            SchemeSpec::AcceleratedTriangle(_) => accelerated_triangle(t, n()?),
            SchemeSpec::AcceleratedCoeff(_) => {
                let coeffs = self.coefficients.accelerated(n()?)?;
                accelerated_vertical_with(t, &coeffs)
            }
            SchemeSpec::Custom(alpha) => z_custom(t, alpha),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn labels_round_trip() {
        let schemes = [
            SchemeSpec::ReferenceRs,
            SchemeSpec::OracleEm,
            SchemeSpec::afe(),
            SchemeSpec::Afe(CutoffPolicy::Fixed(8)),
            SchemeSpec::spira(),
            SchemeSpec::spira_fixed(205),
            SchemeSpec::Spira(CutoffPolicy::Afe),
            SchemeSpec::AcceleratedTriangle(CutoffPolicy::Spira),
            SchemeSpec::accelerated(),
            SchemeSpec::AcceleratedCoeff(CutoffPolicy::Fixed(205)),
        ];
        for s in schemes {
            assert_eq!(s.label().parse::<SchemeSpec>().unwrap(), s);
        }
        assert_eq!(SchemeSpec::spira_fixed(205).label(), "spira@205");
        assert!("bogus".parse::<SchemeSpec>().is_err());
        assert!("em@4".parse::<SchemeSpec>().is_err());
        assert!("spira@x".parse::<SchemeSpec>().is_err());
    }

    #[test]
    fn evaluator_dispatch() {
        let ev = Evaluator::default();
        let t = 415.0;
        assert_eq!(
            ev.evaluate(&SchemeSpec::spira(), t).unwrap(),
            section(t, 207).unwrap()
        );
        assert_eq!(
            ev.evaluate(&SchemeSpec::Afe(CutoffPolicy::Fixed(8)), t)
                .unwrap(),
            2.0 * section(t, 8).unwrap()
        );
        let custom = SchemeSpec::custom(CoefficientVector::new(vec![1.0, 0.5]).unwrap());
        assert_eq!(custom.label(), "custom[2]");
        assert!(ev.evaluate(&custom, t).unwrap().is_finite());
        assert!(ev.evaluate(&SchemeSpec::spira(), 1.0).is_err());
        assert!(ev.evaluate(&SchemeSpec::afe(), 5.0).is_err());
    }
}
