use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Everything that can go wrong inside the numerical core.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An argument lies outside the domain of the function.
    Domain { what: &'static str, value: f64 },
    /// A parameter is malformed (bad ordering, zero step, ...).
    Parameter(&'static str),
    /// The Euler–Maclaurin tail did not converge with the requested order.
    Convergence { last_correction: f64, running: f64 },
    /// The request exceeds a configured size limit.
    Resource { requested: usize, limit: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain { what, value } => write!(f, "domain error: {what} (got {value})"),
            Error::Parameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::Convergence {
                last_correction,
                running,
            } => write!(
                f,
                "Euler-Maclaurin correction {last_correction:e} too large relative to {running:e}"
            ),
            Error::Resource { requested, limit } => {
                write!(f, "requested order {requested} exceeds the limit {limit}")
            }
        }
    }
}

impl core::error::Error for Error {}
