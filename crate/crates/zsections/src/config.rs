use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use zsections_core::{CoefficientVector, CutoffPolicy, SchemeSpec, TimeGrid};

use crate::error::RunError;

#[derive(Debug, Parser)]
#[command(
    name = "zsections",
    version,
    about = "Sectional approximations of the Hardy Z-function: evaluation, zeros and figure data"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub options: Options,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Subcommand)]
pub enum Command {
    /// Evaluate schemes at heights and compare them with a reference.
    Eval,
    /// Emit the data behind one of the four figures.
    Figure {
        #[arg(value_enum)]
        id: FigureId,
    },
    /// Locate real zeros of schemes on a range and match them to a reference.
    Zeros,
    /// Compare the zeros of Spira's section with the reference on [30, T].
    Conjecture,
    /// Fit error decay rates against the Euler-Maclaurin oracle.
    ErrorDecay,
    /// Print accelerated and step coefficient vectors.
    Coeffs,
}

impl Command {
    pub fn name(self) -> String {
        match self {
            Command::Eval => "eval".into(),
            Command::Figure { id } => format!("figure {id}"),
            Command::Zeros => "zeros".into(),
            Command::Conjecture => "conjecture".into(),
            Command::ErrorDecay => "error-decay".into(),
            Command::Coeffs => "coeffs".into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FigureId {
    Fig1,
    Fig2,
    Fig3,
    Fig4,
}

impl fmt::Display for FigureId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            FigureId::Fig1 => "fig1",
            FigureId::Fig2 => "fig2",
            FigureId::Fig3 => "fig3",
            FigureId::Fig4 => "fig4",
        };
        f.write_str(name)
    }
}

/// `a:b:step` on the command line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RangeArg {
    pub start: f64,
    pub end: f64,
    pub step: f64,
}

impl FromStr for RangeArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let [a, b, step] = parts.as_slice() else {
            return Err(format!("expected a:b:step, got {s:?}"));
        };
        let num = |x: &str| {
            x.trim()
                .parse::<f64>()
                .map_err(|_| format!("{x:?} is not a number"))
        };
        Ok(RangeArg {
            start: num(a)?,
            end: num(b)?,
            step: num(step)?,
        })
    }
}

#[derive(Debug, Clone, Default, Args)]
pub struct Options {
    /// Heights, comma separated (for conjecture: the upper end T).
    #[arg(long = "t", global = true, value_delimiter = ',')]
    pub t: Vec<f64>,
    /// Height grid as start:end:step.
    #[arg(long, global = true)]
    pub range: Option<RangeArg>,
    /// Schemes: rs, em, afe, spira, acc-coeff, acc-triangle, optionally with
    /// @N, @afe or @spira for the cutoff, or custom:<file>.
    #[arg(long, global = true, value_delimiter = ',')]
    pub scheme: Vec<String>,
    /// Cutoff override for eval and zeros; order(s) for coeffs and fig4;
    /// largest N for fig1.
    #[arg(long, global = true, value_delimiter = ',')]
    pub n: Vec<usize>,
    /// Grid step of the conjecture sweep.
    #[arg(long, global = true)]
    pub step: Option<f64>,
    /// CSV output path; the JSON summary goes next to it with a .json
    /// extension. Without it CSV goes to stdout and JSON to stderr.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads (default: one per core).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Euler-Maclaurin direct-sum length (default: max(100, 2*ceil(t))).
    #[arg(long, global = true)]
    pub oracle_terms: Option<usize>,
    /// Euler-Maclaurin correction order.
    #[arg(long, global = true, default_value_t = 6)]
    pub oracle_order: usize,
    /// Zero matching tolerance.
    #[arg(long, global = true, default_value_t = 0.05)]
    pub match_tol: f64,
    /// Reference scheme, em or rs.
    #[arg(long, global = true)]
    pub reference: Option<String>,
    /// Numerical hazard flags tolerated before exiting with status 3.
    #[arg(long, global = true, default_value_t = 0)]
    pub max_hazards: usize,
}

/// A validated invocation.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub heights: Vec<f64>,
    pub range: Option<TimeGrid>,
    pub schemes: Vec<SchemeSpec>,
    pub n: Vec<usize>,
    pub step: Option<f64>,
    pub out: Option<PathBuf>,
    pub threads: Option<usize>,
    pub oracle_terms: Option<usize>,
    pub oracle_order: usize,
    pub match_tol: f64,
    pub reference: Option<SchemeSpec>,
    pub max_hazards: usize,
}

impl RunConfig {
    /// Defaults for `command`, as if no flag had been given.
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            heights: Vec::new(),
            range: None,
            schemes: Vec::new(),
            n: Vec::new(),
            step: None,
            out: None,
            threads: None,
            oracle_terms: None,
            oracle_order: 6,
            match_tol: 0.05,
            reference: None,
            max_hazards: 0,
        }
    }

    pub fn from_cli(cli: Cli) -> Result<Self, RunError> {
        let o = cli.options;
        let mut cfg = RunConfig::new(cli.command);
        for &t in &o.t {
            if !(t.is_finite() && t > 0.0) {
                return Err(RunError::config(format!(
                    "--t values must be positive, got {t}"
                )));
            }
        }
        cfg.heights = o.t;
        cfg.range = o
            .range
            .map(|r| {
                if !(r.start > 0.0) {
                    return Err(RunError::config("--range must start above 0"));
                }
                TimeGrid::new(r.start, r.end, r.step)
                    .map_err(|e| RunError::config(format!("--range: {e}")))
            })
            .transpose()?;
        cfg.schemes = o
            .scheme
            .iter()
            .map(|s| parse_scheme(s))
            .collect::<Result<_, _>>()?;
        if o.n.contains(&0) {
            return Err(RunError::config("--n must be at least 1"));
        }
        cfg.n = o.n;
        if let Some(step) = o.step {
            if !(step.is_finite() && step > 0.0) {
                return Err(RunError::config("--step must be positive"));
            }
        }
        cfg.step = o.step;
        if let Some(out) = &o.out {
            if out.extension().is_some_and(|e| e == "json") {
                return Err(RunError::config(
                    "--out names the CSV file; the JSON summary is written next to it",
                ));
            }
        }
        cfg.out = o.out;
        if o.threads == Some(0) {
            return Err(RunError::config("--threads must be at least 1"));
        }
        cfg.threads = o.threads;
        if o.oracle_terms == Some(0) {
            return Err(RunError::config("--oracle-terms must be at least 1"));
        }
        cfg.oracle_terms = o.oracle_terms;
        if !(1..=zsections_core::reference::EM_MAX_ORDER).contains(&o.oracle_order) {
            return Err(RunError::config(format!(
                "--oracle-order must lie in 1..={}",
                zsections_core::reference::EM_MAX_ORDER
            )));
        }
        cfg.oracle_order = o.oracle_order;
        if !(o.match_tol.is_finite() && o.match_tol > 0.0) {
            return Err(RunError::config("--match-tol must be positive"));
        }
        cfg.match_tol = o.match_tol;
        cfg.reference = o
            .reference
            .map(|r| {
                let s = parse_scheme(&r)?;
                if s.is_reference() {
                    Ok(s)
                } else {
                    Err(RunError::config("--reference must be em or rs"))
                }
            })
            .transpose()?;
        cfg.max_hazards = o.max_hazards;
        Ok(cfg)
    }

    /// Heights from `--t` or `--range` (exactly one of them).
    pub fn points(&self) -> Result<Vec<f64>, RunError> {
        match (&self.range, self.heights.is_empty()) {
            (Some(_), false) => Err(RunError::config("give either --t or --range, not both")),
            (Some(g), true) => Ok(g.points()),
            (None, false) => Ok(self.heights.clone()),
            (None, true) => Err(RunError::config("no heights given (use --t or --range)")),
        }
    }

    /// Schemes with `--n` applied as a fixed cutoff.
    pub fn schemes_with_cutoff(&self) -> Result<Vec<SchemeSpec>, RunError> {
        let n = match self.n.as_slice() {
            [] => return Ok(self.schemes.clone()),
            [n] => *n,
            _ => return Err(RunError::config("this command takes a single --n")),
        };
        Ok(self
            .schemes
            .iter()
            .map(|s| match s {
                SchemeSpec::Afe(_) => SchemeSpec::Afe(CutoffPolicy::Fixed(n)),
                SchemeSpec::Spira(_) => SchemeSpec::Spira(CutoffPolicy::Fixed(n)),
                SchemeSpec::AcceleratedTriangle(_) => {
                    SchemeSpec::AcceleratedTriangle(CutoffPolicy::Fixed(n))
                }
                SchemeSpec::AcceleratedCoeff(_) => {
                    SchemeSpec::AcceleratedCoeff(CutoffPolicy::Fixed(n))
                }
                other => other.clone(),
            })
            .collect())
    }

    /// The JSON echo of this configuration.
    pub fn echo(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Echo<'a> {
            heights: &'a [f64],
            range: Option<[f64; 3]>,
            schemes: Vec<String>,
            n: &'a [usize],
            step: Option<f64>,
            threads: Option<usize>,
            oracle_terms: Option<usize>,
            oracle_order: usize,
            match_tol: f64,
            reference: Option<String>,
            max_hazards: usize,
        }
        let echo = Echo {
            heights: &self.heights,
            range: self.range.map(|g| [g.start, g.end, g.step]),
            schemes: self.schemes.iter().map(SchemeSpec::label).collect(),
            n: &self.n,
            step: self.step,
            threads: self.threads,
            oracle_terms: self.oracle_terms,
            oracle_order: self.oracle_order,
            match_tol: self.match_tol,
            reference: self.reference.as_ref().map(SchemeSpec::label),
            max_hazards: self.max_hazards,
        };
        serde_json::to_value(echo).expect("config echo is plain data")
    }
}

/// A scheme label, or `custom:<file>` with whitespace or comma separated
/// coefficients.
pub fn parse_scheme(s: &str) -> Result<SchemeSpec, RunError> {
    if let Some(path) = s.strip_prefix("custom:") {
        return read_custom(Path::new(path)).map(|v| SchemeSpec::Custom(Arc::new(v)));
    }
    s.parse()
        .map_err(|e| RunError::config(format!("scheme {s:?}: {e}")))
}

fn read_custom(path: &Path) -> Result<CoefficientVector, RunError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| RunError::config(format!("{}: {e}", path.display())))?;
    let alpha = text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<f64>()
                .map_err(|_| RunError::config(format!("{}: {s:?} is not a number", path.display())))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if alpha.is_empty() {
        return Err(RunError::config(format!(
            "{}: no coefficients",
            path.display()
        )));
    }
    CoefficientVector::new(alpha).map_err(|e| RunError::config(format!("{}: {e}", path.display())))
}
