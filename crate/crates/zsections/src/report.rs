//! Row types and the summaries computed from them.
//!
//! Summaries depend only on the values that end up in the CSV, and those are
//! written with round-trip precision, so reading a CSV back and summarising
//! it again reproduces the JSON summary exactly.

use std::io::Read;

use serde::{Deserialize, Serialize};
use zsections_core::SchemeSpec;

use crate::error::RunError;

/// One `(t, scheme)` evaluation, as written by `eval` and `error-decay`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalRow {
    pub t: f64,
    pub scheme: String,
    pub value: f64,
    #[serde(rename = "ref")]
    pub reference: f64,
    pub abs_err: f64,
}

pub const EVAL_HEADER: [&str; 5] = ["t", "scheme", "value", "ref", "abs_err"];

pub fn read_eval_rows<R: Read>(reader: R) -> Result<Vec<EvalRow>, RunError> {
    csv::Reader::from_reader(reader)
        .deserialize()
        .collect::<Result<_, _>>()
        .map_err(Into::into)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SchemeErrors {
    pub scheme: String,
    pub points: usize,
    pub max_abs_err: f64,
    pub median_abs_err: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalSummary {
    pub reference: String,
    pub rows: usize,
    pub schemes: Vec<SchemeErrors>,
}

/// Scheme labels in order of first appearance.
fn scheme_order(rows: &[EvalRow]) -> Vec<&str> {
    let mut order: Vec<&str> = Vec::new();
    for r in rows {
        if !order.contains(&r.scheme.as_str()) {
            order.push(&r.scheme);
        }
    }
    order
}

pub fn median(xs: &[f64]) -> f64 {
    let mut v = xs.to_vec();
    v.sort_by(f64::total_cmp);
    let n = v.len();
    match n {
        0 => f64::NAN,
        _ if n % 2 == 1 => v[n / 2],
        _ => 0.5 * (v[n / 2 - 1] + v[n / 2]),
    }
}

fn errors_for(rows: &[EvalRow], scheme: &str) -> SchemeErrors {
    let errs: Vec<f64> = rows
        .iter()
        .filter(|r| r.scheme == scheme)
        .map(|r| r.abs_err)
        .collect();
    SchemeErrors {
        scheme: scheme.to_owned(),
        points: errs.len(),
        max_abs_err: errs.iter().copied().fold(0.0, f64::max),
        median_abs_err: median(&errs),
    }
}

pub fn eval_summary(reference: &str, rows: &[EvalRow]) -> EvalSummary {
    EvalSummary {
        reference: reference.to_owned(),
        rows: rows.len(),
        schemes: scheme_order(rows)
            .into_iter()
            .map(|s| errors_for(rows, s))
            .collect(),
    }
}

/// How the error of a scheme is expected to fall off with height.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FitModel {
    /// `ln err` linear in `ln t` (algebraic decay).
    LnLn,
    /// `ln err` linear in `t` (exponential decay).
    LnLinear,
}

impl FitModel {
    /// Exponential for the accelerated schemes, algebraic for the rest.
    pub fn for_label(label: &str) -> FitModel {
        match label.parse::<SchemeSpec>() {
            Ok(SchemeSpec::AcceleratedCoeff(_) | SchemeSpec::AcceleratedTriangle(_)) => {
                FitModel::LnLinear
            }
            _ => FitModel::LnLn,
        }
    }
}

/// Least-squares line through `(x, ln err)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Fit {
    pub model: FitModel,
    pub slope: f64,
    pub intercept: f64,
    /// `ln err - (intercept + slope x)` at each point.
    pub residuals: Vec<f64>,
}

pub const MIN_FIT_POINTS: usize = 3;

pub fn fit_line(model: FitModel, t: &[f64], err: &[f64]) -> Result<Fit, RunError> {
    if t.len() < MIN_FIT_POINTS {
        return Err(RunError::config(format!(
            "a decay fit needs at least {MIN_FIT_POINTS} heights, got {}",
            t.len()
        )));
    }
    if let Some(i) = err.iter().position(|&e| !(e > 0.0 && e.is_finite())) {
        return Err(RunError::config(format!(
            "error {} at t = {} cannot be fitted on a log scale",
            err[i], t[i]
        )));
    }
    let xs: Vec<f64> = match model {
        FitModel::LnLn => t.iter().map(|x| x.ln()).collect(),
        FitModel::LnLinear => t.to_vec(),
    };
    let ys: Vec<f64> = err.iter().map(|e| e.ln()).collect();
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    if !(sxx > 0.0) {
        return Err(RunError::config("decay fit needs distinct heights"));
    }
    let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let residuals = xs
        .iter()
        .zip(&ys)
        .map(|(x, y)| y - (intercept + slope * x))
        .collect();
    Ok(Fit {
        model,
        slope,
        intercept,
        residuals,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SchemeDecay {
    #[serde(flatten)]
    pub errors: SchemeErrors,
    pub fit: Fit,
}

/// Per-scheme errors against the oracle with fitted decay rates.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorReport {
    pub reference: String,
    pub heights: Vec<f64>,
    pub schemes: Vec<SchemeDecay>,
}

impl ErrorReport {
    pub fn from_rows(reference: &str, rows: &[EvalRow]) -> Result<Self, RunError> {
        let mut heights: Vec<f64> = Vec::new();
        for r in rows {
            if !heights.contains(&r.t) {
                heights.push(r.t);
            }
        }
        let schemes = scheme_order(rows)
            .into_iter()
            .map(|s| {
                let (t, e): (Vec<f64>, Vec<f64>) = rows
                    .iter()
                    .filter(|r| r.scheme == s)
                    .map(|r| (r.t, r.abs_err))
                    .unzip();
                Ok(SchemeDecay {
                    errors: errors_for(rows, s),
                    fit: fit_line(FitModel::for_label(s), &t, &e)?,
                })
            })
            .collect::<Result<_, RunError>>()?;
        Ok(ErrorReport {
            reference: reference.to_owned(),
            heights,
            schemes,
        })
    }

    pub fn scheme(&self, label: &str) -> Option<&SchemeDecay> {
        self.schemes.iter().find(|s| s.errors.scheme == label)
    }
}
