//! Parallel versions of the core scans.
//!
//! Grid samples are evaluated with rayon and collected in grid order, and
//! everything after evaluation runs on one thread, so results do not depend
//! on the number of workers.

use rayon::prelude::*;
use zsections_core::scheme::CoefficientSource;
use zsections_core::zeros::{
    conjecture_grid, referee_for, referee_index, ConjectureSummary, ScanOptions, ScanPlan,
    ScanReport, CONJECTURE_CEILING,
};
use zsections_core::{Evaluator, Result, SchemeSpec, TimeGrid};

use zsections_core::zeros::ZeroComparison;

/// Evaluates `f` at every item, in parallel, keeping input order.
pub fn map_ordered<T, R, E, F>(items: &[T], f: F) -> std::result::Result<Vec<R>, E>
where
    T: Sync,
    R: Send,
    E: Send,
    F: Fn(&T) -> std::result::Result<R, E> + Sync + Send,
{
    items.par_iter().map(f).collect()
}

pub fn scan<C: CoefficientSource + Sync>(
    evaluator: &Evaluator<C>,
    scheme: &SchemeSpec,
    grid: TimeGrid,
    opts: &ScanOptions,
) -> Result<ScanReport> {
    let plan = ScanPlan::new(scheme, grid)?;
    let values = map_ordered(plan.samples(), |s| {
        evaluator.evaluate_at_cutoff(scheme, s.t, s.cutoff)
    })?;
    plan.finish(
        &values,
        |t, n| evaluator.evaluate_at_cutoff(scheme, t, n),
        opts,
    )
}

/// Scans every scheme on the grid and matches the non-reference ones
/// against the first reference scheme listed.
pub fn compare<C: CoefficientSource + Sync>(
    evaluator: &Evaluator<C>,
    grid: TimeGrid,
    schemes: &[SchemeSpec],
    match_tol: f64,
) -> Result<ZeroComparison> {
    let referee = referee_index(schemes)?;
    let opts = ScanOptions::default();
    let reference = scan(evaluator, &schemes[referee], grid, &opts)?;
    let others = schemes
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != referee)
        .map(|(_, s)| scan(evaluator, s, grid, &opts))
        .collect::<Result<Vec<_>>>()?;
    Ok(ZeroComparison::from_reports(reference, others, match_tol))
}

/// Spira's scheme against the referee on `[30, t_max]`.
pub fn conjecture<C: CoefficientSource + Sync>(
    evaluator: &Evaluator<C>,
    t_max: f64,
    step: f64,
    match_tol: f64,
) -> Result<ConjectureSummary> {
    let Some(grid) = conjecture_grid(t_max, step, CONJECTURE_CEILING)? else {
        return Ok(ConjectureSummary::empty(t_max, step, match_tol));
    };
    let opts = ScanOptions::default();
    let spira = scan(evaluator, &SchemeSpec::spira(), grid, &opts)?;
    let reference = scan(evaluator, &referee_for(t_max), grid, &opts)?;
    ConjectureSummary::from_reports(spira, reference, match_tol, |s, t| evaluator.evaluate(s, t))
}
