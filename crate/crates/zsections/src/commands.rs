use serde::{Deserialize, Serialize};
use zsections_core::reference::ReferenceValue;
use zsections_core::scheme::CoefficientSource;
use zsections_core::sections::section_prefixes;
use zsections_core::zeros::{referee_for, EventKind, ZeroComparison};
use zsections_core::{
    coefficient_l2_distance, CutoffPolicy, Evaluator, SchemeSpec, TimeGrid, ZeroRecord,
};

use crate::cache::CoefficientCache;
use crate::config::{Command, FigureId, RunConfig};
use crate::error::RunError;
use crate::output::{Cell, Table};
use crate::parallel;
use crate::report::{eval_summary, ErrorReport, EvalRow, EVAL_HEADER, MIN_FIT_POINTS};

pub type Engine = Evaluator<CoefficientCache>;

pub fn engine(cfg: &RunConfig) -> Engine {
    Evaluator::new(CoefficientCache::new()).with_oracle(cfg.oracle_terms, cfg.oracle_order)
}

/// What a command produced: the CSV body, its JSON summary and the number
/// of numerical hazard flags raised on the way.
#[derive(Debug, Clone)]
pub struct Output {
    pub table: Table,
    pub summary: serde_json::Value,
    pub hazards: usize,
}

impl Output {
    fn new<S: Serialize>(table: Table, summary: &S, hazards: usize) -> Result<Self, RunError> {
        Ok(Output {
            table,
            summary: serde_json::to_value(summary)?,
            hazards,
        })
    }
}

pub fn execute(cfg: &RunConfig, engine: &Engine) -> Result<Output, RunError> {
    match cfg.command {
        Command::Eval => eval(cfg, engine),
        Command::Figure { id } => figure(cfg, engine, id),
        Command::Zeros => zeros(cfg, engine),
        Command::Conjecture => conjecture(cfg, engine),
        Command::ErrorDecay => error_decay(cfg, engine),
        Command::Coeffs => coeffs(cfg, engine),
    }
}

/// Reference values whose imaginary residual exceeds this are flagged.
pub const IMAG_RESIDUAL_LIMIT: f64 = 1e-8;

fn is_hazard(r: &ReferenceValue) -> bool {
    r.near_singular || r.imag_residual.abs() > IMAG_RESIDUAL_LIMIT
}

fn check_heights(schemes: &[&SchemeSpec], points: &[f64]) -> Result<(), RunError> {
    let lowest = points.iter().copied().fold(f64::INFINITY, f64::min);
    for s in schemes {
        if lowest < s.min_height() {
            return Err(RunError::config(format!(
                "{s} needs t >= {}, got t = {lowest}",
                s.min_height()
            )));
        }
    }
    Ok(())
}

fn single<T: Copy>(values: &[T], default: T, flag: &str) -> Result<T, RunError> {
    match values {
        [] => Ok(default),
        [x] => Ok(*x),
        _ => Err(RunError::config(format!(
            "this command takes a single {flag}"
        ))),
    }
}

/// Every scheme at every height against `reference`, t-major.
fn evaluate_rows<C: CoefficientSource + Sync>(
    engine: &Evaluator<C>,
    reference: &SchemeSpec,
    schemes: &[SchemeSpec],
    points: &[f64],
) -> Result<(Vec<EvalRow>, usize), RunError> {
    let mut all: Vec<&SchemeSpec> = schemes.iter().collect();
    all.push(reference);
    check_heights(&all, points)?;
    let per_height = parallel::map_ordered(points, |&t| {
        let r = engine.reference(reference, t)?;
        let mut hazards = usize::from(is_hazard(&r));
        let mut rows = Vec::with_capacity(schemes.len());
        for s in schemes {
            let value = if s == reference {
                r.z
            } else if s.is_reference() {
                let v = engine.reference(s, t)?;
                hazards += usize::from(is_hazard(&v));
                v.z
            } else {
                engine.evaluate(s, t)?
            };
            rows.push(EvalRow {
                t,
                scheme: s.label(),
                value,
                reference: r.z,
                abs_err: (value - r.z).abs(),
            });
        }
        Ok::<_, RunError>((rows, hazards))
    })?;
    let hazards = per_height.iter().map(|(_, h)| h).sum();
    let rows = per_height.into_iter().flat_map(|(r, _)| r).collect();
    Ok((rows, hazards))
}

fn eval_table(rows: &[EvalRow]) -> Table {
    let mut table = Table::new(&EVAL_HEADER);
    for r in rows {
        table.push(vec![
            r.t.into(),
            r.scheme.as_str().into(),
            r.value.into(),
            r.reference.into(),
            r.abs_err.into(),
        ]);
    }
    table
}

pub fn eval(cfg: &RunConfig, engine: &Engine) -> Result<Output, RunError> {
    let points = cfg.points()?;
    let schemes = cfg.schemes_with_cutoff()?;
    if schemes.is_empty() {
        return Err(RunError::config("no schemes given (use --scheme)"));
    }
    let reference = cfg.reference.clone().unwrap_or(SchemeSpec::OracleEm);
    let (rows, hazards) = evaluate_rows(engine, &reference, &schemes, &points)?;
    let summary = eval_summary(&reference.label(), &rows);
    Output::new(eval_table(&rows), &summary, hazards)
}

pub const DEFAULT_DECAY_HEIGHTS: [f64; 5] = [100.0, 200.0, 400.0, 800.0, 1600.0];
pub const MIN_DECAY_HEIGHT: f64 = 50.0;

pub fn error_decay(cfg: &RunConfig, engine: &Engine) -> Result<Output, RunError> {
    let points = if cfg.heights.is_empty() && cfg.range.is_none() {
        DEFAULT_DECAY_HEIGHTS.to_vec()
    } else {
        cfg.points()?
    };
    if points.len() < MIN_FIT_POINTS {
        return Err(RunError::config(format!(
            "error-decay needs at least {MIN_FIT_POINTS} heights"
        )));
    }
    if !points.windows(2).all(|w| w[0] < w[1]) {
        return Err(RunError::config(
            "error-decay heights must be strictly increasing",
        ));
    }
    if points[0] < MIN_DECAY_HEIGHT {
        return Err(RunError::config(format!(
            "error-decay heights must be at least {MIN_DECAY_HEIGHT}"
        )));
    }
    if matches!(cfg.reference, Some(SchemeSpec::ReferenceRs)) {
        return Err(RunError::config(
            "error-decay always measures against the em oracle",
        ));
    }
    let mut schemes = cfg.schemes_with_cutoff()?;
    if schemes.is_empty() {
        schemes = vec![
            SchemeSpec::afe(),
            SchemeSpec::spira(),
            SchemeSpec::accelerated(),
        ];
    }
    if schemes.contains(&SchemeSpec::OracleEm) {
        return Err(RunError::config(
            "the oracle cannot be fitted against itself",
        ));
    }
    let reference = SchemeSpec::OracleEm;
    let (rows, hazards) = evaluate_rows(engine, &reference, &schemes, &points)?;
    let report = ErrorReport::from_rows(&reference.label(), &rows)?;
    Output::new(eval_table(&rows), &report, hazards)
}

fn ln_abs(x: f64) -> f64 {
    x.abs().ln()
}

pub fn figure(cfg: &RunConfig, engine: &Engine, id: FigureId) -> Result<Output, RunError> {
    match id {
        FigureId::Fig1 => fig1(cfg, engine),
        FigureId::Fig2 => fig2(cfg, engine),
        FigureId::Fig3 => fig3(cfg, engine),
        FigureId::Fig4 => fig4(cfg, engine),
    }
}

pub const FIG1_HEIGHT: f64 = 3000.0;
pub const FIG1_MAX_N: usize = 1500;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Fig1Summary {
    pub t: f64,
    pub n_max: usize,
    pub z_ref: f64,
    pub half_z_ref: f64,
    pub last_section: f64,
}

fn fig1(cfg: &RunConfig, engine: &Engine) -> Result<Output, RunError> {
    let t = single(&cfg.heights, FIG1_HEIGHT, "--t")?;
    let n_max = single(&cfg.n, FIG1_MAX_N, "--n")?;
    let r = engine.reference(&SchemeSpec::OracleEm, t)?;
    let prefixes = section_prefixes(t, n_max)?;
    let mut table = Table::new(&["n", "section", "z_ref", "half_z_ref"]);
    for (i, z) in prefixes.iter().enumerate() {
        table.push(vec![
            (i + 1).into(),
            (*z).into(),
            r.z.into(),
            (0.5 * r.z).into(),
        ]);
    }
    let summary = Fig1Summary {
        t,
        n_max,
        z_ref: r.z,
        half_z_ref: 0.5 * r.z,
        last_section: prefixes[n_max - 1],
    };
    Output::new(table, &summary, usize::from(is_hazard(&r)))
}

pub const FIG23_RANGE: (f64, f64, f64) = (412.0, 419.0, 0.01);
pub const FIG23_CUTOFF: usize = 205;
pub const FIG2_AFE_CUTOFF: usize = 8;

fn fig23_grid(cfg: &RunConfig) -> Result<TimeGrid, RunError> {
    if !cfg.heights.is_empty() {
        return Err(RunError::config("figures 2 and 3 take --range, not --t"));
    }
    match cfg.range {
        Some(g) => Ok(g),
        None => Ok(TimeGrid::new(FIG23_RANGE.0, FIG23_RANGE.1, FIG23_RANGE.2)?),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroCounts {
    pub scheme: String,
    pub zeros: usize,
    pub matched: usize,
    pub missed: usize,
    pub spurious: usize,
    pub max_discrepancy: Option<f64>,
    pub jump_crossings: usize,
    pub dips: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroSetSummary {
    pub interval: (f64, f64),
    pub step: f64,
    pub match_tol: f64,
    pub reference: String,
    pub reference_zeros: Vec<f64>,
    pub schemes: Vec<ZeroCounts>,
}

impl ZeroSetSummary {
    pub fn from_comparison(cmp: &ZeroComparison) -> Self {
        ZeroSetSummary {
            interval: cmp.interval,
            step: cmp.reference.grid.step,
            match_tol: cmp.match_tol,
            reference: cmp.reference.scheme.label(),
            reference_zeros: cmp.reference.locations(),
            schemes: cmp
                .schemes
                .iter()
                .map(|s| ZeroCounts {
                    scheme: s.report.scheme.label(),
                    zeros: s.report.zeros.len(),
                    matched: s.matching.pairs.len(),
                    missed: s.missed_count(),
                    spurious: s.spurious_count(),
                    max_discrepancy: s.max_discrepancy,
                    jump_crossings: s.report.jump_crossings.len(),
                    dips: s.report.dips.len(),
                })
                .collect(),
        }
    }

    pub fn scheme(&self, label: &str) -> Option<&ZeroCounts> {
        self.schemes.iter().find(|s| s.scheme == label)
    }
}

fn fig2(cfg: &RunConfig, engine: &Engine) -> Result<Output, RunError> {
    let grid = fig23_grid(cfg)?;
    let reference = SchemeSpec::OracleEm;
    let spira = SchemeSpec::spira_fixed(FIG23_CUTOFF);
    let afe = SchemeSpec::Afe(CutoffPolicy::Fixed(FIG2_AFE_CUTOFF));
    let points = grid.points();
    check_heights(&[&reference, &spira, &afe], &points)?;
    let rows = parallel::map_ordered(&points, |&t| {
        let r = engine.reference(&reference, t)?;
        let s = engine.evaluate(&spira, t)?;
        let a = engine.evaluate(&afe, t)?;
        Ok::<_, RunError>((t, r, s, a))
    })?;
    let mut table = Table::new(&["t", "ln_abs_ref", "ln_abs_spira", "ln_abs_afe"]);
    let mut hazards = 0;
    for (t, r, s, a) in &rows {
        hazards += usize::from(is_hazard(r));
        table.push(vec![
            (*t).into(),
            ln_abs(r.z).into(),
            ln_abs(*s).into(),
            ln_abs(*a).into(),
        ]);
    }
    let cmp = parallel::compare(engine, grid, &[reference, spira, afe], cfg.match_tol)?;
    Output::new(table, &ZeroSetSummary::from_comparison(&cmp), hazards)
}

/// Points with `|Z| ≤` this are left out of the log-gap comparison.
pub const FIG3_MIN_ABS_REF: f64 = 0.1;
pub const FIG3_LOG_TOL: f64 = 0.05;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Fig3Summary {
    pub scheme: String,
    pub points: usize,
    pub compared_points: usize,
    pub min_abs_ref: f64,
    pub log_tol: f64,
    pub max_ln_gap: f64,
    pub worst_t: Option<f64>,
    pub points_over_tol: usize,
}

fn fig3(cfg: &RunConfig, engine: &Engine) -> Result<Output, RunError> {
    let grid = fig23_grid(cfg)?;
    let reference = SchemeSpec::OracleEm;
    let acc = SchemeSpec::AcceleratedCoeff(CutoffPolicy::Fixed(FIG23_CUTOFF));
    let points = grid.points();
    check_heights(&[&reference, &acc], &points)?;
    let rows = parallel::map_ordered(&points, |&t| {
        let r = engine.reference(&reference, t)?;
        let a = engine.evaluate(&acc, t)?;
        Ok::<_, RunError>((t, r, a))
    })?;
    let mut table = Table::new(&["t", "ln_abs_ref", "ln_abs_accelerated", "ln_gap"]);
    let mut summary = Fig3Summary {
        scheme: acc.label(),
        points: rows.len(),
        compared_points: 0,
        min_abs_ref: FIG3_MIN_ABS_REF,
        log_tol: FIG3_LOG_TOL,
        max_ln_gap: 0.0,
        worst_t: None,
        points_over_tol: 0,
    };
    let mut hazards = 0;
    for (t, r, a) in &rows {
        hazards += usize::from(is_hazard(r));
        let gap = (ln_abs(*a) - ln_abs(r.z)).abs();
        let compared = r.z.abs() > FIG3_MIN_ABS_REF;
        if compared {
            summary.compared_points += 1;
            if gap > FIG3_LOG_TOL {
                summary.points_over_tol += 1;
            }
            if summary.worst_t.is_none() || gap > summary.max_ln_gap {
                summary.max_ln_gap = gap;
                summary.worst_t = Some(*t);
            }
        }
        table.push(vec![
            (*t).into(),
            ln_abs(r.z).into(),
            ln_abs(*a).into(),
            compared.then_some(gap).into(),
        ]);
    }
    Output::new(table, &summary, hazards)
}

pub const FIG4_ORDER: usize = 200;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Fig4Summary {
    pub n: usize,
    pub k_max: usize,
    pub alpha_first: f64,
    pub deficit_first: f64,
    pub l2_distance: f64,
}

fn fig4(cfg: &RunConfig, engine: &Engine) -> Result<Output, RunError> {
    let n = single(&cfg.n, FIG4_ORDER, "--n")?;
    let k_max = 2 * n;
    let coeffs = engine.coefficients().accelerated(n)?;
    let mut table = Table::new(&["k", "accelerated", "step", "note"]);
    for k in 1..=k_max {
        let (acc, step, note) = match k {
            _ if k <= n => (coeffs.get(k).unwrap_or(0.0), 1.0, ""),
            _ if k == n + 1 => (
                coeffs.get(k).unwrap_or(0.0),
                0.0,
                "last triangle column, a single cell 2^-(N+1)",
            ),
            _ => (0.0, 0.0, "beyond the order-N triangle"),
        };
        table.push(vec![k.into(), acc.into(), step.into(), note.into()]);
    }
    let summary = Fig4Summary {
        n,
        k_max,
        alpha_first: coeffs.as_slice()[0],
        deficit_first: coeffs.deficits()[0],
        l2_distance: coefficient_l2_distance(n)?,
    };
    Output::new(table, &summary, 0)
}

fn zero_row(scheme: &str, status: &str, z: &ZeroRecord, counterpart: Option<f64>) -> Vec<Cell> {
    vec![
        scheme.into(),
        status.into(),
        z.location.into(),
        z.bracket.0.into(),
        z.bracket.1.into(),
        z.residual.into(),
        z.iterations.into(),
        z.cutoff.into(),
        z.via_rescan.into(),
        counterpart.into(),
    ]
}

pub fn zeros(cfg: &RunConfig, engine: &Engine) -> Result<Output, RunError> {
    let Some(grid) = cfg.range else {
        return Err(RunError::config("zeros needs --range a:b:step"));
    };
    if !cfg.heights.is_empty() {
        return Err(RunError::config("zeros takes --range, not --t"));
    }
    let schemes = cfg.schemes_with_cutoff()?;
    if schemes.is_empty() {
        return Err(RunError::config("no schemes given (use --scheme)"));
    }
    let referee = cfg
        .reference
        .clone()
        .unwrap_or_else(|| referee_for(grid.end));
    let mut list = vec![referee.clone()];
    list.extend(schemes.into_iter().filter(|s| *s != referee));
    let all: Vec<&SchemeSpec> = list.iter().collect();
    check_heights(&all, &[grid.start])?;
    let cmp = parallel::compare(engine, grid, &list, cfg.match_tol)?;

    let mut table = Table::new(&[
        "scheme",
        "status",
        "location",
        "bracket_lo",
        "bracket_hi",
        "residual",
        "iterations",
        "cutoff",
        "via_rescan",
        "counterpart",
    ]);
    let ref_label = referee.label();
    let ref_locs = cmp.reference.locations();
    for z in &cmp.reference.zeros {
        table.push(zero_row(&ref_label, "reference", z, None));
    }
    for sc in &cmp.schemes {
        let label = sc.report.scheme.label();
        let mut rows: Vec<(f64, Vec<Cell>)> = Vec::new();
        for &(i, j) in &sc.matching.pairs {
            let z = &sc.report.zeros[j];
            rows.push((
                z.location,
                zero_row(&label, "matched", z, Some(ref_locs[i])),
            ));
        }
        for &j in &sc.matching.spurious {
            let z = &sc.report.zeros[j];
            rows.push((z.location, zero_row(&label, "spurious", z, None)));
        }
        for &i in &sc.matching.missed {
            let mut row = vec![Cell::Empty; 10];
            row[0] = label.as_str().into();
            row[1] = "missed".into();
            row[2] = ref_locs[i].into();
            rows.push((ref_locs[i], row));
        }
        rows.sort_by(|a, b| a.0.total_cmp(&b.0));
        for (_, row) in rows {
            table.push(row);
        }
    }
    Output::new(table, &ZeroSetSummary::from_comparison(&cmp), 0)
}

pub const CONJECTURE_DEFAULT_T: f64 = 1000.0;
pub const CONJECTURE_DEFAULT_STEP: f64 = 0.005;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConjectureReport {
    pub t_min: f64,
    pub t_max: f64,
    pub step: f64,
    pub match_tol: f64,
    pub referee: String,
    pub reference_zeros: usize,
    pub scheme_zeros: usize,
    pub matched: usize,
    pub missed: usize,
    pub spurious: usize,
    pub clean: bool,
    pub jump_crossings: usize,
    pub scheme_dips: usize,
    pub max_matched_discrepancy: Option<f64>,
}

pub fn conjecture(cfg: &RunConfig, engine: &Engine) -> Result<Output, RunError> {
    if cfg.range.is_some() {
        return Err(RunError::config(
            "conjecture always starts at 30; give the upper end with --t and the grid with --step",
        ));
    }
    let t_max = single(&cfg.heights, CONJECTURE_DEFAULT_T, "--t")?;
    let step = cfg.step.unwrap_or(CONJECTURE_DEFAULT_STEP);
    let s = parallel::conjecture(engine, t_max, step, cfg.match_tol)?;
    let mut table = Table::new(&[
        "kind",
        "location",
        "nearest_counterpart",
        "distance_to_jump",
        "cutoff",
        "scheme_value",
        "reference_value",
    ]);
    for e in &s.events {
        let kind = match e.kind {
            EventKind::Missed => "missed",
            EventKind::Spurious => "spurious",
        };
        table.push(vec![
            kind.into(),
            e.location.into(),
            e.nearest_counterpart.into(),
            e.distance_to_jump.into(),
            e.cutoff.into(),
            e.scheme_value.into(),
            e.reference_value.into(),
        ]);
    }
    let report = ConjectureReport {
        t_min: s.t_min,
        t_max: s.t_max,
        step: s.step,
        match_tol: s.match_tol,
        referee: s.referee.label(),
        reference_zeros: s.reference_zeros,
        scheme_zeros: s.scheme_zeros,
        matched: s.matched,
        missed: s.missed(),
        spurious: s.spurious(),
        clean: s.is_clean(),
        jump_crossings: s.jump_crossings,
        scheme_dips: s.scheme_dips,
        max_matched_discrepancy: s.max_matched_discrepancy,
    };
    Output::new(table, &report, 0)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoefficientSummary {
    pub n: usize,
    pub l2_distance: f64,
    pub alpha_first: f64,
    pub alpha_last: f64,
}

pub fn coeffs(cfg: &RunConfig, engine: &Engine) -> Result<Output, RunError> {
    let orders = if cfg.n.is_empty() {
        vec![FIG4_ORDER]
    } else {
        cfg.n.clone()
    };
    let mut table = Table::new(&["n", "k", "accelerated", "deficit", "step"]);
    let mut summary = Vec::with_capacity(orders.len());
    for &n in &orders {
        let c = engine.coefficients().accelerated(n)?;
        for (i, (a, d)) in c.as_slice().iter().zip(c.deficits()).enumerate() {
            let k = i + 1;
            let step = if k <= n { 1.0 } else { 0.0 };
            table.push(vec![
                n.into(),
                k.into(),
                (*a).into(),
                (*d).into(),
                step.into(),
            ]);
        }
        summary.push(CoefficientSummary {
            n,
            l2_distance: coefficient_l2_distance(n)?,
            alpha_first: c.as_slice()[0],
            alpha_last: *c.as_slice().last().expect("at least two coefficients"),
        });
    }
    Output::new(table, &summary, 0)
}
