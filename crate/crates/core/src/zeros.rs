//! Real zeros of a scheme by sign-change bracketing and bisection.
//!
//! A scan walks a uniform [`TimeGrid`]. For sectional schemes the cutoff is
//! re-resolved at every point, so the scanned function is piecewise
//! continuous with jumps where the cutoff changes (every even integer for
//! Spira's `floor(t/2)`). The jump heights are inserted into the sample set
//! and both one-sided limits are evaluated there: sign changes inside a
//! continuous piece are bisected into [`ZeroRecord`]s, while sign changes
//! across a jump are reported separately as [`JumpCrossing`]s and are not
//! zeros.
//!
//! Sign changes cannot reveal a pair of zeros that fall between two grid
//! points. A same-sign local minimum of `|f|` below
//! [`ScanOptions::dip_threshold`] triggers a re-scan of its neighbourhood at
//! a finer step; whatever that finds is marked `via_rescan`.
//!
//! The scan is split into [`ScanPlan::new`] (which sample points are
//! needed), the evaluation of those samples, and [`ScanPlan::finish`]
//! (bracketing and refinement), so a caller can evaluate the samples in
//! parallel and still get bit-identical results.

use alloc::vec::Vec;

// Unused whenever std is in the crate graph, since its inherent f64 methods win.
#[allow(unused_imports)]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::scheme::{CoefficientSource, Evaluator, SchemeSpec};

/// Uniform grid `start, start + step, ..., end` (the last point is `end`
/// even when the range is not a multiple of `step`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimeGrid {
    pub start: f64,
    pub end: f64,
    pub step: f64,
}

impl TimeGrid {
    pub fn new(start: f64, end: f64, step: f64) -> Result<Self> {
        if !(start.is_finite() && end.is_finite() && step.is_finite()) {
            return Err(Error::Parameter("grid bounds and step must be finite"));
        }
        if !(start < end) {
            return Err(Error::Parameter("grid needs start < end"));
        }
        if !(step > 0.0) {
            return Err(Error::Parameter("grid step must be positive"));
        }
        if step > end - start {
            return Err(Error::Parameter("grid step exceeds the interval length"));
        }
        Ok(TimeGrid { start, end, step })
    }

    pub fn points(&self) -> Vec<f64> {
        let intervals = ((self.end - self.start) / self.step + 1e-9).floor() as usize;
        let mut pts: Vec<f64> = (0..=intervals)
            .map(|i| self.start + i as f64 * self.step)
            .collect();
        let last = pts.last_mut().expect("grid has at least two points");
        if (*last - self.end).abs() <= 1e-9 * self.step {
            *last = self.end;
        } else if *last < self.end {
            pts.push(self.end);
        }
        pts
    }

    pub fn len(&self) -> usize {
        self.points().len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScanOptions {
    /// Bisection stops once the bracket is at most this wide.
    pub refine_width: f64,
    pub max_iterations: usize,
    /// Same-sign minima of `|f|` below this value are re-scanned.
    pub dip_threshold: f64,
    /// The re-scan step is the grid step divided by this factor.
    pub rescan_factor: usize,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            refine_width: 1e-9,
            max_iterations: 60,
            dip_threshold: 0.1,
            rescan_factor: 10,
        }
    }
}

/// A refined real zero.
#[derive(Debug, Clone, PartialEq)]
pub struct ZeroRecord {
    pub scheme: SchemeSpec,
    pub location: f64,
    pub bracket: (f64, f64),
    /// `|f(location)|`.
    pub residual: f64,
    pub iterations: usize,
    /// Cutoff of the continuous piece containing the zero.
    pub cutoff: Option<usize>,
    pub via_rescan: bool,
}

/// A sign change across a cutoff jump; not a zero of either piece.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JumpCrossing {
    pub t: f64,
    pub left: f64,
    pub right: f64,
    pub left_cutoff: usize,
    pub right_cutoff: usize,
}

/// A same-sign dip of `|f|` whose re-scan found no sign change.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dip {
    pub t: f64,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ScanReport {
    pub scheme: SchemeSpec,
    pub grid: TimeGrid,
    pub zeros: Vec<ZeroRecord>,
    pub jump_crossings: Vec<JumpCrossing>,
    pub dips: Vec<Dip>,
}

impl ScanReport {
    pub fn locations(&self) -> Vec<f64> {
        self.zeros.iter().map(|z| z.location).collect()
    }
}

/// One point at which the scheme must be evaluated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Sample {
    pub t: f64,
    pub cutoff: Option<usize>,
}

#[derive(Debug, Clone, Copy)]
struct Node {
    t: f64,
    left: Option<usize>,
    right: Option<usize>,
    left_sample: usize,
    right_sample: usize,
}

/// The sample set of a scan, before evaluation.
#[derive(Debug, Clone)]
pub struct ScanPlan {
    scheme: SchemeSpec,
    grid: TimeGrid,
    nodes: Vec<Node>,
    samples: Vec<Sample>,
}

#[inline]
fn positive(x: f64) -> bool {
    x >= 0.0
}

impl ScanPlan {
    pub fn new(scheme: &SchemeSpec, grid: TimeGrid) -> Result<Self> {
        if !(grid.start > 0.0) {
            return Err(Error::Parameter("scan interval must start above 0"));
        }
        if grid.start < scheme.min_height() {
            return Err(Error::Domain {
                what: "scan interval starts below the scheme's domain",
                value: grid.start,
            });
        }
        let policy = scheme.cutoff_policy();
        let grid_points = grid.points();
        let mut heights = Vec::with_capacity(grid_points.len());
        for w in grid_points.windows(2) {
            heights.push(w[0]);
            if let Some(p) = policy {
                let mut cur = w[0];
                while let Some(j) = p.next_jump_after(cur) {
                    if j >= w[1] {
                        break;
                    }
                    heights.push(j);
                    cur = j;
                }
            }
        }
        heights.push(grid.end);

        let mut nodes = Vec::with_capacity(heights.len());
        let mut samples = Vec::with_capacity(heights.len());
        let mut prev: Option<Option<usize>> = None;
        for t in heights {
            let right = policy.map(|p| p.resolve(t));
            let left = prev.unwrap_or(right);
            let right_sample = samples.len();
            samples.push(Sample { t, cutoff: right });
            let left_sample = if left != right {
                samples.push(Sample { t, cutoff: left });
                samples.len() - 1
            } else {
                right_sample
            };
            nodes.push(Node {
                t,
                left,
                right,
                left_sample,
                right_sample,
            });
            prev = Some(right);
        }
        Ok(ScanPlan {
            scheme: scheme.clone(),
            grid,
            nodes,
            samples,
        })
    }

    pub fn samples(&self) -> &[Sample] {
        &self.samples
    }

    pub fn scheme(&self) -> &SchemeSpec {
        &self.scheme
    }

    /// Brackets, refines and re-scans given the values of [`samples`](Self::samples)
    /// (in the same order). `f` evaluates the scheme at a height with an
    /// explicit cutoff.
    pub fn finish<F>(&self, values: &[f64], f: F, opts: &ScanOptions) -> Result<ScanReport>
    where
        F: Fn(f64, Option<usize>) -> Result<f64>,
    {
        if values.len() != self.samples.len() {
            return Err(Error::Parameter("one value per sample is required"));
        }
        if let Some((i, v)) = values.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(Error::Domain {
                what: "scheme value is not finite",
                value: if v.is_nan() { self.samples[i].t } else { *v },
            });
        }
        let left = |i: usize| values[self.nodes[i].left_sample];
        let right = |i: usize| values[self.nodes[i].right_sample];

        let mut zeros = Vec::new();
        let mut jump_crossings = Vec::new();
        let mut dips = Vec::new();

        for (i, node) in self.nodes.iter().enumerate() {
            if node.left != node.right && positive(left(i)) != positive(right(i)) {
                jump_crossings.push(JumpCrossing {
                    t: node.t,
                    left: left(i),
                    right: right(i),
                    left_cutoff: node.left.unwrap_or(0),
                    right_cutoff: node.right.unwrap_or(0),
                });
            }
            if i + 1 < self.nodes.len() {
                let next = &self.nodes[i + 1];
                let (flo, fhi) = (right(i), left(i + 1));
                if positive(flo) != positive(fhi) {
                    let g = |t| f(t, node.right);
                    zeros.push(self.bisect(g, node.t, next.t, flo, node.right, false, opts)?);
                }
            }
            if i > 0 && i + 1 < self.nodes.len() {
                let (prev, next) = (&self.nodes[i - 1], &self.nodes[i + 1]);
                let same_piece =
                    prev.right == node.left && node.left == node.right && node.right == next.left;
                let (a, b, c) = (right(i - 1), right(i), left(i + 1));
                if same_piece
                    && positive(a) == positive(b)
                    && positive(b) == positive(c)
                    && b.abs() < opts.dip_threshold
                    && b.abs() <= a.abs()
                    && b.abs() < c.abs()
                {
                    let found = self.rescan(&f, prev.t, next.t, node.right, opts)?;
                    if found.is_empty() {
                        dips.push(Dip {
                            t: node.t,
                            value: b,
                        });
                    }
                    zeros.extend(found);
                }
            }
        }
        zeros.sort_by(|x, y| x.location.total_cmp(&y.location));
        Ok(ScanReport {
            scheme: self.scheme.clone(),
            grid: self.grid,
            zeros,
            jump_crossings,
            dips,
        })
    }

    fn rescan<F>(
        &self,
        f: &F,
        lo: f64,
        hi: f64,
        cutoff: Option<usize>,
        opts: &ScanOptions,
    ) -> Result<Vec<ZeroRecord>>
    where
        F: Fn(f64, Option<usize>) -> Result<f64>,
    {
        let fine = self.grid.step / opts.rescan_factor.max(1) as f64;
        let count = ((hi - lo) / fine).round().max(1.0) as usize;
        let g = |t| f(t, cutoff);
        let mut found = Vec::new();
        let mut prev_t = lo;
        let mut prev_v = g(lo)?;
        for j in 1..=count {
            let t = if j == count { hi } else { lo + j as f64 * fine };
            let v = g(t)?;
            if positive(v) != positive(prev_v) {
                found.push(self.bisect(g, prev_t, t, prev_v, cutoff, true, opts)?);
            }
            prev_t = t;
            prev_v = v;
        }
        Ok(found)
    }

    #[allow(clippy::too_many_arguments)]
    fn bisect<G>(
        &self,
        g: G,
        mut lo: f64,
        mut hi: f64,
        mut flo: f64,
        cutoff: Option<usize>,
        via_rescan: bool,
        opts: &ScanOptions,
    ) -> Result<ZeroRecord>
    where
        G: Fn(f64) -> Result<f64>,
    {
        let mut iterations = 0;
        while hi - lo > opts.refine_width && iterations < opts.max_iterations {
            let mid = lo + 0.5 * (hi - lo);
            if mid <= lo || mid >= hi {
                break;
            }
            let fm = g(mid)?;
            if positive(fm) == positive(flo) {
                lo = mid;
                flo = fm;
            } else {
                hi = mid;
            }
            iterations += 1;
        }
        let location = lo + 0.5 * (hi - lo);
        Ok(ZeroRecord {
            scheme: self.scheme.clone(),
            location,
            bracket: (lo, hi),
            residual: g(location)?.abs(),
            iterations,
            cutoff,
            via_rescan,
        })
    }
}

/// Sequential scan of `scheme` on `[a, b]` with grid step `step`.
pub fn scan_zeros<C: CoefficientSource>(
    evaluator: &Evaluator<C>,
    scheme: &SchemeSpec,
    a: f64,
    b: f64,
    step: f64,
) -> Result<ScanReport> {
    scan_zeros_with(
        evaluator,
        scheme,
        TimeGrid::new(a, b, step)?,
        &ScanOptions::default(),
    )
}

pub fn scan_zeros_with<C: CoefficientSource>(
    evaluator: &Evaluator<C>,
    scheme: &SchemeSpec,
    grid: TimeGrid,
    opts: &ScanOptions,
) -> Result<ScanReport> {
    let plan = ScanPlan::new(scheme, grid)?;
    let f = |t: f64, n: Option<usize>| evaluator.evaluate_at_cutoff(scheme, t, n);
    let values = plan
        .samples()
        .iter()
        .map(|s| f(s.t, s.cutoff))
        .collect::<Result<Vec<_>>>()?;
    plan.finish(&values, f, opts)
}

/// Injective nearest-first matching of two sorted zero lists.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Matching {
    /// `(reference index, candidate index)`, sorted by reference index.
    pub pairs: Vec<(usize, usize)>,
    /// Reference zeros with no candidate within tolerance.
    pub missed: Vec<usize>,
    /// Candidate zeros with no reference zero within tolerance.
    pub spurious: Vec<usize>,
}

/// Greedy matching: all pairs within `tol` are taken in order of increasing
/// distance (ties broken by index), skipping pairs whose ends are used.
pub fn match_zeros(reference: &[f64], candidate: &[f64], tol: f64) -> Matching {
    let mut pairs: Vec<(f64, usize, usize)> = Vec::new();
    let mut start = 0;
    for (i, &r) in reference.iter().enumerate() {
        while start < candidate.len() && candidate[start] < r - tol {
            start += 1;
        }
        for (j, &c) in candidate.iter().enumerate().skip(start) {
            if c > r + tol {
                break;
            }
            pairs.push(((c - r).abs(), i, j));
        }
    }
    pairs.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.cmp(&y.1)).then(x.2.cmp(&y.2)));
    let mut ref_used = alloc::vec![false; reference.len()];
    let mut cand_used = alloc::vec![false; candidate.len()];
    let mut accepted = Vec::new();
    for (_, i, j) in pairs {
        if !ref_used[i] && !cand_used[j] {
            ref_used[i] = true;
            cand_used[j] = true;
            accepted.push((i, j));
        }
    }
    accepted.sort_unstable();
    Matching {
        pairs: accepted,
        missed: (0..reference.len()).filter(|&i| !ref_used[i]).collect(),
        spurious: (0..candidate.len()).filter(|&j| !cand_used[j]).collect(),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SchemeComparison {
    pub report: ScanReport,
    pub matching: Matching,
    /// Largest `|candidate - reference|` over matched pairs.
    pub max_discrepancy: Option<f64>,
}

impl SchemeComparison {
    pub fn missed_count(&self) -> usize {
        self.matching.missed.len()
    }

    pub fn spurious_count(&self) -> usize {
        self.matching.spurious.len()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ZeroComparison {
    pub interval: (f64, f64),
    pub match_tol: f64,
    pub reference: ScanReport,
    pub schemes: Vec<SchemeComparison>,
}

impl ZeroComparison {
    pub fn from_reports(reference: ScanReport, others: Vec<ScanReport>, match_tol: f64) -> Self {
        let ref_locs = reference.locations();
        let schemes = others
            .into_iter()
            .map(|report| {
                let locs = report.locations();
                let matching = match_zeros(&ref_locs, &locs, match_tol);
                let max_discrepancy = matching
                    .pairs
                    .iter()
                    .map(|&(i, j)| (locs[j] - ref_locs[i]).abs())
                    .fold(None, |m: Option<f64>, d| Some(m.map_or(d, |m| m.max(d))));
                SchemeComparison {
                    report,
                    matching,
                    max_discrepancy,
                }
            })
            .collect();
        ZeroComparison {
            interval: (reference.grid.start, reference.grid.end),
            match_tol,
            reference,
            schemes,
        }
    }
}

/// Index of the referee in `schemes`: the first reference scheme.
pub fn referee_index(schemes: &[SchemeSpec]) -> Result<usize> {
    schemes
        .iter()
        .position(SchemeSpec::is_reference)
        .ok_or(Error::Parameter(
            "comparison needs a reference scheme (rs or em)",
        ))
}

/// Scans every scheme on `interval` and matches each non-referee scheme
/// against the first reference scheme in the list.
pub fn compare_zero_sets<C: CoefficientSource>(
    evaluator: &Evaluator<C>,
    interval: (f64, f64),
    schemes: &[SchemeSpec],
    step: f64,
    match_tol: f64,
) -> Result<ZeroComparison> {
    let referee = referee_index(schemes)?;
    let grid = TimeGrid::new(interval.0, interval.1, step)?;
    let opts = ScanOptions::default();
    let reference = scan_zeros_with(evaluator, &schemes[referee], grid, &opts)?;
    let others = schemes
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != referee)
        .map(|(_, s)| scan_zeros_with(evaluator, s, grid, &opts))
        .collect::<Result<Vec<_>>>()?;
    Ok(ZeroComparison::from_reports(reference, others, match_tol))
}

/// Lower end of the conjecture sweep.
pub const CONJECTURE_START: f64 = 30.0;
/// Default upper limit accepted by the conjecture sweep.
pub const CONJECTURE_CEILING: f64 = 1e4;
/// Above this height zero scans use the Riemann–Siegel referee.
pub const FAST_REFEREE_ABOVE: f64 = 5000.0;
/// Default matching tolerance.
pub const DEFAULT_MATCH_TOL: f64 = 0.05;

/// Euler–Maclaurin up to [`FAST_REFEREE_ABOVE`], Riemann–Siegel beyond.
pub fn referee_for(t_max: f64) -> SchemeSpec {
    if t_max <= FAST_REFEREE_ABOVE {
        SchemeSpec::OracleEm
    } else {
        SchemeSpec::ReferenceRs
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EventKind {
    /// A reference zero with no Spira zero within tolerance.
    Missed,
    /// A Spira zero with no reference zero within tolerance.
    Spurious,
}

/// A mismatch found by the conjecture sweep, with enough context to judge it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConjectureEvent {
    pub kind: EventKind,
    pub location: f64,
    /// Nearest zero of the other list (Spira for a missed zero, reference
    /// for a spurious one).
    pub nearest_counterpart: Option<f64>,
    /// Distance from `location` to the nearest cutoff jump (even integer).
    pub distance_to_jump: f64,
    pub cutoff: usize,
    pub scheme_value: f64,
    pub reference_value: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConjectureSummary {
    pub t_min: f64,
    pub t_max: f64,
    pub step: f64,
    pub match_tol: f64,
    pub referee: SchemeSpec,
    pub reference_zeros: usize,
    pub scheme_zeros: usize,
    pub matched: usize,
    pub events: Vec<ConjectureEvent>,
    pub jump_crossings: usize,
    pub scheme_dips: usize,
    pub max_matched_discrepancy: Option<f64>,
}

impl ConjectureSummary {
    pub fn missed(&self) -> usize {
        self.events
            .iter()
            .filter(|e| e.kind == EventKind::Missed)
            .count()
    }

    pub fn spurious(&self) -> usize {
        self.events
            .iter()
            .filter(|e| e.kind == EventKind::Spurious)
            .count()
    }

    pub fn is_clean(&self) -> bool {
        self.events.is_empty()
    }

    /// Summary of a sweep whose range holds no grid step.
    pub fn empty(t_max: f64, step: f64, match_tol: f64) -> Self {
        ConjectureSummary {
            t_min: CONJECTURE_START,
            t_max,
            step,
            match_tol,
            referee: referee_for(t_max),
            reference_zeros: 0,
            scheme_zeros: 0,
            matched: 0,
            events: Vec::new(),
            jump_crossings: 0,
            scheme_dips: 0,
            max_matched_discrepancy: None,
        }
    }

    /// Builds the summary from finished scans of Spira's scheme and the
    /// referee. `f` evaluates any scheme at a height, for event context.
    pub fn from_reports<F>(
        spira: ScanReport,
        reference: ScanReport,
        match_tol: f64,
        f: F,
    ) -> Result<Self>
    where
        F: Fn(&SchemeSpec, f64) -> Result<f64>,
    {
        let grid = reference.grid;
        let referee = reference.scheme.clone();
        let jump_crossings = spira.jump_crossings.len();
        let scheme_dips = spira.dips.len();
        let cmp = ZeroComparison::from_reports(reference, alloc::vec![spira], match_tol);
        let ref_locs = cmp.reference.locations();
        let sc = &cmp.schemes[0];
        let spira_locs = sc.report.locations();

        let nearest = |xs: &[f64], x: f64| {
            xs.iter()
                .copied()
                .min_by(|a, b| (a - x).abs().total_cmp(&(b - x).abs()))
        };
        let event = |kind, location: f64, others: &[f64]| -> Result<ConjectureEvent> {
            Ok(ConjectureEvent {
                kind,
                location,
                nearest_counterpart: nearest(others, location),
                distance_to_jump: (location - 2.0 * (0.5 * location).round()).abs(),
                cutoff: (0.5 * location).floor() as usize,
                scheme_value: f(&sc.report.scheme, location)?,
                reference_value: f(&referee, location)?,
            })
        };
        let mut events = Vec::new();
        for &i in &sc.matching.missed {
            events.push(event(EventKind::Missed, ref_locs[i], &spira_locs)?);
        }
        for &j in &sc.matching.spurious {
            events.push(event(EventKind::Spurious, spira_locs[j], &ref_locs)?);
        }
        events.sort_by(|a, b| a.location.total_cmp(&b.location));
        Ok(ConjectureSummary {
            t_min: grid.start,
            t_max: grid.end,
            step: grid.step,
            match_tol,
            referee,
            reference_zeros: ref_locs.len(),
            scheme_zeros: spira_locs.len(),
            matched: sc.matching.pairs.len(),
            events,
            jump_crossings,
            scheme_dips,
            max_matched_discrepancy: sc.max_discrepancy,
        })
    }
}

/// Grid for the conjecture sweep, or `None` when `[30, t_max]` is too short
/// to hold a single step.
pub fn conjecture_grid(t_max: f64, step: f64, ceiling: f64) -> Result<Option<TimeGrid>> {
    if !(t_max <= ceiling) {
        return Err(Error::Parameter(
            "t_max exceeds the conjecture sweep ceiling",
        ));
    }
    if !(step > 0.0) {
        return Err(Error::Parameter("grid step must be positive"));
    }
    if t_max - CONJECTURE_START < step {
        return Ok(None);
    }
    TimeGrid::new(CONJECTURE_START, t_max, step).map(Some)
}

/// Compares Spira's zeros (cutoff `floor(t/2)` re-resolved per point)
/// against the referee's on `[30, t_max]`.
pub fn conjecture_sweep<C: CoefficientSource>(
    evaluator: &Evaluator<C>,
    t_max: f64,
    step: f64,
    match_tol: f64,
) -> Result<ConjectureSummary> {
    let Some(grid) = conjecture_grid(t_max, step, CONJECTURE_CEILING)? else {
        return Ok(ConjectureSummary::empty(t_max, step, match_tol));
    };
    let opts = ScanOptions::default();
    let spira = scan_zeros_with(evaluator, &SchemeSpec::spira(), grid, &opts)?;
    let reference = scan_zeros_with(evaluator, &referee_for(t_max), grid, &opts)?;
    ConjectureSummary::from_reports(spira, reference, match_tol, |s, t| evaluator.evaluate(s, t))
}
