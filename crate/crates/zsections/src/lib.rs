//! Experiment harness for sectional approximations of the Hardy Z-function.
//!
//! The numerics live in `zsections-core`; this crate adds a concurrent
//! coefficient cache, parallel grid evaluation, CSV and JSON output and the
//! `zsections` command line.

// `!(x > a)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cache;
pub mod commands;
pub mod config;
pub mod error;
pub mod output;
pub mod parallel;
pub mod report;

pub use cache::CoefficientCache;
pub use commands::{engine, execute, Engine, Output};
pub use config::{Cli, Command, FigureId, RunConfig};
pub use error::RunError;
pub use output::{Cell, Table, PROVENANCE};

use output::{write_outputs, Diagnostics, Document};

/// Runs a validated configuration on a pool of `cfg.threads` workers.
pub fn run_config(cfg: &RunConfig) -> Result<Output, RunError> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.threads.unwrap_or(0))
        .build()
        .map_err(|e| RunError::config(format!("thread pool: {e}")))?;
    let engine = engine(cfg);
    pool.install(|| execute(cfg, &engine))
}

/// Parses, runs and writes outputs. Hazards beyond the allowed count are
/// reported after the outputs are written.
pub fn run(cli: Cli) -> Result<(), RunError> {
    let cfg = RunConfig::from_cli(cli)?;
    let out = run_config(&cfg)?;
    let doc = Document {
        command: cfg.command.name(),
        config: cfg.echo(),
        summary: &out.summary,
        diagnostics: Diagnostics {
            hazards: out.hazards,
        },
        provenance: PROVENANCE,
    };
    write_outputs(cfg.out.as_deref(), &out.table, &doc)?;
    if out.hazards > cfg.max_hazards {
        return Err(RunError::Hazard {
            count: out.hazards,
            limit: cfg.max_hazards,
        });
    }
    Ok(())
}
