use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::error::RunError;

/// `git describe` of the source tree this binary was built from.
pub const PROVENANCE: &str = env!("ZSECTIONS_GIT_DESCRIBE");

/// One CSV field.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Float(f64),
    Int(u64),
    Text(String),
    Empty,
}

impl Cell {
    pub fn render(&self) -> String {
        match self {
            Cell::Float(x) => format_float(*x),
            Cell::Int(n) => n.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Empty => String::new(),
        }
    }
}

/// 17 significant digits, enough for any `f64` to parse back to itself.
pub fn format_float(x: f64) -> String {
    format!("{x:.16e}")
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Float(x)
    }
}

impl From<usize> for Cell {
    fn from(n: usize) -> Self {
        Cell::Int(n as u64)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Text(b.to_string())
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_owned())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(x: Option<T>) -> Self {
        x.map_or(Cell::Empty, Into::into)
    }
}

/// A header and rows, written out as CSV.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    header: Vec<String>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|s| (*s).to_owned()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(
            row.len(),
            self.header.len(),
            "row width must match the header"
        );
        self.rows.push(row);
    }

    pub fn header(&self) -> &[String] {
        &self.header
    }

    pub fn rows(&self) -> &[Vec<Cell>] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn write_csv<W: Write>(&self, w: W) -> Result<(), RunError> {
        let mut out = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(w);
        out.write_record(&self.header)?;
        for row in &self.rows {
            out.write_record(row.iter().map(Cell::render))?;
        }
        out.flush()?;
        Ok(())
    }
}

/// The JSON document written next to every CSV.
#[derive(Debug, Serialize)]
pub struct Document<'a> {
    pub command: String,
    pub config: serde_json::Value,
    pub summary: &'a serde_json::Value,
    pub diagnostics: Diagnostics,
    pub provenance: &'static str,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Diagnostics {
    pub hazards: usize,
}

/// Where the JSON summary for a CSV at `csv_path` goes.
pub fn summary_path(csv_path: &Path) -> PathBuf {
    csv_path.with_extension("json")
}

/// Writes the CSV and its JSON summary, to files when `out` is given and
/// to stdout and stderr otherwise.
pub fn write_outputs(
    out: Option<&Path>,
    table: &Table,
    doc: &Document<'_>,
) -> Result<(), RunError> {
    match out {
        Some(path) => {
            let file = File::create(path)
                .map_err(|e| RunError::config(format!("{}: {e}", path.display())))?;
            table.write_csv(BufWriter::new(file))?;
            let json_path = summary_path(path);
            let mut json = BufWriter::new(File::create(&json_path)?);
            serde_json::to_writer_pretty(&mut json, doc)?;
            json.write_all(b"\n")?;
            json.flush()?;
        }
        None => {
            table.write_csv(io::stdout().lock())?;
            let mut err = io::stderr().lock();
            serde_json::to_writer_pretty(&mut err, doc)?;
            err.write_all(b"\n")?;
        }
    }
    Ok(())
}
