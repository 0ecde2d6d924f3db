//! Batch front end: record conversion, truth-table dumps, cube sweeps, and
//! the seeded invariant checker.
//!
//! Data rows go to the output stream, per-row diagnostics to a separate
//! error stream, so converted data stays pipeable. Identical inputs and
//! flags produce byte-identical output: floats are serialized with the
//! shortest representation that round-trips, and nothing time-dependent is
//! ever emitted.

mod check;
mod convert;
mod sweep;
mod tables;

pub use check::{run_check, CheckReport, PropertyOutcome};
pub use convert::{convert, ConvertOptions, ConvertSummary, Direction};
pub use sweep::sweep;
pub use tables::{render_table, TableKind};

use std::io::Write;

use thiserror::Error;

use crate::bipolar;
use crate::hexa::to_hexa;
use crate::penta::{self, Variant};
use crate::types::NeutroTriple;

/// Representation space a record is converted into.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Space {
    Bipolar,
    Penta,
    Hexa,
    Ten,
}

impl std::fmt::Display for Space {
    fn fmt(&self, out: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let name = match self {
            Space::Bipolar => "bipolar",
            Space::Penta => "penta",
            Space::Hexa => "hexa",
            Space::Ten => "ten",
        };
        write!(out, "{name}")
    }
}

/// Record serialization format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Jsonl,
}

/// Errors surfaced by the command layer, either per row or per run.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Domain(#[from] crate::Error),
    #[error("InvalidNumber({field})")]
    InvalidNumber { field: &'static str },
    #[error("MissingField({field})")]
    MissingField { field: &'static str },
    #[error("DuplicateId({id})")]
    DuplicateId { id: String },
    #[error("MissingColumn({name})")]
    MissingColumn { name: &'static str },
    #[error("InvalidJson({detail})")]
    InvalidJson { detail: String },
    #[error("InverseUnsupported({space})")]
    InverseUnsupported { space: Space },
    #[error("StepOutOfRange(step={step})")]
    StepOutOfRange { step: f64 },
    #[error("{0}")]
    Io(#[from] std::io::Error),
    #[error("Csv({0})")]
    Csv(#[from] csv::Error),
}

impl CliError {
    /// Errors caused by how the tool was invoked rather than by the data.
    pub fn is_usage(&self) -> bool {
        matches!(
            self,
            CliError::InverseUnsupported { .. } | CliError::StepOutOfRange { .. }
        )
    }
}

/// Shortest decimal serialization that parses back to the same f64.
pub(crate) fn fmt_f64(v: f64) -> String {
    format!("{v}")
}

/// Writes rows as CSV or JSON lines with a fixed column order.
pub(crate) struct RowSink<W: Write> {
    columns: Vec<&'static str>,
    kind: SinkKind<W>,
}

enum SinkKind<W: Write> {
    Csv(Box<csv::Writer<W>>),
    Jsonl(W),
}

impl<W: Write> RowSink<W> {
    /// Creates the sink and, for CSV, writes the header row immediately so
    /// even an empty batch produces a well-formed document.
    pub(crate) fn new(
        format: Format,
        out: W,
        columns: Vec<&'static str>,
    ) -> Result<Self, CliError> {
        let kind = match format {
            Format::Csv => {
                let mut wtr = csv::Writer::from_writer(out);
                wtr.write_record(std::iter::once("id").chain(columns.iter().copied()))?;
                SinkKind::Csv(Box::new(wtr))
            }
            Format::Jsonl => SinkKind::Jsonl(out),
        };
        Ok(Self { columns, kind })
    }

    pub(crate) fn write_row(&mut self, id: &str, values: &[f64]) -> Result<(), CliError> {
        debug_assert_eq!(values.len(), self.columns.len());
        match &mut self.kind {
            SinkKind::Csv(wtr) => {
                let mut record = csv::StringRecord::new();
                record.push_field(id);
                for v in values {
                    record.push_field(&fmt_f64(*v));
                }
                wtr.write_record(&record)?;
            }
            SinkKind::Jsonl(out) => {
                let mut line = String::new();
                line.push_str("{\"id\":");
                line.push_str(&serde_json::to_string(id).expect("string serialization"));
                for (name, v) in self.columns.iter().zip(values) {
                    line.push_str(",\"");
                    line.push_str(name);
                    line.push_str("\":");
                    line.push_str(&fmt_f64(*v));
                }
                line.push('}');
                writeln!(out, "{line}")?;
            }
        }
        Ok(())
    }

    pub(crate) fn flush(&mut self) -> Result<(), CliError> {
        match &mut self.kind {
            SinkKind::Csv(wtr) => wtr.flush()?,
            SinkKind::Jsonl(out) => out.flush()?,
        }
        Ok(())
    }
}

/// Output columns for a forward conversion into `space`, without the id.
pub(crate) fn forward_columns(space: Space) -> Vec<&'static str> {
    let mut cols = vec!["mu", "omega", "nu"];
    match space {
        Space::Bipolar => cols.extend(["tau_plus", "tau_minus", "alpha", "pi", "kappa"]),
        Space::Penta => cols.extend(["t", "c", "h", "u", "f"]),
        Space::Hexa => cols.extend(["t", "c", "h", "u", "f", "a"]),
        Space::Ten => cols.extend([
            "weak_true",
            "weak_false",
            "neutral",
            "saturated",
            "hesitant",
            "true",
            "false",
            "unknown",
            "contradictory",
            "ambiguous",
        ]),
    }
    cols.push("partition_sum");
    cols
}

/// Values for a forward conversion, in the order of [`forward_columns`].
/// The trailing checksum is the left-to-right sum of the emitted partition
/// components.
pub(crate) fn forward_values(x: NeutroTriple, space: Space, variant: Variant) -> Vec<f64> {
    let mut values = vec![x.mu(), x.omega(), x.nu()];
    match space {
        Space::Bipolar => {
            let b = bipolar::decompose(x.mu(), x.nu());
            values.extend(b.components());
            values.push(b.partition_sum());
        }
        Space::Penta => {
            let p = penta::to_penta(x, variant);
            values.extend(p.components());
            values.push(p.partition_sum());
        }
        Space::Hexa => {
            let hx = to_hexa(x, variant);
            values.extend(hx.components());
            values.push(hx.partition_sum());
        }
        Space::Ten => {
            let d = penta::ten_term_decomposition(x);
            values.extend(d.components());
            values.push(d.partition_sum());
        }
    }
    values
}
