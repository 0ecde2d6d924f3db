//! Batch record conversion: one output row per valid input row, processed
//! in order, with per-row failures reported on the error stream.

use std::collections::HashSet;
use std::io::{BufRead, BufReader, Read, Write};

use crate::cli::{forward_columns, forward_values, CliError, Format, RowSink, Space};
use crate::penta::{from_penta, Variant};
use crate::tolerance::TolerancePolicy;
use crate::types::{NeutroTriple, PentaVector};

/// Transform direction. The inverse is defined only for the penta space;
/// the other representations have no published inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Direction {
    Forward,
    Inverse,
}

#[derive(Debug, Clone)]
pub struct ConvertOptions {
    pub space: Space,
    pub variant: Variant,
    pub direction: Direction,
    pub format: Format,
    /// Stop at the first failing row instead of reporting and continuing.
    pub fail_fast: bool,
    pub tolerance: TolerancePolicy,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ConvertSummary {
    pub rows_written: u64,
    pub rows_failed: u64,
}

const FORWARD_FIELDS: [&str; 3] = ["mu", "omega", "nu"];
const INVERSE_FIELDS: [&str; 5] = ["t", "c", "h", "u", "f"];

/// Runs a conversion over a record stream. Rows are independent and the
/// output preserves input order. Returns how many rows were written and how
/// many failed validation; file-level problems (missing columns, malformed
/// input container, I/O) surface as an error instead.
pub fn convert<R: Read, W: Write, E: Write>(
    input: R,
    output: W,
    mut errors: E,
    opts: &ConvertOptions,
) -> Result<ConvertSummary, CliError> {
    if opts.direction == Direction::Inverse && opts.space != Space::Penta {
        return Err(CliError::InverseUnsupported { space: opts.space });
    }

    let fields: &[&'static str] = match opts.direction {
        Direction::Forward => &FORWARD_FIELDS,
        Direction::Inverse => &INVERSE_FIELDS,
    };
    let columns = match opts.direction {
        Direction::Forward => forward_columns(opts.space),
        Direction::Inverse => vec![
            "t",
            "c",
            "h",
            "u",
            "f",
            "mu",
            "omega",
            "nu",
            "partition_sum",
        ],
    };
    let mut sink = RowSink::new(opts.format, output, columns)?;

    let mut summary = ConvertSummary::default();
    let mut seen_ids: HashSet<String> = HashSet::new();
    let mut row_number = 0u64;

    let mut handle_row = |row: Result<(String, Vec<f64>), RowError>,
                          sink: &mut RowSink<W>,
                          errors: &mut E,
                          summary: &mut ConvertSummary|
     -> Result<bool, CliError> {
        row_number += 1;
        let parsed = row.and_then(|(id, raw)| {
            if !seen_ids.insert(id.clone()) {
                return Err(RowError::identified(
                    id.clone(),
                    CliError::DuplicateId { id },
                ));
            }
            compute_row(&id, &raw, opts).map_err(|e| RowError::identified(id, e))
        });
        match parsed {
            Ok((id, values)) => {
                sink.write_row(&id, &values)?;
                summary.rows_written += 1;
                Ok(true)
            }
            Err(e) => {
                summary.rows_failed += 1;
                match e.id {
                    Some(id) => writeln!(errors, "{} at id={}", e.source, id)?,
                    None => writeln!(errors, "{} at row={}", e.source, row_number)?,
                }
                Ok(!opts.fail_fast)
            }
        }
    };

    match opts.format {
        Format::Csv => {
            let mut rdr = csv::ReaderBuilder::new()
                .has_headers(true)
                .trim(csv::Trim::All)
                .from_reader(input);
            let headers = rdr.headers()?.clone();
            let id_idx = header_index(&headers, "id")?;
            let field_idx = fields
                .iter()
                .map(|name| header_index(&headers, name))
                .collect::<Result<Vec<_>, _>>()?;

            for record in rdr.records() {
                let row = record
                    .map_err(|e| RowError::anonymous(e.into()))
                    .and_then(|rec| {
                        let id = rec
                            .get(id_idx)
                            .ok_or_else(|| {
                                RowError::anonymous(CliError::MissingField { field: "id" })
                            })?
                            .to_string();
                        let mut raw = Vec::with_capacity(fields.len());
                        for (name, idx) in fields.iter().zip(&field_idx) {
                            let text = rec.get(*idx).ok_or_else(|| {
                                RowError::identified(
                                    id.clone(),
                                    CliError::MissingField { field: name },
                                )
                            })?;
                            let value = text.parse::<f64>().map_err(|_| {
                                RowError::identified(
                                    id.clone(),
                                    CliError::InvalidNumber { field: name },
                                )
                            })?;
                            raw.push(value);
                        }
                        Ok((id, raw))
                    });
                if !handle_row(row, &mut sink, &mut errors, &mut summary)? {
                    break;
                }
            }
        }
        Format::Jsonl => {
            for line in BufReader::new(input).lines() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                let row = parse_json_row(&line, fields);
                if !handle_row(row, &mut sink, &mut errors, &mut summary)? {
                    break;
                }
            }
        }
    }

    sink.flush()?;
    errors.flush()?;
    Ok(summary)
}

struct RowError {
    id: Option<String>,
    source: CliError,
}

impl RowError {
    fn anonymous(source: CliError) -> Self {
        Self { id: None, source }
    }

    fn identified(id: String, source: CliError) -> Self {
        Self {
            id: Some(id),
            source,
        }
    }
}

fn header_index(headers: &csv::StringRecord, name: &'static str) -> Result<usize, CliError> {
    headers
        .iter()
        .position(|h| h == name)
        .ok_or(CliError::MissingColumn { name })
}

fn parse_json_row(line: &str, fields: &[&'static str]) -> Result<(String, Vec<f64>), RowError> {
    let value: serde_json::Value = serde_json::from_str(line).map_err(|e| {
        RowError::anonymous(CliError::InvalidJson {
            detail: e.to_string(),
        })
    })?;
    let object = value.as_object().ok_or_else(|| {
        RowError::anonymous(CliError::InvalidJson {
            detail: "not an object".into(),
        })
    })?;
    let id = match object.get("id") {
        Some(serde_json::Value::String(s)) => s.clone(),
        Some(serde_json::Value::Number(n)) => n.to_string(),
        _ => return Err(RowError::anonymous(CliError::MissingField { field: "id" })),
    };
    let mut raw = Vec::with_capacity(fields.len());
    for name in fields {
        let field = object.get(*name).ok_or_else(|| {
            RowError::identified(id.clone(), CliError::MissingField { field: name })
        })?;
        let value = field.as_f64().ok_or_else(|| {
            RowError::identified(id.clone(), CliError::InvalidNumber { field: name })
        })?;
        raw.push(value);
    }
    Ok((id, raw))
}

fn compute_row(
    id: &str,
    raw: &[f64],
    opts: &ConvertOptions,
) -> Result<(String, Vec<f64>), CliError> {
    let values = match opts.direction {
        Direction::Forward => {
            let x = NeutroTriple::new(raw[0], raw[1], raw[2], &opts.tolerance)?;
            forward_values(x, opts.space, opts.variant)
        }
        Direction::Inverse => {
            let p = PentaVector::new(raw[0], raw[1], raw[2], raw[3], raw[4], &opts.tolerance)?;
            let x = from_penta(p, opts.variant, &opts.tolerance)?;
            let mut values = p.components().to_vec();
            values.extend([x.mu(), x.omega(), x.nu()]);
            values.push(p.partition_sum());
            values
        }
    };
    Ok((id.to_string(), values))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn options(space: Space, direction: Direction, format: Format) -> ConvertOptions {
        ConvertOptions {
            space,
            variant: Variant::I,
            direction,
            format,
            fail_fast: false,
            tolerance: TolerancePolicy::default(),
        }
    }

    fn run(input: &str, opts: &ConvertOptions) -> (String, String, ConvertSummary) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let summary = convert(input.as_bytes(), &mut out, &mut err, opts).unwrap();
        (
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
            summary,
        )
    }

    fn assert_fields_close(row: &str, skip: usize, expected: &[f64]) {
        let fields: Vec<&str> = row.split(',').collect();
        assert_eq!(fields.len(), skip + expected.len(), "{row}");
        for (text, want) in fields[skip..].iter().zip(expected) {
            let got: f64 = text.parse().unwrap();
            assert!((got - want).abs() < 1e-12, "{row}: {got} vs {want}");
        }
    }

    #[test]
    fn forward_penta_csv() {
        let (out, err, summary) = run(
            "id,mu,omega,nu\np1,0.6,0.5,0.2\n",
            &options(Space::Penta, Direction::Forward, Format::Csv),
        );
        assert_eq!(err, "");
        assert_eq!(
            summary,
            ConvertSummary {
                rows_written: 1,
                rows_failed: 0
            }
        );
        let mut lines = out.lines();
        assert_eq!(
            lines.next().unwrap(),
            "id,mu,omega,nu,t,c,h,u,f,partition_sum"
        );
        let row = lines.next().unwrap();
        assert!(row.starts_with("p1,0.6,0.5,0.2,"));
        assert_fields_close(row, 1, &[0.6, 0.5, 0.2, 0.4, 0.0, 0.35, 0.15, 0.1, 1.0]);
    }

    #[test]
    fn forward_hexa_trivial_row() {
        let (out, _, _) = run(
            "id,mu,omega,nu\nr,1,0,0\n",
            &options(Space::Hexa, Direction::Forward, Format::Csv),
        );
        assert_eq!(out.lines().nth(1).unwrap(), "r,1,0,0,1,0,0,0,0,0,1");
    }

    #[test]
    fn out_of_range_row_is_reported_and_skipped() {
        let (out, err, summary) = run(
            "id,mu,omega,nu\nbad,1.5,0,0\ngood,0,0,0\n",
            &options(Space::Penta, Direction::Forward, Format::Csv),
        );
        assert_eq!(err, "OutOfRange(mu) at id=bad\n");
        assert_eq!(
            summary,
            ConvertSummary {
                rows_written: 1,
                rows_failed: 1
            }
        );
        assert!(out.contains("good,0,0,0,0,0,0,1,0,1"));
        assert!(!out.contains("bad"));
    }

    #[test]
    fn fail_fast_stops_processing() {
        let mut opts = options(Space::Penta, Direction::Forward, Format::Csv);
        opts.fail_fast = true;
        let (out, err, summary) = run("id,mu,omega,nu\nbad,2,0,0\nlater,1,0,0\n", &opts);
        assert_eq!(
            summary,
            ConvertSummary {
                rows_written: 0,
                rows_failed: 1
            }
        );
        assert_eq!(err.lines().count(), 1);
        assert!(!out.contains("later"));
    }

    #[test]
    fn duplicate_ids_are_rejected() {
        let (_, err, summary) = run(
            "id,mu,omega,nu\nx,0.1,0.2,0.3\nx,0.3,0.2,0.1\n",
            &options(Space::Penta, Direction::Forward, Format::Csv),
        );
        assert_eq!(err, "DuplicateId(x) at id=x\n");
        assert_eq!(summary.rows_failed, 1);
    }

    #[test]
    fn inverse_penta_recovers_triple() {
        let (out, err, _) = run(
            "id,t,c,h,u,f\nq,0.4,0,0.35,0.15,0.1\n",
            &options(Space::Penta, Direction::Inverse, Format::Csv),
        );
        assert_eq!(err, "");
        let mut lines = out.lines();
        assert_eq!(
            lines.next().unwrap(),
            "id,t,c,h,u,f,mu,omega,nu,partition_sum"
        );
        let row = lines.next().unwrap();
        let fields: Vec<&str> = row.split(',').collect();
        let mu: f64 = fields[6].parse().unwrap();
        let omega: f64 = fields[7].parse().unwrap();
        let nu: f64 = fields[8].parse().unwrap();
        assert!((mu - 0.6).abs() < 1e-12);
        assert!((omega - 0.5).abs() < 1e-12);
        assert!((nu - 0.2).abs() < 1e-12);
    }

    #[test]
    fn inverse_rejects_exclusivity_per_row() {
        let (_, err, summary) = run(
            "id,t,c,h,u,f\nv,0.2,0.3,0.1,0.2,0.2\n",
            &options(Space::Penta, Direction::Inverse, Format::Csv),
        );
        assert!(
            err.starts_with("ExclusivityViolation(product=0.06"),
            "{err}"
        );
        assert_eq!(summary.rows_failed, 1);
    }

    #[test]
    fn inverse_unsupported_for_hexa() {
        let opts = options(Space::Hexa, Direction::Inverse, Format::Csv);
        let mut out = Vec::new();
        let mut err = Vec::new();
        let result = convert("id,t,c,h,u,f\n".as_bytes(), &mut out, &mut err, &opts);
        assert!(matches!(
            result,
            Err(CliError::InverseUnsupported { space: Space::Hexa })
        ));
    }

    #[test]
    fn jsonl_round_trips_row() {
        let (out, err, _) = run(
            "{\"id\":\"j1\",\"mu\":0.6,\"omega\":0.5,\"nu\":0.2}\n",
            &options(Space::Penta, Direction::Forward, Format::Jsonl),
        );
        assert_eq!(err, "");
        let value: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
        assert_eq!(value["id"], "j1");
        for (key, want) in [
            ("mu", 0.6),
            ("omega", 0.5),
            ("nu", 0.2),
            ("t", 0.4),
            ("c", 0.0),
            ("h", 0.35),
            ("u", 0.15),
            ("f", 0.1),
            ("partition_sum", 1.0),
        ] {
            let got = value[key].as_f64().unwrap();
            assert!((got - want).abs() < 1e-12, "{key}: {got}");
        }
        // Keys keep the column order.
        let key_order: Vec<usize> = ["\"id\"", "\"mu\"", "\"t\"", "\"partition_sum\""]
            .iter()
            .map(|k| out.find(k).unwrap())
            .collect();
        assert!(key_order.windows(2).all(|w| w[0] < w[1]), "{out}");
    }

    #[test]
    fn jsonl_reports_bad_field() {
        let (_, err, summary) = run(
            "{\"id\":\"k\",\"mu\":\"high\",\"omega\":0,\"nu\":0}\n",
            &options(Space::Penta, Direction::Forward, Format::Jsonl),
        );
        assert_eq!(err, "InvalidNumber(mu) at id=k\n");
        assert_eq!(summary.rows_failed, 1);
    }

    #[test]
    fn missing_column_is_fatal() {
        let opts = options(Space::Penta, Direction::Forward, Format::Csv);
        let mut out = Vec::new();
        let result = convert(
            "id,mu,nu\nx,1,0\n".as_bytes(),
            &mut out,
            &mut Vec::new(),
            &opts,
        );
        assert!(matches!(
            result,
            Err(CliError::MissingColumn { name: "omega" })
        ));
    }

    #[test]
    fn ten_space_emits_ten_components() {
        let (out, _, _) = run(
            "id,mu,omega,nu\nw,0.6,0.5,0.2\n",
            &options(Space::Ten, Direction::Forward, Format::Csv),
        );
        let header = out.lines().next().unwrap();
        assert_eq!(
            header,
            "id,mu,omega,nu,weak_true,weak_false,neutral,saturated,hesitant,\
             true,false,unknown,contradictory,ambiguous,partition_sum"
        );
        let row = out.lines().nth(1).unwrap();
        assert_fields_close(
            row,
            1,
            &[
                0.6, 0.5, 0.2, 0.2, 0.0, 0.1, 0.0, 0.2, 0.2, 0.0, 0.1, 0.0, 0.2, 1.0,
            ],
        );
    }
}
