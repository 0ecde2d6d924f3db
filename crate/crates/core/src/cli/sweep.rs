//! Lattice sweep of the unit cube: every grid point converted into the
//! requested space, in deterministic order (mu outer, omega middle, nu
//! inner), with sequential row ids.

use std::io::Write;

use crate::cli::{forward_columns, forward_values, CliError, Format, RowSink, Space};
use crate::penta::Variant;
use crate::types::NeutroTriple;

/// Emits the lattice with the given spacing. The step must lie in `(0, 1]`;
/// axis values are `0, step, 2*step, ...` up to 1, so a step of 1 yields the
/// eight cube corners. Returns the number of rows written.
pub fn sweep<W: Write>(
    step: f64,
    space: Space,
    variant: Variant,
    format: Format,
    out: W,
) -> Result<u64, CliError> {
    if !(step > 0.0 && step <= 1.0) {
        return Err(CliError::StepOutOfRange { step });
    }
    let axis = axis_points(step);
    let mut sink = RowSink::new(format, out, forward_columns(space))?;
    let mut rows = 0u64;
    for &mu in &axis {
        for &omega in &axis {
            for &nu in &axis {
                let x = NeutroTriple::new_unchecked(mu, omega, nu);
                sink.write_row(&rows.to_string(), &forward_values(x, space, variant))?;
                rows += 1;
            }
        }
    }
    sink.flush()?;
    Ok(rows)
}

fn axis_points(step: f64) -> Vec<f64> {
    let count = (1.0 / step + 1e-9).floor() as usize + 1;
    (0..count).map(|i| (i as f64 * step).min(1.0)).collect()
}
