//! CSV emission with a fixed column layout and reproducible formatting.
//!
//! Output is UTF-8 with LF line endings and `.` as the decimal separator.
//! Numbers are printed in scientific notation with 12 significant digits,
//! which is enough to make reruns byte-comparable while keeping files
//! readable. Unselected measures appear as empty fields so every file has
//! the same eight columns.

use std::fs;
use std::path::Path;

use crate::error::{CliError, Result};
use crate::sweep::SweepRow;

/// The fixed header line.
pub const HEADER: &str = "gamma,B,kT,Ns,Nv,mutual_info,entropy,Bc";

/// Format a value with 12 significant digits in scientific notation.
/// Negative zero is normalized so equal values always print identically.
pub fn sig12(value: f64) -> String {
    format!("{:.11e}", value + 0.0)
}

fn field(value: Option<f64>) -> String {
    value.map(sig12).unwrap_or_default()
}

/// Render one row as a CSV line (no trailing newline).
pub fn format_row(row: &SweepRow) -> String {
    format!(
        "{},{},{},{},{},{},{},{}",
        sig12(row.gamma),
        sig12(row.b),
        sig12(row.k_t),
        field(row.ns),
        field(row.nv),
        field(row.mutual_info),
        field(row.entropy),
        sig12(row.bc)
    )
}

/// Render a complete CSV document: header plus one line per row. An empty
/// row list yields a header-only file.
pub fn format_rows(rows: &[SweepRow]) -> String {
    let mut out = String::with_capacity(64 * (rows.len() + 1));
    out.push_str(HEADER);
    out.push('\n');
    for row in rows {
        out.push_str(&format_row(row));
        out.push('\n');
    }
    out
}

/// Write the rows to `path`, replacing any existing file.
pub fn emit_csv(rows: &[SweepRow], path: &Path) -> Result<()> {
    fs::write(path, format_rows(rows)).map_err(|e| CliError::io(path, e))
}
