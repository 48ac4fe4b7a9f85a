//! Report rows and their CSV/JSON forms.

use anharmonic_core::{ComparisonReport, Status};
use anyhow::{Context, Result};
use std::fmt::Write as _;
use std::path::Path;

pub const CSV_HEADER: &str = "T,quantity,literal,oracle,rel_dev,status";

/// One output row. `report == None` marks a quantity that does not apply to
/// the configuration (e.g. anharmonic rows at `quartic = 0`); it is written
/// with empty value columns and does not affect the exit code.
#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub section: &'static str,
    pub temperature: Option<f64>,
    pub quantity: String,
    pub report: Option<ComparisonReport>,
}

impl Row {
    pub fn new(section: &'static str, temperature: Option<f64>, report: ComparisonReport) -> Self {
        Row {
            section,
            temperature,
            quantity: report.quantity_name.clone(),
            report: Some(report),
        }
    }

    pub fn empty(section: &'static str, temperature: Option<f64>, quantity: impl Into<String>) -> Self {
        Row {
            section,
            temperature,
            quantity: quantity.into(),
            report: None,
        }
    }

    pub fn status(&self) -> Option<Status> {
        self.report.as_ref().map(|r| r.status)
    }
}

/// 17 significant digits.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

pub fn rows_to_csv(rows: &[Row]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for row in rows {
        let t = row.temperature.map(fmt_f64).unwrap_or_default();
        let q = csv_field(&row.quantity);
        match &row.report {
            Some(r) => writeln!(
                out,
                "{t},{q},{},{},{},{}",
                fmt_f64(r.literal),
                fmt_f64(r.oracle),
                fmt_f64(r.rel_dev),
                r.status
            ),
            None => writeln!(out, "{t},{q},,,,"),
        }
        .expect("writing to a String");
    }
    out
}

/// Reports of all non-empty rows, with the temperature added to
/// `options_used` as `"T"`.
pub fn rows_to_json(rows: &[Row]) -> Result<String> {
    let reports: Vec<ComparisonReport> = rows
        .iter()
        .filter_map(|row| {
            let mut r = row.report.clone()?;
            if let Some(t) = row.temperature {
                r.options_used.insert("T".into(), fmt_f64(t));
            }
            Some(r)
        })
        .collect();
    let mut s = serde_json::to_string_pretty(&reports)?;
    s.push('\n');
    Ok(s)
}

/// Worst status over the rows; `None` if every row is empty-marked.
pub fn worst_status(rows: &[Row]) -> Option<Status> {
    rows.iter().filter_map(Row::status).max()
}

/// 0 all PASS, 2 any FLAGGED, 1 any ERROR.
pub fn exit_code(rows: &[Row]) -> i32 {
    match worst_status(rows) {
        None | Some(Status::Pass) => 0,
        Some(Status::Flagged) => 2,
        Some(Status::Error) => 1,
    }
}

pub fn write_file(dir: &Path, name: &str, contents: &str) -> Result<()> {
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
    let path = dir.join(name);
    std::fs::write(&path, contents).with_context(|| format!("writing {}", path.display()))
}

/// The pass/flag/fail matrix printed by `verify`.
pub fn summary(rows: &[Row]) -> String {
    let width = rows.iter().map(|r| r.quantity.len()).max().unwrap_or(8).max(8);
    let mut out = String::new();
    for row in rows {
        let (status, dev) = match &row.report {
            Some(r) => (r.status.as_str(), format!("{:.3e}", r.rel_dev)),
            None => ("-", String::new()),
        };
        let t = row.temperature.map(|t| format!("T={t}")).unwrap_or_default();
        writeln!(out, "{:<9} {:<width$} {:<8} {:>7} {dev}", row.section, row.quantity, t, status)
            .expect("writing to a String");
    }
    let count = |s| rows.iter().filter(|r| r.status() == Some(s)).count();
    writeln!(
        out,
        "{} rows: {} PASS, {} FLAGGED, {} ERROR",
        rows.len(),
        count(Status::Pass),
        count(Status::Flagged),
        count(Status::Error)
    )
    .expect("writing to a String");
    out
}
