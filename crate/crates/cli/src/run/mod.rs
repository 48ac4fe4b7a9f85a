pub mod classical;
pub mod quantum;
pub mod verify;

use crate::config::Options;
use crate::output::Row;
use anharmonic_core::{ComparisonReport, Error, Status};

/// Turn a fallible report into a row; errors become `ERROR` rows.
pub(crate) fn row(
    section: &'static str,
    t: Option<f64>,
    name: &str,
    r: anharmonic_core::Result<ComparisonReport>,
) -> Row {
    match r {
        Ok(r) => Row::new(section, t, r),
        Err(e) => Row::new(section, t, ComparisonReport::error(name, e, "")),
    }
}

/// Like [`row`], but conditions the configuration makes unavoidable (no
/// positivity window, couplings outside a method's regime) are `FLAGGED`.
pub(crate) fn row_flag_regime(
    section: &'static str,
    t: Option<f64>,
    name: &str,
    r: anharmonic_core::Result<ComparisonReport>,
) -> Row {
    match r {
        Err(e @ (Error::NoPositivityWindow(_) | Error::InvalidParameter { .. })) => {
            let mut rep = ComparisonReport::error(name, &e, "");
            rep.status = Status::Flagged;
            Row::new(section, t, rep)
        }
        other => row(section, t, name, other),
    }
}

/// Apply `options.thresholds`. A row flagged for a reason other than its
/// threshold (its deviation was within the old threshold) stays flagged.
pub fn apply_thresholds(rows: &mut [Row], opts: &Options) {
    if opts.thresholds.is_empty() {
        return;
    }
    for row in rows {
        let Some(r) = row.report.as_mut() else { continue };
        if r.status == Status::Error {
            continue;
        }
        let Some(t) = opts.threshold_for(&r.quantity_name) else { continue };
        let forced = r.status == Status::Flagged && r.rel_dev <= r.threshold;
        r.threshold = t;
        r.status = if !forced && r.rel_dev <= t { Status::Pass } else { Status::Flagged };
    }
}

/// Keep the rows of one section.
pub fn filter_section(rows: Vec<Row>, only: Option<&str>) -> Vec<Row> {
    match only {
        Some(s) => rows.into_iter().filter(|r| r.section == s).collect(),
        None => rows,
    }
}
