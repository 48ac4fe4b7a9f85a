//! Paired literal/oracle results.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub enum Status {
    #[cfg_attr(feature = "serde", serde(rename = "PASS"))]
    Pass,
    #[cfg_attr(feature = "serde", serde(rename = "FLAGGED"))]
    Flagged,
    #[cfg_attr(feature = "serde", serde(rename = "ERROR"))]
    Error,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Flagged => "FLAGGED",
            Status::Error => "ERROR",
        }
    }

    /// Worst of two statuses (`Error` > `Flagged` > `Pass`).
    pub fn worst(self, other: Status) -> Status {
        self.max(other)
    }
}

impl core::fmt::Display for Status {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A literal evaluation of a closed form next to an independent oracle value.
///
/// `abs_dev` is exactly `|literal - oracle|` and `status` is `Pass` iff
/// `rel_dev <= threshold`. Error rows carry NaN values and a note.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ComparisonReport {
    pub quantity_name: String,
    pub literal: f64,
    pub oracle: f64,
    pub abs_dev: f64,
    pub rel_dev: f64,
    pub threshold: f64,
    pub status: Status,
    pub provenance: String,
    pub options_used: BTreeMap<String, String>,
    #[cfg_attr(feature = "serde", serde(default, skip_serializing_if = "Option::is_none"))]
    pub note: Option<String>,
}

impl ComparisonReport {
    pub fn compare(
        quantity_name: impl Into<String>,
        literal: f64,
        oracle: f64,
        threshold: f64,
        provenance: impl Into<String>,
    ) -> Self {
        let abs_dev = (literal - oracle).abs();
        let rel_dev = relative_deviation(literal, oracle);
        let status = if rel_dev <= threshold {
            Status::Pass
        } else {
            Status::Flagged
        };
        ComparisonReport {
            quantity_name: quantity_name.into(),
            literal,
            oracle,
            abs_dev,
            rel_dev,
            threshold,
            status,
            provenance: provenance.into(),
            options_used: BTreeMap::new(),
            note: None,
        }
    }

    pub fn error(
        quantity_name: impl Into<String>,
        message: impl ToString,
        provenance: impl Into<String>,
    ) -> Self {
        ComparisonReport {
            quantity_name: quantity_name.into(),
            literal: f64::NAN,
            oracle: f64::NAN,
            abs_dev: f64::NAN,
            rel_dev: f64::NAN,
            threshold: f64::NAN,
            status: Status::Error,
            provenance: provenance.into(),
            options_used: BTreeMap::new(),
            note: Some(message.to_string()),
        }
    }

    pub fn with_option(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.options_used.insert(key.into(), value.to_string());
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Downgrade a passing report to `Flagged` (e.g. unconverged inputs).
    pub fn flag(mut self, note: impl Into<String>) -> Self {
        if self.status == Status::Pass {
            self.status = Status::Flagged;
        }
        self.note = Some(note.into());
        self
    }

    pub fn is_pass(&self) -> bool {
        self.status == Status::Pass
    }
}

/// `|a - b| / |b|`, with `0/0 = 0` and `x/0 = inf`.
pub fn relative_deviation(value: f64, reference: f64) -> f64 {
    let abs_dev = (value - reference).abs();
    if abs_dev == 0.0 {
        0.0
    } else if reference == 0.0 {
        f64::INFINITY
    } else {
        abs_dev / reference.abs()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn status_follows_threshold() {
        let r = ComparisonReport::compare("q", 1.0 + 1e-9, 1.0, 1e-8, "test");
        assert_eq!(r.status, Status::Pass);
        assert_eq!(r.abs_dev, (r.literal - r.oracle).abs());
        let r = ComparisonReport::compare("q", 1.1, 1.0, 1e-8, "test");
        assert_eq!(r.status, Status::Flagged);
    }

    #[test]
    fn zero_reference() {
        assert_eq!(relative_deviation(0.0, 0.0), 0.0);
        assert!(relative_deviation(1.0, 0.0).is_infinite());
    }

    #[test]
    fn error_rows_never_pass() {
        let r = ComparisonReport::error("q", "boom", "test");
        assert_eq!(r.status, Status::Error);
        assert!(r.literal.is_nan());
        assert_eq!(Status::Pass.worst(Status::Error), Status::Error);
        assert_eq!(Status::Flagged.worst(Status::Pass), Status::Flagged);
    }
}
