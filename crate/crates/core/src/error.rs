use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("{function}: argument outside the domain ({detail})")]
    Domain {
        function: &'static str,
        detail: String,
    },

    /// The arguments are valid but the plain-value variant cannot represent the
    /// result, or the parameters are outside the supported region.
    #[error("{function}: outside the supported range ({detail}); use the log-scaled variant")]
    Range {
        function: &'static str,
        detail: String,
    },

    #[error("invalid parameter `{name}`: {detail}")]
    InvalidParameter { name: &'static str, detail: String },

    #[error("integrand returned NaN at x = {at}")]
    NanIntegrand { at: f64 },

    #[error("series not convergent under policy: {0}")]
    NotConvergent(String),

    #[error("matrix is not symmetric (max asymmetry {0:e})")]
    Asymmetric(f64),

    #[error("no positivity window: {0}")]
    NoPositivityWindow(String),

    #[error("y = {y} lies outside the positivity window (y_star = {y_star})")]
    OutsideWindow { y: f64, y_star: f64 },

    #[error("quadrature did not converge: {0}")]
    Quadrature(String),
}

impl Error {
    pub(crate) fn domain(function: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            function,
            detail: detail.into(),
        }
    }

    pub(crate) fn range(function: &'static str, detail: impl Into<String>) -> Self {
        Error::Range {
            function,
            detail: detail.into(),
        }
    }

    pub(crate) fn param(name: &'static str, detail: impl Into<String>) -> Self {
        Error::InvalidParameter {
            name,
            detail: detail.into(),
        }
    }
}
