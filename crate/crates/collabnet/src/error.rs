use thiserror::Error;

/// Errors produced by every module in this crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown identifier `{0}`")]
    UnknownId(String),
    #[error("duplicate identifier `{0}`")]
    DuplicateId(String),
    #[error("unknown attribute `{0}`")]
    UnknownAttribute(String),
    #[error("degenerate input: {0}")]
    DegenerateInput(String),
    #[error("shape error: {0}")]
    Shape(String),
    #[error("parse error at row {row}: {message}")]
    Parse { row: usize, message: String },
    #[error("coordinates out of range or not finite: lat={lat}, lon={lon}")]
    Coordinates { lat: f64, lon: f64 },
    #[error("design matrix is rank deficient: column `{column}` is collinear with earlier columns")]
    RankDeficient { column: String },
    #[error("diverging coefficients, perfect or quasi-perfect separation suspected: {0}")]
    Separation(String),
    #[error("fit did not converge: {0}")]
    NonConvergence(String),
    #[error("invalid generator spec: {0}")]
    Spec(String),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

/// Coarse error classes used by callers that need distinct exit statuses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorCategory {
    /// Invalid run configuration (flags, option combinations).
    Config,
    /// Invalid or inconsistent input data.
    Data,
    /// Numerical failure (non-convergence, separation, rank deficiency).
    Numeric,
}

impl Error {
    pub fn category(&self) -> ErrorCategory {
        match self {
            Error::Config(_) => ErrorCategory::Config,
            Error::RankDeficient { .. } | Error::Separation(_) | Error::NonConvergence(_) => {
                ErrorCategory::Numeric
            }
            _ => ErrorCategory::Data,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
