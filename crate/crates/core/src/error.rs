use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {what} requires {requirement}, got {value}")]
    Domain {
        what: &'static str,
        requirement: &'static str,
        value: f64,
    },

    #[error("invalid accuracy policy: {0}")]
    Policy(String),

    /// The asymptotic series cannot meet the requested relative error with
    /// the configured number of terms.
    #[error("accuracy error at x = {x}: truncation bound {truncation:e} exceeds {target:e} relative to {scale:e}")]
    Accuracy {
        x: f64,
        truncation: f64,
        target: f64,
        scale: f64,
    },

    #[error("resource limit: n = {n} exceeds the limit {limit}")]
    Resource { n: u64, limit: u64 },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal consistency error: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn require_positive(what: &'static str, value: f64) -> Result<()> {
    if value.is_finite() && value > 0.0 {
        Ok(())
    } else {
        Err(Error::Domain {
            what,
            requirement: "a finite value > 0",
            value,
        })
    }
}

pub(crate) fn require_index(what: &'static str, n: u64) -> Result<()> {
    if n >= 1 {
        Ok(())
    } else {
        Err(Error::Domain {
            what,
            requirement: "an integer >= 1",
            value: n as f64,
        })
    }
}
