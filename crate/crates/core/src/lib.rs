pub mod error;
pub mod special_fn;

pub use error::{Error, Result};
pub use special_fn::{AccuracyPolicy, EvalResult};
pub mod cli;
pub mod format;
pub mod grid;
pub mod proof_certificates;
pub mod report;
pub mod sequences;
pub mod sharp_bounds;
