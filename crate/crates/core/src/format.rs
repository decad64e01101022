//! Locale-independent 17-significant-digit number formatting shared by the
//! CSV and JSON writers.

use serde::Serialize;
use serde_json::value::RawValue;

/// Formats a finite value with 17 significant digits in scientific notation,
/// e.g. `5.7721566490153287e-1`. Non-finite values render as their Rust names.
pub fn fmt_num(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        format!("{x}")
    }
}

/// Serializes as a bare JSON number carrying exactly the [`fmt_num`] digits.
/// Non-finite values become `null`.
pub fn serialize_num<S: serde::Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    if !x.is_finite() {
        return s.serialize_none();
    }
    let raw = RawValue::from_string(fmt_num(*x)).map_err(serde::ser::Error::custom)?;
    raw.serialize(s)
}

pub fn serialize_num_opt<S: serde::Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
    match x {
        Some(v) => serialize_num(v, s),
        None => s.serialize_none(),
    }
}
