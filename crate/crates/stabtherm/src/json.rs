//! Deterministic JSON helpers.

use serde::ser::Error as _;
use serde::{Serialize, Serializer};
use serde_json::value::RawValue;

/// An `f64` serialized with 17 significant digits (`d.ddddddddddddddddde±x`).
/// Non-finite values become `null`.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Default)]
pub struct F17(pub f64);

pub fn format_f17(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        "null".to_string()
    }
}

impl Serialize for F17 {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let raw = RawValue::from_string(format_f17(self.0)).map_err(S::Error::custom)?;
        raw.serialize(s)
    }
}

impl From<f64> for F17 {
    fn from(x: f64) -> Self {
        F17(x)
    }
}

pub fn f17_vec(xs: &[f64]) -> Vec<F17> {
    xs.iter().copied().map(F17).collect()
}

/// Pretty JSON with a trailing newline.
pub fn to_pretty<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable report");
    s.push('\n');
    s
}
