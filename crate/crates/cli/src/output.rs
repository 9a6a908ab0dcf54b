//! Number rounding and canonical JSON output.

use serde_json::{Map, Value};

/// Rounds to `digits` significant decimal digits.
pub fn round_sig(x: f64, digits: usize) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{:.*e}", digits.saturating_sub(1), x).parse().unwrap_or(x)
}

#[derive(Debug, Clone, Copy)]
pub struct Format {
    pub digits: usize,
}

impl Format {
    pub fn new(exact: bool) -> Self {
        Self { digits: if exact { 17 } else { 15 } }
    }

    pub fn round(&self, x: f64) -> f64 {
        round_sig(x, self.digits)
    }

    /// Plain-text number: shortest decimal that reproduces the rounded value,
    /// in exponent notation only for very small or very large magnitudes.
    pub fn text(&self, x: f64) -> String {
        let v = self.round(x);
        let a = v.abs();
        if a != 0.0 && !(1e-5..1e16).contains(&a) {
            format!("{v:e}")
        } else {
            format!("{v}")
        }
    }

    /// JSON number; non-finite values become `null`.
    pub fn num(&self, x: f64) -> Value {
        serde_json::Number::from_f64(self.round(x)).map_or(Value::Null, Value::Number)
    }

    pub fn vec(&self, v: &[f64]) -> Value {
        Value::Array(v.iter().map(|&x| self.num(x)).collect())
    }

    pub fn matrix(&self, rows: &[Vec<f64>]) -> Value {
        Value::Array(rows.iter().map(|r| self.vec(r)).collect())
    }
}

/// Builds a JSON object; keys come out sorted because `Map` is ordered.
pub fn object<I, K>(entries: I) -> Value
where
    I: IntoIterator<Item = (K, Value)>,
    K: Into<String>,
{
    Value::Object(entries.into_iter().map(|(k, v)| (k.into(), v)).collect::<Map<_, _>>())
}

pub fn to_line(v: &Value) -> String {
    serde_json::to_string(v).expect("JSON values always serialize")
}
