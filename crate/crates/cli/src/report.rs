//! JSON values for reports and the `--human` table rendering.

use folex::forms::DiffForm;
use folex::linalg::RatMatrix;
use folex::poly::{fmt_rational, Poly};
use folex::Rational;
use serde_json::{Map, Value};

pub const SCHEMA: u64 = 1;

/// Starts a report object with the schema tag and command name.
pub fn report(command: &str) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("schema".into(), Value::from(SCHEMA));
    m.insert("command".into(), Value::from(command));
    m
}

/// Integers that fit in `i64` become JSON numbers, anything else a string.
pub fn rational(c: &Rational) -> Value {
    let text = fmt_rational(c);
    match text.parse::<i64>() {
        Ok(v) => Value::from(v),
        Err(_) => Value::from(text),
    }
}

pub fn integer_text(text: String) -> Value {
    match text.parse::<i64>() {
        Ok(v) => Value::from(v),
        Err(_) => Value::from(text),
    }
}

pub fn matrix(m: &RatMatrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(rational).collect()))
            .collect(),
    )
}

pub fn form(w: &DiffForm) -> Value {
    Value::from(w.to_string())
}

pub fn poly(p: &Poly) -> Value {
    Value::from(p.to_string())
}

/// A univariate polynomial printed in the variable `lambda`.
pub fn lambda_poly(p: &Poly) -> Value {
    Value::from(p.to_string().replace("x0", "lambda"))
}

/// Two-column `key | value` table; array elements go on separate lines,
/// nested values are shown as compact JSON.
pub fn human(value: &Value) -> String {
    let Value::Object(map) = value else {
        return format!("{value}\n");
    };
    let width = map.keys().map(String::len).max().unwrap_or(0);
    let mut out = String::new();
    for (k, v) in map {
        let shown = match v {
            Value::String(s) => s.clone(),
            Value::Array(items) if !items.is_empty() => {
                let lines: Vec<String> = items
                    .iter()
                    .map(|i| i.as_str().map_or_else(|| i.to_string(), str::to_owned))
                    .collect();
                lines.join(&format!("\n{:width$}   ", ""))
            }
            other => other.to_string(),
        };
        out.push_str(&format!("{k:width$} | {shown}\n"));
    }
    out
}
