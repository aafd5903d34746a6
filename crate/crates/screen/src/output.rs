//! Output rendering: canonical JSON (sorted, stable), CSV, and plain text.

use std::fmt::Write as _;

use serde_json::{json, Value};

use dirac_core::qfmt;
use dirac_core::Rat;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "plain" => Ok(Format::Plain),
            other => Err(format!("unknown format {other:?} (expected json, csv, or plain)")),
        }
    }
}

pub fn rat_value(q: &Rat) -> Value {
    Value::String(qfmt::render(q))
}

pub fn rats_value(qs: &[Rat]) -> Value {
    Value::Array(qs.iter().map(rat_value).collect())
}

pub fn ints_value(v: &[i64]) -> Value {
    Value::Array(v.iter().map(|&c| json!(c)).collect())
}

/// Serialize with two-space indentation and a trailing newline. Maps are
/// emitted in key order by serde_json's BTreeMap-backed objects, keeping
/// byte-identical output across runs.
pub fn print_json(value: &Value) {
    println!("{}", serde_json::to_string_pretty(value).expect("serializable"));
}

/// One CSV line; fields containing commas are quoted.
pub fn csv_line(fields: &[String]) -> String {
    let mut line = String::new();
    for (i, f) in fields.iter().enumerate() {
        if i > 0 {
            line.push(',');
        }
        if f.contains(',') || f.contains('"') {
            let escaped = f.replace('"', "\"\"");
            let _ = write!(line, "\"{escaped}\"");
        } else {
            line.push_str(f);
        }
    }
    line
}

pub fn bracketed(v: &[i64]) -> String {
    let inner: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    format!("[{}]", inner.join(","))
}

pub fn bracketed_rats(v: &[Rat]) -> String {
    let inner: Vec<String> = v.iter().map(qfmt::render).collect();
    format!("[{}]", inner.join(","))
}
