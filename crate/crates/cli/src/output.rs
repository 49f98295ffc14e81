//! Byte-stable number, JSON and CSV formatting.

use serde_json::Value;

use crate::error::CliError;

/// Fixed notation with `precision` decimals for `1e-4 <= |x| < 1e15` (and
/// zero), exponent notation otherwise.
pub fn fmt_num(x: f64, precision: usize) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let x = if x == 0.0 { 0.0 } else { x };
    let a = x.abs();
    if x == 0.0 || (1e-4..1e15).contains(&a) {
        format!("{x:.precision$}")
    } else {
        format!("{x:.precision$e}")
    }
}

/// Pretty JSON with two-space indentation and fixed-precision floats.
pub fn render_json(v: &Value, precision: usize) -> String {
    let mut out = String::new();
    write_value(&mut out, v, 0, precision);
    out.push('\n');
    out
}

fn write_value(out: &mut String, v: &Value, indent: usize, precision: usize) {
    match v {
        Value::Null => out.push_str("null"),
        Value::Bool(b) => out.push_str(if *b { "true" } else { "false" }),
        Value::Number(n) => {
            if n.is_f64() {
                out.push_str(&fmt_num(n.as_f64().unwrap_or(f64::NAN), precision));
            } else {
                out.push_str(&n.to_string());
            }
        }
        Value::String(s) => out.push_str(&Value::String(s.clone()).to_string()),
        Value::Array(items) => {
            if items.is_empty() {
                out.push_str("[]");
                return;
            }
            out.push_str("[\n");
            for (i, item) in items.iter().enumerate() {
                pad(out, indent + 2);
                write_value(out, item, indent + 2, precision);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            pad(out, indent);
            out.push(']');
        }
        Value::Object(map) => {
            if map.is_empty() {
                out.push_str("{}");
                return;
            }
            out.push_str("{\n");
            for (i, (k, item)) in map.iter().enumerate() {
                pad(out, indent + 2);
                out.push_str(&Value::String(k.clone()).to_string());
                out.push_str(": ");
                write_value(out, item, indent + 2, precision);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            pad(out, indent);
            out.push('}');
        }
    }
}

fn pad(out: &mut String, n: usize) {
    out.extend(std::iter::repeat(' ').take(n));
}

/// A CSV cell.
pub enum Cell {
    Num(f64),
    Int(u64),
    Bool(bool),
    Text(String),
    Empty,
}

pub fn render_csv(header: &[&str], rows: &[Vec<Cell>], precision: usize) -> Result<String, CliError> {
    let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(Vec::new());
    let err = |e: csv::Error| CliError::Output(e.to_string());
    w.write_record(header).map_err(err)?;
    for row in rows {
        let cells: Vec<String> = row
            .iter()
            .map(|c| match c {
                Cell::Num(x) => fmt_num(*x, precision),
                Cell::Int(i) => i.to_string(),
                Cell::Bool(b) => b.to_string(),
                Cell::Text(s) => s.clone(),
                Cell::Empty => String::new(),
            })
            .collect();
        w.write_record(&cells).map_err(err)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Output(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Output(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn number_formats() {
        assert_eq!(fmt_num(3.0 - 8f64.sqrt(), 12), "0.171572875254");
        assert_eq!(fmt_num(0.0, 3), "0.000");
        assert_eq!(fmt_num(-0.0, 3), "0.000");
        assert_eq!(fmt_num(1.5e-13, 3), "1.500e-13");
        assert_eq!(fmt_num(f64::NAN, 3), "nan");
    }

    #[test]
    fn json_layout() {
        let v = serde_json::json!({"a": 1, "b": [0.5, null], "c": {}});
        assert_eq!(render_json(&v, 2), "{\n  \"a\": 1,\n  \"b\": [\n    0.50,\n    null\n  ],\n  \"c\": {}\n}\n");
    }
}
