//! Report assembly and rendering.
//!
//! Reports are built as ordered JSON values; the text form is rendered from
//! the same tree, so both carry identical content in identical order.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};
use seshadri::exact::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Text,
    MachineReadable,
}

pub fn digest(bytes: &[u8]) -> String {
    let hash = Sha256::digest(bytes);
    let mut out = String::from("sha256:");
    for b in hash {
        write!(out, "{b:02x}").unwrap();
    }
    out
}

/// `q` to six decimal places, rounding half away from zero.
pub fn decimal6(q: &Rational) -> String {
    let scale = BigInt::from(1_000_000);
    let (quot, rem) = (q.numer().abs() * &scale).div_rem(q.denom());
    let rounded = if rem * 2 >= *q.denom() { quot + 1 } else { quot };
    let (int_part, frac) = rounded.div_rem(&scale);
    let sign = if q.is_negative() && !(int_part.is_zero() && frac.is_zero()) { "-" } else { "" };
    format!("{sign}{int_part}.{frac:06}")
}

/// A rational as `{"exact": "p/q", "decimal": "…"}`.
pub fn rational(q: &Rational) -> Value {
    json!({ "exact": q.to_string(), "decimal": decimal6(q) })
}

fn as_rational(v: &Value) -> Option<(&str, &str)> {
    let obj = v.as_object()?;
    if obj.len() != 2 {
        return None;
    }
    Some((obj.get("exact")?.as_str()?, obj.get("decimal")?.as_str()?))
}

fn scalar(v: &Value) -> Option<String> {
    if let Some((exact, decimal)) = as_rational(v) {
        return Some(format!("{exact} (~{decimal}, advisory)"));
    }
    match v {
        Value::Null => Some("none".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.is_empty() => Some("none".into()),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            Some(items.iter().map(|i| scalar(i).unwrap()).collect::<Vec<_>>().join(", "))
        }
        _ => None,
    }
}

fn render_into(v: &Value, indent: usize, out: &mut String) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, item) in map {
                match scalar(item) {
                    Some(s) => writeln!(out, "{pad}{k}: {s}").unwrap(),
                    None => {
                        writeln!(out, "{pad}{k}:").unwrap();
                        render_into(item, indent + 2, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match scalar(item) {
                    Some(s) => writeln!(out, "{pad}- {s}").unwrap(),
                    None => {
                        writeln!(out, "{pad}-").unwrap();
                        render_into(item, indent + 2, out);
                    }
                }
            }
        }
        other => writeln!(out, "{pad}{}", scalar(other).unwrap()).unwrap(),
    }
}

pub fn render(report: &Map<String, Value>, format: Format) -> String {
    match format {
        Format::MachineReadable => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = String::new();
            render_into(&Value::Object(report.clone()), 0, &mut s);
            s
        }
    }
}
