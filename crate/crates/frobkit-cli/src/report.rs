//! Structured command output.
//!
//! Every subcommand produces a [`Report`]; the JSON rendering is
//! deterministic (object keys are stored sorted), and the text rendering
//! is a plain indented listing of the same data. Integers whose magnitude
//! exceeds 2^53 are emitted as decimal strings so JSON consumers never see
//! a value that loses precision as a double.

use serde::{Deserialize, Serialize};
use serde_json::Value;

/// Largest integer magnitude emitted as a JSON number.
const MAX_SAFE_INTEGER: i128 = 1 << 53;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub inputs: Value,
    pub result: Value,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_checks_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// One named verification outcome inside a report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub details: Option<String>,
}

impl Check {
    pub fn new(name: impl Into<String>, passed: bool, details: Option<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            details,
        }
    }
}

/// An integer as a JSON value: a number when it is exactly representable
/// as a double, a decimal string otherwise.
pub fn int_value(v: i128) -> Value {
    if v.abs() <= MAX_SAFE_INTEGER {
        Value::from(v as i64)
    } else {
        Value::String(v.to_string())
    }
}

pub fn uint_value(v: u128) -> Value {
    if v <= MAX_SAFE_INTEGER as u128 {
        Value::from(v as u64)
    } else {
        Value::String(v.to_string())
    }
}

pub fn int_array(vs: &[i128]) -> Value {
    Value::Array(vs.iter().map(|&v| int_value(v)).collect())
}

/// Human-readable rendering: one `key: value` line per field, nested
/// objects indented, arrays inline.
pub fn render_text(report: &Report) -> String {
    let mut out = String::new();
    out.push_str("command: ");
    out.push_str(&report.command);
    out.push('\n');
    render_section(&mut out, "inputs", &report.inputs);
    render_section(&mut out, "result", &report.result);
    if !report.checks.is_empty() {
        out.push_str("checks:\n");
        for check in &report.checks {
            let status = if check.passed { "pass" } else { "fail" };
            match &check.details {
                Some(details) => {
                    out.push_str(&format!("  {}: {status} ({details})\n", check.name));
                }
                None => out.push_str(&format!("  {}: {status}\n", check.name)),
            }
        }
    }
    out
}

fn render_section(out: &mut String, title: &str, value: &Value) {
    out.push_str(title);
    out.push_str(":\n");
    render_value(out, value, 1);
}

fn render_value(out: &mut String, value: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match value {
        Value::Object(map) => {
            for (key, inner) in map {
                if let Value::Object(_) = inner {
                    out.push_str(&format!("{pad}{key}:\n"));
                    render_value(out, inner, depth + 1);
                } else {
                    out.push_str(&format!("{pad}{key}: {}\n", inline(inner)));
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", inline(other))),
    }
}

fn inline(value: &Value) -> String {
    match value {
        Value::Null => "none".to_string(),
        Value::Bool(b) => b.to_string(),
        Value::Number(n) => n.to_string(),
        Value::String(s) => s.clone(),
        Value::Array(items) => items
            .iter()
            .map(inline)
            .collect::<Vec<_>>()
            .join(", "),
        Value::Object(_) => unreachable!("nested objects are rendered as blocks"),
    }
}
