//! Plain-text rendering of JSON reports.

use serde_json::Value;

use crate::json::{matrix_from_json, scalar_from_json};

/// Renders a report as `key: value` lines, with matrices printed row by row
/// in canonical scalar notation.
pub fn render_text(report: &Value) -> String {
    let mut out = String::new();
    if let Value::Object(map) = report {
        for (key, v) in map {
            let body = render_value(v);
            if body.contains('\n') {
                out.push_str(&format!("{key}:\n"));
                for line in body.lines() {
                    out.push_str(&format!("  {line}\n"));
                }
            } else {
                out.push_str(&format!("{key}: {body}\n"));
            }
        }
    } else {
        out.push_str(&render_value(report));
        out.push('\n');
    }
    out
}

fn render_value(v: &Value) -> String {
    match v {
        Value::Object(map) if map.contains_key("entries") => render_matrix(v),
        Value::Object(map) if map.contains_key("coefficients") => {
            let var = map.get("variable").and_then(Value::as_str).unwrap_or("t");
            let coeffs = map["coefficients"].as_array().cloned().unwrap_or_default();
            if coeffs.is_empty() {
                return "0".into();
            }
            let mut s = String::new();
            for (m, c) in coeffs.iter().enumerate() {
                s.push_str(&format!("{var}^{m}:\n"));
                for line in render_matrix(c).lines() {
                    s.push_str(&format!("  {line}\n"));
                }
            }
            s
        }
        Value::Object(map) => map
            .iter()
            .map(|(k, v)| format!("{k}={}", render_value(v)))
            .collect::<Vec<_>>()
            .join(" "),
        Value::Array(_) if is_scalar(v) => scalar_from_json(v, "report")
            .map(|z| z.to_string())
            .unwrap_or_else(|_| v.to_string()),
        Value::Array(items) => {
            let lines: Vec<String> = items.iter().map(render_value).collect();
            if items.iter().all(is_scalar) {
                format!("[{}]", lines.join(", "))
            } else {
                lines.join("\n") + "\n"
            }
        }
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn is_scalar(v: &Value) -> bool {
    matches!(v, Value::Array(pair) if pair.len() == 2 && pair.iter().all(Value::is_string))
}

fn render_matrix(v: &Value) -> String {
    match matrix_from_json(v, "report") {
        Ok(m) => {
            let mut s = String::new();
            for i in 1..=m.rows() {
                let row: Vec<String> = m.row(i).iter().map(ToString::to_string).collect();
                s.push_str(&format!("[{}]\n", row.join(", ")));
            }
            s
        }
        Err(_) => v.to_string(),
    }
}
