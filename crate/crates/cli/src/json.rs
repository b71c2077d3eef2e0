//! Exact JSON encoding of matrices and matrix polynomials.
//!
//! A matrix is `{"rows": n, "cols": m, "entries": [...]}` with `n*m` entries
//! in row-major order. An entry is a `[re, im]` pair whose components are
//! integers or `"p/q"` strings, or a single component for a real entry, or
//! a string such as `"1/2-3i"`. Output always uses `[re, im]` string pairs.

use std::str::FromStr;

use drazin_core::exactnum::{format_rational, parse_rational};
use drazin_core::{CMatrix, GaussianRational, IndexProfile, MatrixPolynomial};
use serde_json::{json, Value};

use crate::error::CliError;

fn component(v: &Value, ctx: &str) -> Result<GaussianRational, CliError> {
    let text = match v {
        Value::Number(n) if n.is_i64() || n.is_u64() => n.to_string(),
        Value::Number(n) => {
            return Err(CliError::parse(
                ctx,
                format!("{n} is not an integer; write fractions as \"p/q\""),
            ))
        }
        Value::String(s) => s.clone(),
        other => {
            return Err(CliError::parse(
                ctx,
                format!("expected a number or string, found {other}"),
            ))
        }
    };
    parse_rational(&text)
        .map(GaussianRational::real)
        .map_err(|e| CliError::parse(ctx, e.to_string()))
}

pub fn scalar_from_json(v: &Value, ctx: &str) -> Result<GaussianRational, CliError> {
    match v {
        Value::Array(pair) if pair.len() == 2 => {
            let re = component(&pair[0], ctx)?;
            let im = component(&pair[1], ctx)?;
            Ok(&re + &(&im * &GaussianRational::i()))
        }
        Value::Array(other) => Err(CliError::parse(
            ctx,
            format!("entry pair has {} components", other.len()),
        )),
        Value::String(s) => GaussianRational::from_str(s).map_err(|e| CliError::parse(ctx, e.to_string())),
        other => component(other, ctx),
    }
}

pub fn scalar_to_json(z: &GaussianRational) -> Value {
    json!([format_rational(z.re()), format_rational(z.im())])
}

fn dimension(obj: &serde_json::Map<String, Value>, key: &str, ctx: &str) -> Result<usize, CliError> {
    obj.get(key)
        .and_then(Value::as_u64)
        .filter(|&d| d > 0)
        .map(|d| d as usize)
        .ok_or_else(|| CliError::parse(ctx, format!("\"{key}\" must be a positive integer")))
}

pub fn matrix_from_json(v: &Value, ctx: &str) -> Result<CMatrix, CliError> {
    let obj = v
        .as_object()
        .ok_or_else(|| CliError::parse(ctx, "a matrix must be a JSON object"))?;
    let rows = dimension(obj, "rows", ctx)?;
    let cols = dimension(obj, "cols", ctx)?;
    let entries = obj
        .get("entries")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::parse(ctx, "\"entries\" must be an array"))?;
    if entries.len() != rows * cols {
        return Err(CliError::parse(
            ctx,
            format!("{} entries given for a {rows}x{cols} matrix", entries.len()),
        ));
    }
    let data = entries
        .iter()
        .enumerate()
        .map(|(idx, e)| scalar_from_json(e, &format!("{ctx} entry ({}, {})", idx / cols + 1, idx % cols + 1)))
        .collect::<Result<Vec<_>, _>>()?;
    CMatrix::new(rows, cols, data).map_err(|e| CliError::parse(ctx, e.to_string()))
}

pub fn matrix_from_str(text: &str, ctx: &str) -> Result<CMatrix, CliError> {
    let v: Value = serde_json::from_str(text).map_err(|e| CliError::parse(ctx, e.to_string()))?;
    matrix_from_json(&v, ctx)
}

pub fn matrix_to_json(m: &CMatrix) -> Value {
    json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": m.entries().iter().map(scalar_to_json).collect::<Vec<_>>(),
    })
}

pub fn vectors_to_json(vs: &[Vec<GaussianRational>]) -> Value {
    Value::Array(
        vs.iter()
            .map(|v| Value::Array(v.iter().map(scalar_to_json).collect()))
            .collect(),
    )
}

pub fn profile_to_json(p: &IndexProfile) -> Value {
    json!({ "k": p.k, "r": p.r })
}

pub fn polynomial_to_json(p: &MatrixPolynomial) -> Value {
    let (rows, cols) = p.shape();
    json!({
        "variable": p.variable().to_string(),
        "rows": rows,
        "cols": cols,
        "degree": p.degree(),
        "coefficients": p.coeffs().iter().map(matrix_to_json).collect::<Vec<_>>(),
    })
}

pub fn polynomial_from_json(v: &Value, ctx: &str) -> Result<MatrixPolynomial, CliError> {
    let obj = v
        .as_object()
        .ok_or_else(|| CliError::parse(ctx, "a polynomial must be a JSON object"))?;
    let rows = dimension(obj, "rows", ctx)?;
    let cols = dimension(obj, "cols", ctx)?;
    let coeffs = obj
        .get("coefficients")
        .and_then(Value::as_array)
        .ok_or_else(|| CliError::parse(ctx, "\"coefficients\" must be an array"))?
        .iter()
        .map(|c| matrix_from_json(c, ctx))
        .collect::<Result<Vec<_>, _>>()?;
    let var = obj
        .get("variable")
        .and_then(Value::as_str)
        .and_then(|s| s.chars().next())
        .unwrap_or('t');
    MatrixPolynomial::from_coeffs(rows, cols, coeffs)
        .map(|p| p.with_variable(var))
        .map_err(|e| CliError::parse(ctx, e.to_string()))
}
