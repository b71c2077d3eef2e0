use std::collections::BTreeMap;

use drazin_core::{
    drazin_col, drazin_denominator, drazin_oracle, drazin_row, group_inverse, index_of, ode_left_partial,
    ode_right_partial, residual_left, residual_right, solve_ax, solve_axb, solve_xa, verify_drazin, CMatrix,
    DrazinResult, Method, SolveReport,
};
use serde_json::{json, Map, Value};

use crate::error::CliError;
use crate::json::{matrix_to_json, polynomial_to_json, profile_to_json, scalar_to_json, vectors_to_json};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, clap::ValueEnum)]
pub enum Command {
    Drazin,
    Group,
    SolveAx,
    SolveXa,
    SolveAxb,
    OdeLeft,
    OdeRight,
    Verify,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Drazin => "drazin",
            Command::Group => "group",
            Command::SolveAx => "solve-ax",
            Command::SolveXa => "solve-xa",
            Command::SolveAxb => "solve-axb",
            Command::OdeLeft => "ode-left",
            Command::OdeRight => "ode-right",
            Command::Verify => "verify",
        }
    }

    /// Names of the matrices the command reads.
    pub fn required(self) -> &'static [&'static str] {
        match self {
            Command::Drazin | Command::Group => &["A"],
            Command::SolveAx | Command::SolveXa | Command::OdeLeft | Command::OdeRight => &["A", "B"],
            Command::SolveAxb => &["A", "B", "D"],
            Command::Verify => &["A", "X"],
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Emit {
    #[default]
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum MethodArg {
    #[default]
    Column,
    Row,
    Oracle,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Column => Method::Column,
            MethodArg::Row => Method::Row,
            MethodArg::Oracle => Method::Oracle,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Options {
    pub max_dim: usize,
    pub emit: Emit,
    /// Only consulted by `drazin`.
    pub method: Method,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            max_dim: drazin_core::matrix::DEFAULT_MAX_DIM,
            emit: Emit::Json,
            method: Method::Column,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JobSpec {
    pub command: Command,
    pub inputs: BTreeMap<String, CMatrix>,
    pub options: Options,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub exit_code: i32,
    pub report: Value,
}

impl Outcome {
    pub fn is_error(&self) -> bool {
        self.exit_code != 0
    }
}

/// Runs one job. Errors become a report with `"status": "error"` and a
/// nonzero exit code.
pub fn run(job: &JobSpec) -> Outcome {
    match execute(job) {
        Ok(body) => {
            let mut report = Map::new();
            report.insert("command".into(), job.command.name().into());
            report.insert("status".into(), "ok".into());
            report.extend(body);
            Outcome {
                exit_code: 0,
                report: Value::Object(report),
            }
        }
        Err(e) => error_outcome(job.command, &e),
    }
}

pub fn error_outcome(command: Command, e: &CliError) -> Outcome {
    Outcome {
        exit_code: e.exit_code(),
        report: json!({
            "command": command.name(),
            "status": "error",
            "error": { "kind": e.kind(), "message": e.to_string() },
        }),
    }
}

pub fn check_dimension(name: &str, m: &CMatrix, max: usize) -> Result<(), CliError> {
    if m.rows() > max || m.cols() > max {
        return Err(CliError::DimensionOverflow {
            name: name.to_string(),
            rows: m.rows(),
            cols: m.cols(),
            max,
        });
    }
    Ok(())
}

fn execute(job: &JobSpec) -> Result<Map<String, Value>, CliError> {
    let command = job.command;
    for &name in command.required() {
        let m = job.inputs.get(name).ok_or(CliError::MissingInput {
            command: command.name(),
            name,
        })?;
        check_dimension(name, m, job.options.max_dim)?;
    }
    let input = |name: &str| &job.inputs[name];
    let out = match command {
        Command::Drazin => drazin_report(input("A"), job.options.method)?,
        Command::Group => drazin_fields(&group_inverse(input("A"))?),
        Command::SolveAx => solve_fields(&solve_ax(input("A"), input("B"))?),
        Command::SolveXa => solve_fields(&solve_xa(input("A"), input("B"))?),
        Command::SolveAxb => solve_fields(&solve_axb(input("A"), input("B"), input("D"))?),
        Command::OdeLeft | Command::OdeRight => {
            let (a, b) = (input("A"), input("B"));
            let (x, residual) = if command == Command::OdeLeft {
                let x = ode_left_partial(a, b)?;
                let r = residual_left(a, b, &x)?;
                (x, r)
            } else {
                let x = ode_right_partial(a, b)?;
                let r = residual_right(a, b, &x)?;
                (x, r)
            };
            let (profile, denominator) = drazin_denominator(a)?;
            object(json!({
                "profile": profile_to_json(&profile),
                "denominator": scalar_to_json(&denominator),
                "degree": x.degree(),
                "residual_zero": residual.is_zero(),
                "result": polynomial_to_json(&x),
            }))
        }
        Command::Verify => {
            let axioms = verify_drazin(input("A"), input("X"))?;
            object(json!({
                "profile": profile_to_json(&axioms.profile),
                "axioms": {
                    "power_left": axioms.power_left,
                    "outer": axioms.outer,
                    "commutes": axioms.commutes,
                    "power_right": axioms.power_right,
                },
                "all_hold": axioms.all_hold(),
            }))
        }
    };
    Ok(out)
}

fn object(v: Value) -> Map<String, Value> {
    match v {
        Value::Object(m) => m,
        _ => unreachable!("report bodies are built as objects"),
    }
}

fn drazin_report(a: &CMatrix, method: Method) -> Result<Map<String, Value>, CliError> {
    let res = match method {
        Method::Column => drazin_col(a)?,
        Method::Row => drazin_row(a)?,
        Method::Oracle => {
            // the oracle has no common denominator of its own
            let inverse = drazin_oracle(a)?;
            return Ok(object(json!({
                "method": method.as_str(),
                "profile": profile_to_json(&index_of(a)?),
                "denominator": null,
                "result": matrix_to_json(&inverse),
            })));
        }
    };
    Ok(drazin_fields(&res))
}

fn drazin_fields(res: &DrazinResult) -> Map<String, Value> {
    object(json!({
        "method": res.method.as_str(),
        "profile": profile_to_json(&res.profile),
        "denominator": scalar_to_json(&res.denominator),
        "result": matrix_to_json(&res.inverse),
    }))
}

fn solve_fields(rep: &SolveReport) -> Map<String, Value> {
    let mut out = object(json!({
        "profile_a": profile_to_json(&rep.profile_a),
    }));
    if let Some(p) = &rep.profile_b {
        out.insert("profile_b".into(), profile_to_json(p));
    }
    out.insert("denominator".into(), scalar_to_json(&rep.denominator));
    out.insert("restriction_satisfied".into(), rep.restriction_satisfied.into());
    out.insert("transformed_rhs".into(), matrix_to_json(&rep.transformed_rhs));
    if let Some(cols) = &rep.d_b_columns {
        out.insert("d_b_columns".into(), vectors_to_json(cols));
    }
    if let Some(rows) = &rep.d_a_rows {
        out.insert("d_a_rows".into(), vectors_to_json(rows));
    }
    out.insert("result".into(), matrix_to_json(&rep.x));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn job(command: Command, inputs: &[(&str, CMatrix)]) -> JobSpec {
        JobSpec {
            command,
            inputs: inputs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            options: Options::default(),
        }
    }

    fn nilpotent() -> CMatrix {
        CMatrix::from_gaussian_ints(&[[(0, 0), (1, 0)], [(0, 0), (0, 0)]])
    }

    #[test]
    fn missing_input_is_reported() {
        let out = run(&job(Command::SolveAx, &[("A", nilpotent())]));
        assert_eq!(out.exit_code, 2);
        assert_eq!(out.report["error"]["kind"], "missing-input");
    }

    #[test]
    fn dimension_guard() {
        let mut j = job(Command::Drazin, &[("A", CMatrix::identity(3))]);
        j.options.max_dim = 2;
        let out = run(&j);
        assert_eq!(out.exit_code, 5);
        assert_eq!(out.report["status"], "error");
    }

    #[test]
    fn group_rejects_index_two() {
        let out = run(&job(Command::Group, &[("A", nilpotent())]));
        assert_eq!(out.exit_code, 6);
        assert_eq!(out.report["error"]["kind"], "index-too-large");
    }

    #[test]
    fn drazin_methods_report_provenance() {
        for (method, denominator) in [(Method::Column, json!(["1", "0"])), (Method::Oracle, Value::Null)] {
            let mut j = job(Command::Drazin, &[("A", nilpotent())]);
            j.options.method = method;
            let out = run(&j);
            assert_eq!(out.exit_code, 0);
            assert_eq!(out.report["method"], method.as_str());
            assert_eq!(out.report["denominator"], denominator);
            assert_eq!(out.report["profile"], json!({"k": 2, "r": 0}));
        }
    }

    #[test]
    fn ode_reports_zero_residual() {
        let out = run(&job(
            Command::OdeLeft,
            &[("A", nilpotent()), ("B", CMatrix::identity(2))],
        ));
        assert_eq!(out.exit_code, 0);
        assert_eq!(out.report["residual_zero"], true);
        assert_eq!(out.report["degree"], 2);
    }

    #[test]
    fn verify_is_not_an_error_when_axioms_fail() {
        let out = run(&job(
            Command::Verify,
            &[("A", nilpotent()), ("X", CMatrix::identity(2))],
        ));
        assert_eq!(out.exit_code, 0);
        assert_eq!(out.report["all_hold"], false);
    }

    #[test]
    fn compute_errors_use_their_own_code() {
        let out = run(&job(
            Command::SolveAx,
            &[("A", nilpotent()), ("B", CMatrix::identity(3))],
        ));
        assert_eq!(out.exit_code, 8);
    }
}
