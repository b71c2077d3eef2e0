use std::collections::BTreeMap;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::error::CliError;
use crate::job::{check_dimension, Command, Emit, JobSpec, MethodArg, Options};
use crate::json::matrix_from_str;

#[derive(Debug, Parser)]
#[command(
    name = "drazin",
    version,
    about = "Exact Drazin-inverse computations over the Gaussian rationals"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Sub,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Emit::Json)]
    pub emit: Emit,

    /// Largest accepted row or column count.
    #[arg(long, global = true, env = "DRAZIN_MAX_DIM", default_value_t = drazin_core::matrix::DEFAULT_MAX_DIM)]
    pub max_dim: usize,
}

#[derive(Debug, Subcommand)]
pub enum Sub {
    /// Drazin inverse of A.
    Drazin {
        #[arg(long = "input", visible_alias = "A", value_name = "FILE")]
        a: PathBuf,
        #[arg(long, value_enum, default_value_t = MethodArg::Column)]
        method: MethodArg,
    },
    /// Group inverse of A (index at most 1).
    Group {
        #[arg(long = "input", visible_alias = "A", value_name = "FILE")]
        a: PathBuf,
    },
    /// X = A^D B.
    SolveAx {
        #[arg(long = "A", value_name = "FILE")]
        a: PathBuf,
        #[arg(long = "B", value_name = "FILE")]
        b: PathBuf,
    },
    /// X = B A^D.
    SolveXa {
        #[arg(long = "A", value_name = "FILE")]
        a: PathBuf,
        #[arg(long = "B", value_name = "FILE")]
        b: PathBuf,
    },
    /// X = A^D D B^D.
    SolveAxb {
        #[arg(long = "A", value_name = "FILE")]
        a: PathBuf,
        #[arg(long = "B", value_name = "FILE")]
        b: PathBuf,
        #[arg(long = "D", value_name = "FILE")]
        d: PathBuf,
    },
    /// Polynomial partial solution of X' + AX = B.
    OdeLeft {
        #[arg(long = "A", value_name = "FILE")]
        a: PathBuf,
        #[arg(long = "B", value_name = "FILE")]
        b: PathBuf,
    },
    /// Polynomial partial solution of X' + XA = B.
    OdeRight {
        #[arg(long = "A", value_name = "FILE")]
        a: PathBuf,
        #[arg(long = "B", value_name = "FILE")]
        b: PathBuf,
    },
    /// Checks the Drazin axioms for a candidate X.
    Verify {
        #[arg(long = "A", value_name = "FILE")]
        a: PathBuf,
        #[arg(long = "X", value_name = "FILE")]
        x: PathBuf,
    },
}

impl Sub {
    pub fn command(&self) -> Command {
        match self {
            Sub::Drazin { .. } => Command::Drazin,
            Sub::Group { .. } => Command::Group,
            Sub::SolveAx { .. } => Command::SolveAx,
            Sub::SolveXa { .. } => Command::SolveXa,
            Sub::SolveAxb { .. } => Command::SolveAxb,
            Sub::OdeLeft { .. } => Command::OdeLeft,
            Sub::OdeRight { .. } => Command::OdeRight,
            Sub::Verify { .. } => Command::Verify,
        }
    }

    fn files(&self) -> Vec<(&'static str, &PathBuf)> {
        match self {
            Sub::Drazin { a, .. } | Sub::Group { a } => vec![("A", a)],
            Sub::SolveAx { a, b } | Sub::SolveXa { a, b } | Sub::OdeLeft { a, b } | Sub::OdeRight { a, b } => {
                vec![("A", a), ("B", b)]
            }
            Sub::SolveAxb { a, b, d } => vec![("A", a), ("B", b), ("D", d)],
            Sub::Verify { a, x } => vec![("A", a), ("X", x)],
        }
    }
}

impl Cli {
    /// Reads and parses every input file named on the command line.
    pub fn into_job(self) -> Result<JobSpec, CliError> {
        let mut inputs = BTreeMap::new();
        for (name, path) in self.command.files() {
            let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
                path: path.display().to_string(),
                source,
            })?;
            let m = matrix_from_str(&text, &format!("{name} ({})", path.display()))?;
            check_dimension(name, &m, self.max_dim)?;
            inputs.insert(name.to_string(), m);
        }
        let method = match &self.command {
            Sub::Drazin { method, .. } => (*method).into(),
            _ => drazin_core::Method::Column,
        };
        Ok(JobSpec {
            command: self.command.command(),
            inputs,
            options: Options {
                max_dim: self.max_dim,
                emit: self.emit,
                method,
            },
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_uppercase_flags() {
        let cli =
            Cli::try_parse_from(["drazin", "solve-axb", "--A", "a.json", "--B", "b.json", "--D", "d.json"]).unwrap();
        assert_eq!(cli.command.command(), Command::SolveAxb);
        assert_eq!(cli.command.files().len(), 3);
    }

    #[test]
    fn drazin_accepts_input_or_a() {
        for flag in ["--input", "--A"] {
            let cli = Cli::try_parse_from(["drazin", "drazin", flag, "a.json", "--method", "oracle"]).unwrap();
            assert!(matches!(
                cli.command,
                Sub::Drazin {
                    method: MethodArg::Oracle,
                    ..
                }
            ));
        }
    }

    #[test]
    fn max_dim_flag_after_subcommand() {
        let cli =
            Cli::try_parse_from(["drazin", "group", "--A", "a.json", "--max-dim", "4", "--emit", "text"]).unwrap();
        assert_eq!(cli.max_dim, 4);
        assert_eq!(cli.emit, Emit::Text);
    }

    #[test]
    fn missing_file_is_io_error() {
        let cli = Cli::try_parse_from(["drazin", "group", "--A", "/nonexistent/a.json"]).unwrap();
        assert!(matches!(cli.into_job(), Err(CliError::Io { .. })));
    }
}
