use thiserror::Error;

/// Failures of a CLI job. Each kind maps to its own exit status.
#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error in {context}: {message}")]
    Parse { context: String, message: String },
    #[error("command {command} needs matrix {name}")]
    MissingInput { command: &'static str, name: &'static str },
    #[error("matrix {name} is {rows}x{cols}, beyond the maximum dimension {max}")]
    DimensionOverflow {
        name: String,
        rows: usize,
        cols: usize,
        max: usize,
    },
    #[error("group inverse needs index at most 1, but the index is {0}")]
    IndexTooLarge(usize),
    #[error("column and row representations disagree at entry ({row}, {col})")]
    RepresentationMismatch { row: usize, col: usize },
    #[error("{0}")]
    Compute(drazin_core::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::MissingInput { .. } => 2,
            CliError::Io { .. } => 3,
            CliError::Parse { .. } => 4,
            CliError::DimensionOverflow { .. } => 5,
            CliError::IndexTooLarge(_) => 6,
            CliError::RepresentationMismatch { .. } => 7,
            CliError::Compute(_) => 8,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::MissingInput { .. } => "missing-input",
            CliError::Io { .. } => "io",
            CliError::Parse { .. } => "parse",
            CliError::DimensionOverflow { .. } => "dimension-overflow",
            CliError::IndexTooLarge(_) => "index-too-large",
            CliError::RepresentationMismatch { .. } => "representation-mismatch",
            CliError::Compute(_) => "compute",
        }
    }

    pub(crate) fn parse(context: impl Into<String>, message: impl Into<String>) -> Self {
        CliError::Parse {
            context: context.into(),
            message: message.into(),
        }
    }
}

impl From<drazin_core::Error> for CliError {
    fn from(e: drazin_core::Error) -> Self {
        match e {
            drazin_core::Error::IndexTooLarge(k) => CliError::IndexTooLarge(k),
            drazin_core::Error::RepresentationMismatch { row, col } => CliError::RepresentationMismatch { row, col },
            drazin_core::Error::Parse(message) => CliError::parse("input", message),
            other => CliError::Compute(other),
        }
    }
}
