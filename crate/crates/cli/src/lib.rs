//! JSON front end for the exact Drazin-inverse library: matrix I/O, job
//! execution and report rendering for the `drazin` binary.

pub mod args;
pub mod error;
pub mod job;
pub mod json;
pub mod render;

pub use args::{Cli, Sub};
pub use error::CliError;
pub use job::{error_outcome, run, Command, Emit, JobSpec, MethodArg, Options, Outcome};
pub use render::render_text;
