//! Command-line pipelines over the spike-train analytics library.
//!
//! Subcommands compose through files rather than pipes: every intermediate
//! (event files, CSV tables, JSON reports) is inspectable and cacheable, and
//! identical configuration plus seed reproduces identical bytes.

pub mod args;
pub mod commands;
pub mod output;

use std::fmt;

/// Command failures, classified for the exit code contract:
/// 0 ok, 1 usage, 2 data error, 3 internal.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Data(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Data(_) => 2,
            CliError::Internal(_) => 3,
        }
    }

    /// Wrap a pipeline failure with the name of the stage that raised it.
    pub fn data_stage(stage: &str, err: impl fmt::Display) -> Self {
        CliError::Data(format!("stage {stage}: {err}"))
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Data(msg) => write!(f, "data error: {msg}"),
            CliError::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;

/// Run a parsed invocation.
pub fn dispatch(cli: args::Cli) -> CliResult<()> {
    match cli.command {
        args::Command::Ingest(a) => commands::ingest::run(&a),
        args::Command::Report(a) => commands::report::run(&a),
        args::Command::Lv(a) => commands::lv::run(&a),
        args::Command::Null(a) => commands::null::run(&a),
        args::Command::Dist(a) => commands::dist::run(&a),
        args::Command::Zipf(a) => commands::zipf::run(&a),
        args::Command::Corr(a) => commands::corr::run(&a),
        args::Command::Synth(a) => commands::synth::run(&a),
    }
}
