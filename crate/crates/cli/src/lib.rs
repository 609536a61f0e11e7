//! Command-line front end: configuration loading, experiment orchestration,
//! and plot-ready artifact files.
//!
//! Machine-readable output goes to files and stdout; progress lines go to
//! stderr. The `VQPT_THREADS` environment variable caps the trial pool.

pub mod args;
pub mod commands;
pub mod output;

use thiserror::Error;

pub use args::{parse_args, usage, Command};
pub use commands::{cmd_learn, cmd_sweep_dt, cmd_validate};

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad command line; exits 2.
    #[error("{0}")]
    Usage(String),

    /// Unreadable or invalid configuration; exits 2.
    #[error("config error in {path}: {message}")]
    Config { path: String, message: String },

    /// Failure while running or writing results; exits 1.
    #[error("{0}")]
    Runtime(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Config { .. } => 2,
            CliError::Runtime(_) | CliError::Io { .. } => 1,
        }
    }
}

impl From<vqpt_core::CoreError> for CliError {
    fn from(e: vqpt_core::CoreError) -> Self {
        match &e {
            vqpt_core::CoreError::CapacityExceeded { requested, max } => CliError::Runtime(format!(
                "{requested} qubits exceed the simulator cap of {max}; \
                 reduce the register size or split the experiment"
            )),
            vqpt_core::CoreError::InvalidConfig(msg) => CliError::Config {
                path: "<config>".into(),
                message: msg.clone(),
            },
            _ => CliError::Runtime(e.to_string()),
        }
    }
}

/// Entry point used by the binary; returns the process exit code.
pub fn run(argv: Vec<String>) -> i32 {
    let command = match parse_args(&argv) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            eprintln!("{}", usage());
            return e.exit_code();
        }
    };
    let outcome = match command {
        Command::Help => {
            println!("{}", usage());
            Ok(())
        }
        Command::Learn(a) => cmd_learn(&a).map(|_| ()),
        Command::SweepDt(a) => cmd_sweep_dt(&a).map(|_| ()),
        Command::Validate(a) => cmd_validate(&a).map(|_| ()),
    };
    match outcome {
        Ok(()) => 0,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}
