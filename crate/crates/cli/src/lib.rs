//! Library half of the `relpulse` command-line tool: configuration
//! resolution, report assembly and rendering, the sweep/fit pipeline, and
//! the invariant verification suite. The binary in `main.rs` is a thin
//! dispatcher over these functions so integration tests can drive them
//! directly.

pub mod commands;
pub mod config;
pub mod numfmt;
pub mod pipeline;
pub mod report;
pub mod verify;

/// Errors surfaced to the command line. `Config` and `Io` both map to exit
/// code 2; verification failures are outcomes, not errors.
#[derive(Debug)]
pub enum AppError {
    Config(String),
    Io(String),
}

impl std::fmt::Display for AppError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Config(msg) => write!(f, "{msg}"),
            Self::Io(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for AppError {}

impl From<relpulse::Error> for AppError {
    fn from(e: relpulse::Error) -> Self {
        Self::Config(e.to_string())
    }
}

impl From<std::io::Error> for AppError {
    fn from(e: std::io::Error) -> Self {
        Self::Io(e.to_string())
    }
}
