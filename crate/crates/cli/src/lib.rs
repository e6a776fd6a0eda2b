//! Command-line front end for `liekoszul-core`: configuration, the
//! on-disk power cache and output formats.
//!
//! [`run`] never prints; it returns the document and the exit code so the
//! binary and the tests see exactly the same bytes.

pub mod cache;
pub mod config;
mod commands;
pub mod output;

pub use config::{parse_weight, Command, OutputFormat, RunConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION_FAILED: i32 = 1;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_INCONSISTENCY: i32 = 3;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum CliError {
    #[error("{0}")]
    Validation(String),
    #[error("{0}")]
    Inconsistency(String),
}

impl From<liekoszul_core::Error> for CliError {
    fn from(e: liekoszul_core::Error) -> Self {
        if e.is_validation() {
            CliError::Validation(e.to_string())
        } else {
            CliError::Inconsistency(e.to_string())
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => EXIT_VALIDATION,
            CliError::Inconsistency(_) => EXIT_INCONSISTENCY,
        }
    }

    pub fn to_json(&self) -> String {
        match self {
            CliError::Validation(m) => output::error_json("validation", m),
            CliError::Inconsistency(m) => output::error_json("inconsistency", m),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutput {
    pub code: i32,
    pub stdout: String,
}

/// Runs one command. Errors produce only the error object.
pub fn run(cfg: &RunConfig) -> RunOutput {
    match commands::dispatch(cfg) {
        Ok((resolved, doc)) => {
            let config = output::config_json(cfg, &resolved);
            let code = if doc.verified == Some(false) {
                EXIT_VERIFICATION_FAILED
            } else {
                EXIT_OK
            };
            RunOutput {
                code,
                stdout: output::render(cfg, &config, &doc),
            }
        }
        Err(e) => RunOutput {
            code: e.exit_code(),
            stdout: e.to_json(),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_classes() {
        let v: CliError = liekoszul_core::Error::Inconsistency("boom".into()).into();
        assert_eq!(v.exit_code(), EXIT_INCONSISTENCY);
        assert!(v.to_json().contains("\"inconsistency\""));
        let v: CliError = liekoszul_core::Error::ZeroXi.into();
        assert_eq!(v.exit_code(), EXIT_VALIDATION);
        assert!(v.to_json().contains("\"validation\""));
    }

    #[test]
    fn in_process_matches_contract() {
        let mut cfg = RunConfig::new(Command::Quiver);
        cfg.depth = 1;
        let out = run(&cfg);
        assert_eq!(out.code, EXIT_OK);
        assert!(out.stdout.contains("\"schema\": \"liekoszul/1\""));
        cfg.depth = -3;
        assert_eq!(run(&cfg).code, EXIT_VALIDATION);
    }
}
