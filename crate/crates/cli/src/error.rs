//! Error carrier mapping failures to the documented exit codes.

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitCode {
    Parse = 2,
    Cap = 3,
    Violation = 4,
    Internal = 5,
}

#[derive(Debug)]
pub struct CliError {
    pub code: ExitCode,
    pub message: String,
}

impl CliError {
    pub fn new(code: ExitCode, message: impl Into<String>) -> Self {
        CliError {
            code,
            message: message.into(),
        }
    }

    pub fn internal(message: impl Into<String>) -> Self {
        CliError::new(ExitCode::Internal, message)
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.message.fmt(f)
    }
}

impl std::error::Error for CliError {}
