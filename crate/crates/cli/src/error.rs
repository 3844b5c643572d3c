use std::fmt;

use supclose_core::{Error, PolyError};

/// Process exit statuses.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitStatus {
    Ok = 0,
    VerifyFailed = 1,
    Parse = 2,
    Unsupported = 3,
    Internal = 4,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliError {
    pub status: ExitStatus,
    pub message: String,
}

impl CliError {
    pub fn parse(message: impl Into<String>) -> Self {
        CliError { status: ExitStatus::Parse, message: message.into() }
    }

    pub fn unsupported(message: impl Into<String>) -> Self {
        CliError { status: ExitStatus::Unsupported, message: message.into() }
    }

    pub fn internal(message: impl Into<String>) -> Self {
        CliError { status: ExitStatus::Internal, message: message.into() }
    }

    pub fn from_core(e: Error) -> Self {
        let status = match &e {
            Error::Unsupported(_) => ExitStatus::Unsupported,
            Error::Poly(PolyError::RingMismatch) => ExitStatus::Internal,
            Error::Poly(_) | Error::InvalidArgument(_) => ExitStatus::Parse,
        };
        CliError { status, message: e.to_string() }
    }

    pub fn context(mut self, what: impl fmt::Display) -> Self {
        self.message = format!("{what}: {}", self.message);
        self
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        Self::from_core(e)
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        Self::from_core(e.into())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}
