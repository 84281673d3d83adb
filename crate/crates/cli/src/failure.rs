use std::fmt;

/// Exit status for a run that found a violation of the claim under test.
pub const EXIT_VIOLATION: u8 = 1;
pub const EXIT_IO: u8 = 2;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_INVALID_INPUT: u8 = 65;

/// An error carrying the process exit status it maps to.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub error: anyhow::Error,
}

impl Failure {
    pub fn usage(error: impl Into<anyhow::Error>) -> Self {
        Self {
            code: EXIT_USAGE,
            error: error.into(),
        }
    }

    pub fn io(error: impl Into<anyhow::Error>) -> Self {
        Self {
            code: EXIT_IO,
            error: error.into(),
        }
    }

    pub fn invalid_input(error: impl Into<anyhow::Error>) -> Self {
        Self {
            code: EXIT_INVALID_INPUT,
            error: error.into(),
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#}", self.error)
    }
}

impl From<cohere_core::Error> for Failure {
    fn from(e: cohere_core::Error) -> Self {
        Failure::invalid_input(e)
    }
}

pub type CmdResult<T = u8> = std::result::Result<T, Failure>;
