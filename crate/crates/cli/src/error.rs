use std::fmt;

/// Process exit status.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    /// At least one record, or a valid nontrivial identity.
    Found,
    /// Nothing found, or an invalid identity.
    NoneFound,
    /// Valid but trivial identity.
    Trivial,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Found => 0,
            Status::NoneFound => 2,
            Status::Trivial => 3,
        }
    }
}

pub const EXIT_ERROR: u8 = 1;
pub const EXIT_SELF_CHECK: u8 = 4;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(equalpow::Error),
    /// A record failed re-verification before output.
    SelfCheck(String),
    Io(std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::SelfCheck(_) | CliError::Core(equalpow::Error::Consistency(_)) => EXIT_SELF_CHECK,
            _ => EXIT_ERROR,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::SelfCheck(msg) => write!(f, "self-check failed: {msg}"),
            CliError::Io(e) => write!(f, "i/o error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<equalpow::Error> for CliError {
    fn from(e: equalpow::Error) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Io(e.into())
    }
}
