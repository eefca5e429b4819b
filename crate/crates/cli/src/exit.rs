//! Exit-code contract shared by all subcommands.

/// 0 success; 2 numerical or invariant failure; 64 usage/schema;
/// 65 integrity (checksum mismatch); 66 missing input; 70 internal.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Exit {
    Ok = 0,
    Numerical = 2,
    Usage = 64,
    Integrity = 65,
    MissingInput = 66,
    Internal = 70,
}

#[derive(Debug)]
pub struct CliError {
    pub exit: Exit,
    pub message: String,
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError { exit: Exit::Usage, message: msg.into() }
    }

    pub fn numerical(msg: impl Into<String>) -> Self {
        CliError { exit: Exit::Numerical, message: msg.into() }
    }

    pub fn integrity(msg: impl Into<String>) -> Self {
        CliError { exit: Exit::Integrity, message: msg.into() }
    }

    pub fn missing(msg: impl Into<String>) -> Self {
        CliError { exit: Exit::MissingInput, message: msg.into() }
    }

    pub fn internal(msg: impl Into<String>) -> Self {
        CliError { exit: Exit::Internal, message: msg.into() }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.message)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        if e.kind() == std::io::ErrorKind::NotFound {
            CliError::missing(e.to_string())
        } else {
            CliError::internal(e.to_string())
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
