use std::fmt;

use clutterkit::Error as CoreError;

#[derive(Debug)]
pub enum CliError {
    /// Malformed input document; line 0 means "no specific line".
    Parse { line: usize, msg: String },
    /// Domain error from the core library.
    Core(CoreError),
    /// Domain error originating in the CLI layer.
    Domain(String),
    /// Bad invocation (flags, option values).
    Usage(String),
    Io(std::io::Error),
}

impl CliError {
    /// 1 = domain error, 2 = usage error, 3 = work budget exhausted.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Core(CoreError::WorkBudgetExceeded { .. }) => 3,
            _ => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Parse { line: 0, msg } => write!(f, "parse error: {msg}"),
            CliError::Parse { line, msg } => write!(f, "parse error at line {line}: {msg}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Domain(msg) => write!(f, "{msg}"),
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Io(e) => write!(f, "io error: {e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Core(e)
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}
