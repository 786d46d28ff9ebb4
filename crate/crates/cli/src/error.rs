//! Error type for the sweep tool, split by exit-code class.

use std::fmt;
use std::io;
use std::path::PathBuf;

/// Convenience alias used throughout the crate.
pub type Result<T> = core::result::Result<T, CliError>;

/// Everything that can go wrong between argument parsing and CSV emission.
///
/// The two variants map onto the process exit codes: [`CliError::Invalid`]
/// exits with 1 (bad arguments, config values, or parameter domains) and
/// [`CliError::Io`] exits with 2 (filesystem failures).
#[derive(Debug)]
pub enum CliError {
    /// The request itself is malformed: unparsable flag values, ranges with
    /// too few steps, parameters outside the model's domain, and so on.
    Invalid(String),
    /// A filesystem operation failed; carries the path involved.
    Io {
        /// Path of the file or directory the operation touched.
        path: PathBuf,
        /// Underlying OS error.
        source: io::Error,
    },
}

impl CliError {
    /// Wrap an I/O error together with the path it concerns.
    pub fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit code associated with this error class.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Invalid(_) => 1,
            CliError::Io { .. } => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Invalid(msg) => write!(f, "{msg}"),
            CliError::Io { path, source } => {
                write!(f, "{}: {source}", path.display())
            }
        }
    }
}

impl std::error::Error for CliError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            CliError::Invalid(_) => None,
            CliError::Io { source, .. } => Some(source),
        }
    }
}

impl From<minxy_core::Error> for CliError {
    fn from(e: minxy_core::Error) -> Self {
        CliError::Invalid(e.to_string())
    }
}
