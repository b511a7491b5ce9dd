//! File formats and machine-readable certificates behind the `shellab`
//! binary. The parsing and serialization layers live here so other tools
//! (and the integration tests) can reuse them directly.

pub mod cert;
pub mod io;

/// What went wrong while reading an input file.
#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("{0}")]
    Structure(String),
    #[error(transparent)]
    Lib(#[from] shellab::Error),
}

impl FormatError {
    pub(crate) fn at(line: usize, message: impl Into<String>) -> FormatError {
        FormatError::Line { line, message: message.into() }
    }
}
