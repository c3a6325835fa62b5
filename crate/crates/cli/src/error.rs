use std::path::PathBuf;

use thiserror::Error;

/// Process exit statuses.
pub mod exit {
    pub const SUCCESS: u8 = 0;
    /// A verification of our own output failed; always a bug.
    pub const INTERNAL: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const PRECONDITION: u8 = 3;
    pub const NO_UNIT_INVERSE: u8 = 4;
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("{origin}: {message}")]
    Syntax { origin: String, message: String },

    #[error("algebra {name:?}: {source}")]
    Algebra { name: String, source: fdk0::Error },

    #[error("hom {hom:?} refers to undeclared algebra {name:?}")]
    Unresolved { hom: String, name: String },

    #[error("no hom named {0:?} in the workspace")]
    UnknownHom(String),

    #[error("hom {hom:?}: {source}")]
    Hom { hom: String, source: fdk0::Error },

    #[error("cannot compose {inner} -> {outer}: {source}")]
    Compose {
        inner: String,
        outer: String,
        source: fdk0::Error,
    },

    #[error("{0}")]
    Math(#[from] fdk0::Error),

    #[error("{0}")]
    Usage(String),

    #[error("internal check failed: {0}")]
    Internal(String),

    #[error("writing output: {0}")]
    Output(#[from] std::io::Error),
}

fn math_status(e: &fdk0::Error) -> u8 {
    use fdk0::Error::*;
    match e {
        EmptyMatrix { .. }
        | EntryCount { .. }
        | RaggedRow { .. }
        | EmptyAlgebra
        | ZeroBlock { .. } => exit::USAGE,
        _ => exit::PRECONDITION,
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. }
            | CliError::Syntax { .. }
            | CliError::Algebra { .. }
            | CliError::Unresolved { .. }
            | CliError::UnknownHom(_)
            | CliError::Usage(_) => exit::USAGE,
            // a matrix that does not fit its algebras is a malformed file
            CliError::Hom {
                source: fdk0::Error::Dimension { .. },
                ..
            } => exit::USAGE,
            CliError::Hom { source, .. } | CliError::Math(source) => math_status(source),
            CliError::Compose { .. } => exit::PRECONDITION,
            CliError::Internal(_) | CliError::Output(_) => exit::INTERNAL,
        }
    }
}
