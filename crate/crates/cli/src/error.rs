use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] divcent::Error),

    #[error("{path}: {source}")]
    File {
        path: String,
        source: std::io::Error,
    },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error("{0}")]
    Usage(String),
}

/// Process exit codes.
pub mod exit {
    pub const OK: i32 = 0;
    pub const PARSE: i32 = 2;
    pub const PRECONDITION: i32 = 3;
    pub const CONVERGENCE: i32 = 4;
    pub const IO: i32 = 5;
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use divcent::Error as E;
        match self {
            CliError::Core(e) => match e {
                E::Parse { .. } => exit::PARSE,
                E::NonConvergence { .. } | E::DegenerateMass => exit::CONVERGENCE,
                E::Io(_) => exit::IO,
                _ => exit::PRECONDITION,
            },
            CliError::File { .. } | CliError::Io(_) => exit::IO,
            CliError::Json(_) => exit::IO,
            CliError::Usage(_) => exit::PARSE,
        }
    }
}
