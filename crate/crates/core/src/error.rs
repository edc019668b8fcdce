use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("not a log statement: {0}")]
    NotALogStatement(String),

    #[error("syntax error: {0}")]
    Syntax(String),

    #[error("unknown log level `{0}`")]
    UnknownLevel(String),

    #[error("empty input")]
    EmptyInput,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("unknown instance `{0}`")]
    UnknownInstance(String),

    #[error("line {line}: duplicate prediction for instance `{id}`")]
    DuplicateInstance { id: String, line: usize },

    #[error("line {line}: {message}")]
    MalformedLine { line: usize, message: String },

    #[error("repository does not meet the qualification thresholds: {0}")]
    Unqualified(String),

    #[error("build failed: {0}")]
    BuildFailed(String),

    #[error("no coverage report at {0}")]
    NoCoverageReport(PathBuf),

    #[error("coverage report {path}: {message}")]
    CoverageFormat { path: PathBuf, message: String },

    #[error("no log statement is covered by any test")]
    NoCoveredStatements,

    #[error("command timed out after {0}s")]
    Timeout(u64),

    #[error("workspace corrupt: {0}")]
    WorkspaceCorrupt(String),

    #[error("configuration error: {0}")]
    Config(String),

    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Stable identifier printed by the command-line tool on failure.
    pub fn code(&self) -> &'static str {
        match self {
            Error::NotALogStatement(_) => "NotALogStatement",
            Error::Syntax(_) => "SyntaxError",
            Error::UnknownLevel(_) => "UnknownLevel",
            Error::EmptyInput => "EmptyInput",
            Error::InvalidArgument(_) => "InvalidArgument",
            Error::UnknownInstance(_) => "UnknownInstance",
            Error::DuplicateInstance { .. } => "DuplicateInstance",
            Error::MalformedLine { .. } => "MalformedLine",
            Error::Unqualified(_) => "UnqualifiedRepository",
            Error::BuildFailed(_) => "BuildFailed",
            Error::NoCoverageReport(_) => "NoCoverageReport",
            Error::CoverageFormat { .. } => "CoverageFormat",
            Error::NoCoveredStatements => "NoCoveredStatements",
            Error::Timeout(_) => "Timeout",
            Error::WorkspaceCorrupt(_) => "WorkspaceCorrupt",
            Error::Config(_) => "ConfigError",
            Error::Io { .. } => "IoError",
            Error::Json(_) => "JsonError",
        }
    }
}
