use thiserror::Error;

/// Errors surfaced by the library. Each variant maps onto one CLI exit code.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Caller violated a precondition (bad arguments, mismatched tables, malformed input).
    #[error("usage error: {0}")]
    Usage(String),

    /// The problem has no model or a required discriminant is empty.
    #[error("infeasible: {0}")]
    Infeasible(String),

    /// A configured budget (atom count, enumeration size) was exceeded.
    #[error("resource limit: {0}")]
    Resource(String),

    /// Text input failed to parse.
    #[error("{code} at {line}:{column}: {message}")]
    Parse {
        code: ParseCode,
        line: usize,
        column: usize,
        message: String,
    },
}

/// Stable diagnostic codes for the text formats.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParseCode {
    Syntax,
    UnknownConstant,
    MalformedTerm,
    ScopeLeafNotInGamma,
    DuplicateSection,
    UnknownSection,
    DuplicateConstant,
    BadContext,
    DuplicateGammaDuple,
    MissingSection,
    InvalidEmbedding,
}

impl ParseCode {
    pub fn as_str(self) -> &'static str {
        match self {
            ParseCode::Syntax => "E001",
            ParseCode::UnknownConstant => "E002",
            ParseCode::MalformedTerm => "E003",
            ParseCode::ScopeLeafNotInGamma => "E004",
            ParseCode::DuplicateSection => "E005",
            ParseCode::UnknownSection => "E006",
            ParseCode::DuplicateConstant => "E007",
            ParseCode::BadContext => "E008",
            ParseCode::DuplicateGammaDuple => "E009",
            ParseCode::MissingSection => "E010",
            ParseCode::InvalidEmbedding => "E011",
        }
    }
}

impl std::fmt::Display for ParseCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Error {
    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub fn resource(msg: impl Into<String>) -> Self {
        Error::Resource(msg.into())
    }

    pub fn parse(code: ParseCode, line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse { code, line, column, message: message.into() }
    }

    pub fn infeasible(msg: impl Into<String>) -> Self {
        Error::Infeasible(msg.into())
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Infeasible(_) => 1,
            Error::Usage(_) | Error::Parse { .. } => 2,
            Error::Resource(_) => 3,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
