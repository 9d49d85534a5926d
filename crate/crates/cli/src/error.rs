use thiserror::Error;

use crate::interchange::Kind;

/// Problems with an input document.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocError {
    #[error("parse error at line {line}, column {col}: {message}")]
    Parse {
        line: usize,
        col: usize,
        message: String,
    },

    #[error("shape error in `{tensor}`: expected {expected}, got {got}")]
    Shape {
        tensor: String,
        expected: String,
        got: String,
    },

    #[error("bad scalar `{0}`")]
    BadScalar(String),

    #[error("bad field: {0}")]
    Field(String),

    #[error("expected a {expected} document, got {got:?}")]
    Kind { expected: String, got: Kind },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Doc(#[from] DocError),

    #[error(transparent)]
    Math(#[from] modcoalg::Error),

    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },

    #[error("{0}")]
    Usage(String),

    #[error("prime {0} is not compiled in; supported: 2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31")]
    UnsupportedPrime(u64),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use modcoalg::Error as E;
        match self {
            CliError::Doc(_) | CliError::Io { .. } | CliError::Usage(_) => 2,
            CliError::UnsupportedPrime(_) => 3,
            CliError::Math(e) => match e {
                E::UnsupportedField(_)
                | E::NonSplitCoradical { .. }
                | E::BudgetExceeded(_)
                | E::NoRootOfUnity { .. }
                | E::BadCharacteristic(_) => 3,
                _ => 2,
            },
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Doc(DocError::Parse { .. }) => "ParseError",
            CliError::Doc(DocError::Shape { .. }) => "ShapeError",
            CliError::Doc(DocError::BadScalar(_)) => "BadScalar",
            CliError::Doc(_) => "DocumentError",
            CliError::Math(_) => "MathError",
            CliError::Io { .. } => "IoError",
            CliError::Usage(_) => "UsageError",
            CliError::UnsupportedPrime(_) => "UnsupportedField",
        }
    }
}
