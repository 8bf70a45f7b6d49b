use thiserror::Error;

use crate::report::AxiomReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("invalid table: {0}")]
    InvalidTable(String),

    #[error("operation is not right-invertible: column {column} is not a permutation")]
    NotRightInvertible { column: usize },

    #[error("group {0} is not abelian")]
    NotAbelian(String),

    #[error("map is not a group automorphism: {0}")]
    NotAutomorphism(String),

    #[error("not a permutation: {0}")]
    NotPermutation(String),

    #[error("system is missing `{field}` required for {kind}")]
    MissingField { field: &'static str, kind: String },

    #[error("precondition failed: {message}")]
    Precondition {
        message: String,
        report: Option<Box<AxiomReport>>,
    },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("move not applicable: {0}")]
    NotApplicable(String),

    #[error("system has no composition table for vertices of valence {valence}")]
    MissingGamma { valence: usize },

    #[error("unknown resource `{0}`")]
    UnknownResource(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    pub(crate) fn precondition(message: impl Into<String>, report: AxiomReport) -> Self {
        Error::Precondition {
            message: message.into(),
            report: Some(Box::new(report)),
        }
    }
}
