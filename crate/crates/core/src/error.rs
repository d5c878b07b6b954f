use thiserror::Error;

use crate::group::Group;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("group mismatch: {left} vs {right}")]
    GroupMismatch { left: Group, right: Group },
    #[error("element {element} does not belong to {group}")]
    ForeignElement { element: String, group: Group },
    #[error("cannot mix exact and approximate scalars")]
    ModeMismatch,
    #[error("invalid group: {0}")]
    InvalidGroup(String),
}

/// Error raised while reading one of the line-oriented text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, message: impl Into<String>) -> Self {
        ParseError {
            line,
            message: message.into(),
        }
    }
}
