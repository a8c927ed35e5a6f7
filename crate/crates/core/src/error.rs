use std::fmt;

use thiserror::Error;

/// Category of a domain failure. The variant name is what the CLI prints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ErrorKind {
    NonPositiveArgument,
    PoleHit,
    DivergentSeries,
    Overflow,
    DomainWindow,
    InvalidParameter,
}

impl ErrorKind {
    pub fn name(self) -> &'static str {
        match self {
            ErrorKind::NonPositiveArgument => "NonPositiveArgument",
            ErrorKind::PoleHit => "PoleHit",
            ErrorKind::DivergentSeries => "DivergentSeries",
            ErrorKind::Overflow => "Overflow",
            ErrorKind::DomainWindow => "DomainWindow",
            ErrorKind::InvalidParameter => "InvalidParameter",
        }
    }
}

impl fmt::Display for ErrorKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Raised when a function is undefined at the requested point or the
/// result leaves the representable range. Functions never return NaN
/// for out-of-domain input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind}: {detail}")]
pub struct DomainError {
    pub kind: ErrorKind,
    pub detail: String,
}

impl DomainError {
    pub fn new(kind: ErrorKind, detail: impl Into<String>) -> Self {
        Self {
            kind,
            detail: detail.into(),
        }
    }

    pub fn non_positive(detail: impl Into<String>) -> Self {
        Self::new(ErrorKind::NonPositiveArgument, detail)
    }

    pub fn pole(detail: impl Into<String>) -> Self {
        Self::new(ErrorKind::PoleHit, detail)
    }

    pub fn divergent(detail: impl Into<String>) -> Self {
        Self::new(ErrorKind::DivergentSeries, detail)
    }

    pub fn overflow(detail: impl Into<String>) -> Self {
        Self::new(ErrorKind::Overflow, detail)
    }
}

pub type Result<T> = std::result::Result<T, DomainError>;
