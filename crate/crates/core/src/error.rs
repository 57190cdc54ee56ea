use thiserror::Error;

/// Errors raised by the algebra and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },

    #[error("invalid input: {0}")]
    Usage(String),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("pole at q = 1: {0}")]
    PoleAtOne(String),

    #[error("zero denominator: {0}")]
    Pole(String),

    #[error("monomial is not first-layer: {0}")]
    NotFirstLayer(String),

    #[error("coincident poles in variable x_{var}: {detail}")]
    CoincidentPoles { var: usize, detail: String },

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn invariant(msg: impl Into<String>) -> Self {
        Error::Invariant(msg.into())
    }

    /// True for errors caused by bad caller input rather than a broken invariant.
    pub fn is_usage(&self) -> bool {
        !matches!(self, Error::Invariant(_) | Error::CoincidentPoles { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
