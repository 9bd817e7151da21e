//! Error types shared across the library.

use thiserror::Error;

/// Position-carrying parse failure for the expression and script grammars.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{kind} at offset {offset}")]
pub struct ParseError {
    /// Byte offset into the parsed text.
    pub offset: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("syntax error: {0}")]
    Syntax(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("variable `{0}` uses the reserved `#` prefix")]
    ReservedVariable(String),
    #[error("zero denominator in rational literal")]
    ZeroDenominator,
}

impl ParseError {
    pub fn syntax(offset: usize, msg: impl Into<String>) -> Self {
        ParseError {
            offset,
            kind: ParseErrorKind::Syntax(msg.into()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: operands live in rings of arity {left} and {right}")]
    RingMismatch { left: usize, right: usize },

    #[error("zero polynomial has no leading term")]
    ZeroPolynomial,

    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("invalid ring presentation: {0}")]
    BadPresentation(String),

    #[error("operands belong to different algebras")]
    AlgebraMismatch,

    #[error("ring map is not well-defined: relation `{0}` does not map to zero")]
    IllDefinedMap(String),

    #[error("no glue record between patches {i} and {j}")]
    MissingGlue { i: usize, j: usize },

    #[error("patch index {index} out of range for scheme with {patches} patches")]
    PatchOutOfRange { index: usize, patches: usize },

    #[error("operands live on different schemes")]
    SchemeMismatch,

    #[error("map is not surjective, so it is not a closed immersion")]
    NotSurjective,

    #[error("element `{0}` is not invertible")]
    NotInvertible(String),

    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
}

pub type Result<T> = std::result::Result<T, Error>;
