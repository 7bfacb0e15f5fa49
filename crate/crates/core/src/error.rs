use thiserror::Error;

/// Malformed textual input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse `{input}`: {reason}")]
pub struct ParseError {
    pub input: String,
    pub reason: String,
}

impl ParseError {
    pub fn new(input: impl Into<String>, reason: impl Into<String>) -> Self {
        Self {
            input: input.into(),
            reason: reason.into(),
        }
    }
}

/// Failures of the code and diagram layer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodecError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("malformed code: {0}")]
    Malformed(String),
    #[error("code is not realizable by a planar diagram")]
    NonRealizable,
    #[error("braid closure has {0} components, expected a knot")]
    MultiComponent(usize),
}

/// A computation exceeded a fixed-width or size budget.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("resource limit reached: {0}")]
pub struct ResourceLimit(pub String);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MoveError {
    #[error("move does not apply to this diagram: {0}")]
    InapplicableMove(String),
    #[error("flype does not apply: {0}")]
    InapplicableFlype(String),
    #[error("flype orbit exceeds the cap of {0} diagrams")]
    OrbitCapExceeded(usize),
}
