use thiserror::Error;

use crate::scalar::Carrier;

#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("carrier: {0}")]
    Carrier(String),

    #[error("space: {0}")]
    Space(String),

    #[error("not an inverse semigroup: {axiom} (witness: {witness})")]
    Semigroup { axiom: String, witness: String },

    #[error("not a topological partial action: {axiom} (witness: {witness})")]
    Action { axiom: String, witness: String },

    #[error("not a groupoid: {axiom} (witness: {witness})")]
    Groupoid { axiom: String, witness: String },

    #[error("{what} is {value}, above the cap of {cap}")]
    CapExceeded { what: String, value: usize, cap: usize },

    #[error("operation needs a field of coefficients, got {0}")]
    NotAField(Carrier),

    #[error("mismatched operands: {0}")]
    Mismatch(String),

    #[error("invalid element: {0}")]
    Element(String),
}

impl Error {
    pub(crate) fn semigroup(axiom: &str, witness: impl Into<String>) -> Self {
        Error::Semigroup { axiom: axiom.to_string(), witness: witness.into() }
    }

    pub(crate) fn action(axiom: &str, witness: impl Into<String>) -> Self {
        Error::Action { axiom: axiom.to_string(), witness: witness.into() }
    }

    pub(crate) fn groupoid(axiom: &str, witness: impl Into<String>) -> Self {
        Error::Groupoid { axiom: axiom.to_string(), witness: witness.into() }
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
