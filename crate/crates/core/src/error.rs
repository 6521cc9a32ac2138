use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a universe of {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("graphs with {n} vertices exceed the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },

    #[error("{what} {set} is not a subset of {of}")]
    NotSubset {
        what: &'static str,
        set: String,
        of: String,
    },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("parameter {name} = {value} out of range: {expected}")]
    ParameterOutOfRange {
        name: &'static str,
        value: i64,
        expected: &'static str,
    },

    #[error("{0} is not a face of the complex")]
    NotAFace(String),

    #[error("{0}")]
    Invalid(String),

    #[error("{what} bound exceeded: {actual} > {limit}")]
    BoundExceeded {
        what: &'static str,
        limit: u64,
        actual: u64,
    },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    pub fn bound(what: &'static str, limit: impl TryInto<u64>, actual: impl TryInto<u64>) -> Self {
        Error::BoundExceeded {
            what,
            limit: limit.try_into().unwrap_or(u64::MAX),
            actual: actual.try_into().unwrap_or(u64::MAX),
        }
    }

    pub fn param(name: &'static str, value: usize, expected: &'static str) -> Self {
        Error::ParameterOutOfRange {
            name,
            value: value as i64,
            expected,
        }
    }

    pub fn is_bound_exceeded(&self) -> bool {
        matches!(self, Error::BoundExceeded { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
