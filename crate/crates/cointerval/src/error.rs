use thiserror::Error;

/// Errors raised when ingesting user-supplied data.
///
/// Violations of internal invariants (a homotopy formula emitting an invalid
/// basis symbol, a degree mismatch in chain arithmetic) are bugs, not input
/// errors, and panic instead.
#[derive(Debug, Error)]
pub enum Error {
    #[error("interval {index}: left endpoint {a} exceeds right endpoint {b}")]
    InvalidInterval { index: usize, a: i64, b: i64 },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("{n} vertices exceed the brute-force recognition bound {bound}")]
    RecognitionBound { n: usize, bound: usize },

    #[error("graph is not cointerval")]
    NotCointerval,

    #[error("{0}")]
    BadElement(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
