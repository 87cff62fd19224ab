use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    /// Input outside the mathematical domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// Degenerate or invalid geometry (collinear, co-circular, non-finite).
    #[error("geometry error: {0}")]
    Geometry(String),
    /// A point lies outside the triangle or hull it was assigned to.
    #[error("point {index} lies outside {what}")]
    Outside { index: usize, what: &'static str },
    /// A statistic whose variance vanishes, so it cannot be standardized.
    #[error("degenerate statistic: {0}")]
    Degenerate(String),
    /// The request exceeds what the exact algorithm supports.
    #[error("capability error: {0}")]
    Capability(String),
    /// Rejection sampling could not make progress.
    #[error("sampling error: {0}")]
    Sampling(String),
    /// Error raised while running replicate `index`.
    #[error("replicate {index}: {source}")]
    Replicate {
        index: u64,
        #[source]
        source: Box<Error>,
    },
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn geometry(msg: impl Into<String>) -> Self {
        Error::Geometry(msg.into())
    }

    /// True for errors that the command line reports as a degenerate statistic.
    pub fn is_degenerate(&self) -> bool {
        match self {
            Error::Degenerate(_) => true,
            Error::Replicate { source, .. } => source.is_degenerate(),
            _ => false,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
