use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on the arguments does not hold.
    #[error("domain error: {0}")]
    Domain(String),

    /// An enumeration would exceed its configured bound.
    #[error("{what} exceeds the configured bound of {bound}")]
    Resource { what: String, bound: usize },

    /// A numerical routine produced a non-finite or unresolvable result.
    #[error("numeric error: {0}")]
    Numeric(String),

    /// Input document was well-formed JSON but violated its schema.
    #[error("invalid field `{field}`: {reason}")]
    Schema { field: String, reason: String },

    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn schema(field: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Schema {
            field: field.into(),
            reason: reason.into(),
        }
    }
}
