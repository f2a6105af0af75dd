use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cyclic factor order {0} is invalid: every order must be at least 2")]
    InvalidOrder(u64),

    #[error("characteristic {0} is neither 0 nor a prime")]
    InvalidCharacteristic(u64),

    #[error("{what} of size {size} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        size: u64,
        cap: u64,
    },

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("field mismatch: {left} vs {right}")]
    FieldMismatch { left: String, right: String },

    #[error("power iteration did not converge after {0} iterations")]
    NoConvergence(usize),

    #[error("component `{0}` has no real model but the field is the reals")]
    MissingRealModel(String),

    #[error("hom-count matrix missing on {0}")]
    MissingHomCounts(&'static str),

    #[error("unsupported: {0}")]
    Unsupported(String),
}
