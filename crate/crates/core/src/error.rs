use thiserror::Error;

/// Errors raised by series evaluation, quadrature, and identity checks.
#[derive(Debug, Clone, Error)]
pub enum Error {
    /// Input outside a function's domain (pole argument, non-positive
    /// parameter, derivative target the family does not possess, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// Result magnitude exceeds the representable double range.
    #[error("range error: overflow ({})", if *.positive { "positive" } else { "negative" })]
    Overflow {
        /// Sign of the overflowing quantity.
        positive: bool,
    },

    /// A quadrature or summation did not reach the requested tolerance.
    /// Carries the best available estimate.
    #[error("accuracy error: estimate {value} with error estimate {error_est}")]
    Accuracy { value: f64, error_est: f64 },

    /// A sample point violates an identity's validity predicate.
    #[error("outside validity region: {predicate}")]
    OutOfRegion { predicate: String },

    /// The order-zero kernel at a = 1 is a Dirac delta and has no pointwise
    /// value; callers apply it analytically.
    #[error("delta case is not pointwise")]
    NotPointwise,

    /// No catalog entry with the requested id.
    #[error("unknown identity {0}")]
    UnknownIdentity(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
