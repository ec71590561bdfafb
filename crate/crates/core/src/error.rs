use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain an operation is defined on.
    #[error("domain error: {0}")]
    Domain(String),

    /// The chosen scalar type cannot represent an intermediate value.
    #[error("arithmetic overflow in the chosen scalar type")]
    Overflow,

    /// A sum that must be an integer came out fractional.
    #[error("expected an integral result, got {0}")]
    NonIntegral(String),

    /// Brute force was asked for an `n` past the practical bound.
    #[error("n = {n} exceeds the brute-force bound of {bound}; force the search to override")]
    Refused { n: u32, bound: u32 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
