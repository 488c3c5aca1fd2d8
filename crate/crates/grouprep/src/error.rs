use thiserror::Error;

#[derive(Debug, Error)]
pub enum GroupError {
    #[error("closure exceeded the element limit {0}")]
    LimitExceeded(usize),
    #[error("generator matrix is not invertible")]
    SingularGenerator,
    #[error("matrix size {got} does not match frame length {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("integer overflow in exact matrix arithmetic")]
    Overflow,
    #[error("no table row matches the computed character")]
    NoMatchingIrreducible,
    #[error("class function has non-integral multiplicity against {0}")]
    NonIntegralMultiplicity(String),
    #[error("power map unavailable for exponent {0}")]
    MissingPowerMap(u32),
    #[error("class structure does not match the embedded table: {0}")]
    ClassMismatch(String),
    #[error("character value outside Q(i): projector weights must be Gaussian rationals")]
    IrrationalWeight,
    #[error("closure cache is stale or corrupt: {0}")]
    BadCache(String),
    #[error("algebra error: {0}")]
    Algebra(#[from] ballq_algebra::AlgebraError),
}
