//! Error type shared by the exact-arithmetic layer.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("modulus {0} is not a prime congruent to 1 mod 4")]
    BadModulus(u64),
    #[error("denominator of {value} vanishes mod {p}")]
    DenominatorDivisibleByP { p: u64, value: String },
    #[error("frame length mismatch: expected {expected}, got {got}")]
    FrameMismatch { expected: usize, got: usize },
    #[error("duplicate variable name '{0}'")]
    DuplicateVariable(String),
    #[error("variable weights must be positive")]
    ZeroWeight,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("generator is not homogeneous in the given grading")]
    NonHomogeneousGenerator,
    #[error("monomial outside the chosen basis")]
    MonomialOutsideBasis,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("equation file error: {0}")]
    EquationFile(String),
}
