use thiserror::Error;

#[derive(Debug, Error)]
pub enum HilbertError {
    #[error("generators must be homogeneous in the given grading")]
    NonHomogeneous,
    #[error("record not stabilized: {0}")]
    NotStabilized(String),
    #[error("resource limit: {0}")]
    ResourceLimit(String),
    #[error("algebra error: {0}")]
    Algebra(#[from] ballq_algebra::AlgebraError),
}
