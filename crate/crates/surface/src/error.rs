use thiserror::Error;

#[derive(Debug, Error)]
pub enum SurfaceError {
    #[error("embedded data error: {0}")]
    Data(String),
    #[error("seed does not lie on the variety: relation {relation} gives nonzero residual")]
    SeedNotOnVariety { relation: usize },
    #[error("line {line} fails relation {relation}")]
    LineOffIdeal { line: usize, relation: usize },
    #[error("algebra error: {0}")]
    Algebra(#[from] ballq_algebra::AlgebraError),
    #[error("group error: {0}")]
    Group(#[from] ballq_grouprep::GroupError),
}
