use thiserror::Error;

#[derive(Debug, Error)]
pub enum NumericError {
    #[error("iteration diverged or hit the iteration cap")]
    Diverged,
    #[error("Jacobian rank dropped at an iterate")]
    SingularJacobian,
    #[error("system has fewer equations than unknowns")]
    Underdetermined,
    #[error("ball radius too large for the requested height bound")]
    InsufficientPrecision,
    #[error("no candidate within the height bound contains the ball value")]
    NoCandidate,
    #[error("no spectral gap at index {at}: ratio exponent {ratio_exp}")]
    GapTooSmall { at: usize, ratio_exp: i64 },
    #[error("need at least {want} points, have {have}")]
    NotEnoughPoints { have: usize, want: usize },
    #[error("Lefschetz count is not an integer")]
    NonIntegralLefschetz,
    #[error("no z-solution on this sign branch")]
    NoSolution,
    #[error("bilinear system rank defect")]
    RankDefect,
    #[error("algebra error: {0}")]
    Algebra(#[from] ballq_algebra::AlgebraError),
    #[error("group error: {0}")]
    Group(#[from] ballq_grouprep::GroupError),
    #[error("surface error: {0}")]
    Surface(#[from] ballq_surface::SurfaceError),
}
