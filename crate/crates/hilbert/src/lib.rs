//! Modular Hilbert-function certification in standard and weighted
//! gradings, quadratic Hilbert-polynomial fits, a Buchberger engine over
//! F_p, and Jacobian-minor smoothness checks.

pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod smooth;

pub use error::HilbertError;
pub use groebner::{
    dimension_from_leading_terms, groebner_basis, GroebnerBasis, ResourceBudget,
};
pub use hilbert::{
    auto_fit, fit_hilbert_polynomial, hilbert_function, GradedIdeal, HilbertEntry, HilbertFit,
    HilbertRecord,
};
pub use smooth::{
    combinations, determinant, jacobian_minor_check, partial_derivative, select_rows_at_point,
    MinorCheckOutcome, MinorCheckReport,
};
