//! Finite matrix-group machinery over Q(i): product closure, conjugacy
//! classes and power maps, exact character arithmetic in Q(i, sqrt7),
//! isotypic projectors, Reynolds averaging and invariant subspaces.

pub mod action;
pub mod chartab;
pub mod classes;
pub mod closure;
pub mod error;
pub mod gimatrix;
pub mod invariants;
pub mod projector;
pub mod qisqrt7;

pub use action::InducedAction;
pub use chartab::{
    character_of_block, product_character, sum_character, sym_power_character, u33_character_table,
    CharacterTable, ClassAlignment,
};
pub use classes::ConjugacyClassData;
pub use closure::{FiniteGroupClosure, MatrixRepresentation};
pub use error::GroupError;
pub use gimatrix::GiMatrix;
pub use invariants::{invariant_dimension_bound, invariant_subspace, InvariantBasis};
pub use projector::{
    apply_matrix, column_space, isotypic_projector_matrix, matrix_product, reynolds_column,
    transport_tuple,
};
pub use qisqrt7::QiSqrt7;
