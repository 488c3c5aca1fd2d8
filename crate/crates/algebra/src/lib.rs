//! Exact arithmetic over Z[i], Q(i) and F_p, sparse multivariate
//! polynomial algebra with standard or weighted gradings, Macaulay
//! matrices, and exact linear algebra over both coefficient fields.

pub mod eqfile;
pub mod error;
pub mod fp;
pub mod gaussian;
pub mod macaulay;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod qilinalg;

pub use eqfile::EquationSet;
pub use error::AlgebraError;
pub use fp::{FpMatrix, PrimeField, PrimeFieldElement, RowEchelon, DEFAULT_PRIME};
pub use gaussian::{GaussianInt, GaussianRational};
pub use macaulay::{macaulay_layout, macaulay_matrix, macaulay_rank};
pub use monomial::{count_standard_monomials, monomials_of_degree, Monomial, VariableFrame};
pub use parse::parse_polynomial;
pub use poly::{FpPolynomial, SparsePolynomial};
pub use qilinalg::{kernel_qi, rank_qi, QiRowSpace};
