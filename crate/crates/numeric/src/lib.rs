//! High-precision numerics for the lift-and-recognize pipeline: certified
//! complex ball arithmetic, Gauss-Newton point sampling on slices,
//! approximate kernels with certified rank gaps, Gaussian-rational
//! recognition by lattice reduction, and exact Lefschetz counts in Q(w).

pub mod ball;
pub mod complex;
pub mod error;
pub mod kernel;
pub mod lefschetz;
pub mod lift;
pub mod linalg;
pub mod mag;
pub mod newton;
pub mod real;
pub mod recognize;

pub use ball::{evaluate_ball, max_residual, BallComplex};
pub use complex::CplxF;
pub use error::NumericError;
pub use kernel::{numeric_kernel, KernelOptions, KernelReport, RelationCandidate};
pub use lefschetz::{lefschetz_dimensions, Qw};
pub use lift::{bilinear_in_z, build_u_coordinates, cbrt, find_lambda, lift_to_z, LambdaReport, LiftContext};
pub use linalg::{least_squares, pivoted_qr, CMatrix, PivotedQr};
pub use mag::Mag;
pub use newton::{derivative, evaluate_float, gauss_newton, NewtonOptions, PolySystem, Provenance, VarietyPoint};
pub use real::BigFloat;
pub use recognize::{lll_reduce, recognize_gaussian_rational};
