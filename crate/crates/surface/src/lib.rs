//! Embedded printed data for the ball-quotient surfaces and the
//! equivariant geometry checks built on it: stable spans, the involution,
//! the 126-line configuration, and exact point generation.

pub mod data;
pub mod dataset;
pub mod error;
pub mod lines;
pub mod span;

pub use dataset::PaperDataset;
pub use error::SurfaceError;
pub use lines::{
    build_line_orbit, exact_points, line_incidence_graph, lines_on_form, restrict_to_line,
    vanishes_on_line, IncidenceReport, LineOrbit, ProjectiveLine,
};
pub use span::{matrix_images, orbit_span, verify_involution, HomogeneousSpan, InvolutionReport};
