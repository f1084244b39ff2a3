//! Monochromatic connected clique matchings in red/blue colourings of
//! complete graphs.
//!
//! * [`colouring`]: the coloured complete graph and its clique primitives.
//! * [`extremal`]: lower-bound colourings and seeded corpora.
//! * [`finder`]: constructs a monochromatic connected nK_r on any colouring
//!   with at least (r² − r + 1)n − r + 1 vertices (r ≥ 4, n ≥ R(K_r)).
//! * [`oracle`]: exact decisions, an independent certificate verifier and
//!   exhaustive small Ramsey values.

pub mod certificate;
pub mod colouring;
pub mod extremal;
pub mod finder;
pub mod format;
pub mod oracle;
pub mod params;
pub mod rng;
pub mod vertex_set;

pub use certificate::Certificate;
pub use colouring::{CliquePacking, Colour, ColouredCompleteGraph};
pub use params::Params;
pub use vertex_set::VertexSet;
