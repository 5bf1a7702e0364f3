//! Gröbner bases, syzygies, minimal free resolutions and Betti tables.

pub mod betti;
pub mod groebner;
pub mod hilbert;
pub mod resolution;

pub use betti::BettiTable;
pub use groebner::{groebner, GroebnerBasis};
pub use hilbert::{HilbertSeries, LaurentPoly};
pub use resolution::{
    certify_exact, coker_hilbert, free_resolution, free_resolution_upto, minimal_presentation, syzygies,
    FreeResolution,
};
