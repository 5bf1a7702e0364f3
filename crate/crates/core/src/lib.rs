//! Graded modules over polynomial rings on finite fields, minimal free
//! resolutions, sheaf cohomology on projective space via local duality,
//! splitting criteria for vector bundles and the tower-ideal construction
//! over infinitesimal neighborhoods of a linear subspace.

pub mod algebra;
pub mod cohomology;
pub mod criteria;
pub mod catalog;
pub mod error;
pub mod format;
pub mod syzygy;
pub mod tower;

pub use algebra::field::{ExtField, Field, PrimeField};
pub use algebra::matrix::GradedMatrix;
pub use algebra::module::GradedFreeModule;
pub use algebra::ring::{Poly, Ring};
pub use cohomology::bundle::BundleOnP;
pub use error::{Error, Result};
