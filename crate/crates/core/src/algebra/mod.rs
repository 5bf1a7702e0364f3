//! Fields, polynomials, graded free modules and degree-slice linear algebra.

pub mod field;
pub mod linalg;
pub mod matrix;
pub mod module;
pub mod monomial;
pub mod ring;
pub mod slice;
pub mod univariate;

pub use field::{ExtElem, ExtField, Field, PrimeField, DEFAULT_PRIME};
pub use linalg::{Echelon, Mat};
pub use matrix::{map_matrix, GradedMatrix, MatOps};
pub use module::{GradedFreeModule, ModuleOrder, VTerm, VecOps, Vector};
pub use monomial::{Mono, MonoOrder, MAX_VARS};
pub use ring::{Poly, Ring};
pub use slice::{degree_slice_basis, slice_matrix, SliceBasis};
