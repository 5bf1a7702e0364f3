//! Saturation, Hom modules, sheaf cohomology on P^n and Ext tables.

pub mod bundle;
pub mod ext;
pub mod hom;
pub mod saturate;
pub mod table;

pub use bundle::{euler_characteristic, sheaf_coh_dim, BundleOnP};
pub use ext::{end_bundle, ext1_table, ExtTable};
pub use hom::{dual_module, hom_module, homology, HomModule, Subquotient};
pub use saturate::{saturate, saturate_submodule};
pub use table::{coh_table, coh_table_range, coh_table_slices, CohomologyTable};
