//! Infinitesimal neighborhoods of a linear subspace L ⊂ P^{n+m}, the ideal
//! tower that makes the neighborhood sequences split, and the reduction to
//! the span of L and a point.

pub mod ambient;
pub mod ideal;
pub mod neighborhood;
pub mod pipeline;
pub mod points;
pub mod quotient;
pub mod span;
pub mod lemma;
pub mod splitting;

pub use ambient::{neighborhood_decompose, AmbientSplit};
pub use ideal::{ObstructionStep, TowerIdeal};
pub use neighborhood::{sequence_ai, NeighborhoodModule, PresentationAlongL, SequenceAi};
pub use splitting::{build_tower_ideal, obstruction_step, splitting_test};
pub use points::{choose_point, PointChoice, PointWitness};
pub use lemma::{lemma_chain_check, LemmaReport, MultiplicationRank};
pub use span::{restrict_to_span, SpanRestriction};
pub use pipeline::{babylonian_pipeline, PipelineOptions, PipelineRecord, PipelineVerdict};
