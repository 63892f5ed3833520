//! Symbolic calculus of real rational surface models.

mod calculus;
mod model;
mod surface;

pub use calculus::{
    base_locus, canonical_model, classify, forest_length, forest_reduce, hirzebruch_normalize,
    models_isomorphic, real_locus, reduction_step, Classification, ReductionStep, ReductionTrace,
};
pub use model::{Base, BlowUpModel, Center, CenterKind};
pub use surface::SurfaceType;
