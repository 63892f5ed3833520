//! Algebraic diffeomorphisms of the real torus `P¹(ℝ) × P¹(ℝ)`.

pub mod map;
pub mod moves;
pub mod point;
pub mod transitivity;

pub use map::{certify, Certificate, MoveCheck, TorusMap};
pub use moves::{Axis, FiberScale, Matrix2, MoebiusPair, Move};
pub use point::{ProjPoint1, TorusPoint};
pub use transitivity::{build_transitivity_map, grid_pipeline, quadrant_normalize, separate_y};
