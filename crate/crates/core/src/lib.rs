//! Exact constructions on rational real algebraic surfaces.
//!
//! - [`arith`]: rationals, polynomials over ℚ, Sturm real-root counting.
//! - [`interpolation`]: interpolation by polynomials without real zeros.
//! - [`torus`]: certified algebraic diffeomorphisms of `P¹(ℝ) × P¹(ℝ)` and
//!   the n-transitivity constructor.
//! - [`projective`]: exact geometry in `P²` over ℚ and ℚ(i), the transfer
//!   from `P²` to `P¹ × P¹`, conics and six-point configurations.
//! - [`models`]: blow-up models, forest reduction and classification of
//!   rational models by the topology of their real locus.

pub mod arith;
pub mod error;
pub mod interpolation;
pub mod models;
pub mod projective;
pub mod torus;

pub use error::{Error, Result};
