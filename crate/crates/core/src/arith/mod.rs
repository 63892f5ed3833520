//! Exact arithmetic over the rationals: scalars, polynomials and Sturm counting.

mod intpoly;
pub mod poly;
pub mod rational;
pub mod sturm;

pub use num::{BigInt, BigRational};
pub use poly::Poly;
pub use rational::{int, parse_rational, rat, ExtRational, IntLit, RatLit};
pub use sturm::{count_all_real_roots, count_real_roots, is_zero_free, SturmChain};
