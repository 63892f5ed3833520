//! Exact projective geometry in `P²` over ℚ and ℚ(i).

pub mod conic;
pub mod gaussian;
pub mod linalg;
pub mod plane;
pub mod transfer;

pub use conic::{
    conic_through_five, validate_six_config, ConfigReport, Conic, GaussianPoint2, SubsetReport,
};
pub use gaussian::GaussRat;
pub use plane::{
    collinear, line_through, standardize, transform_line, transform_point, Line2, Matrix3,
    ProjPoint2,
};
pub use transfer::P2Transfer;
