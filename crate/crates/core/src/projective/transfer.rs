//! Birational transfer `P² ⇢ P¹ × P¹`: blow up two real points on a real
//! line and contract the strict transform of that line.
//!
//! In the standard frame (`P1 = [1:0:0]`, `P2 = [0:1:0]`, line `z = 0`)
//! the map is `[x:y:z] ↦ ([y:z], [x:z])` with inverse
//! `([a:b], [c:d]) ↦ [c·b : a·d : b·d]`.

use num::{BigInt, BigRational, Zero};

use super::linalg;
use super::plane::{standardize, transform_point, Line2, Matrix3, ProjPoint2};
use crate::error::{Error, Result};
use crate::torus::{ProjPoint1, TorusPoint};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct P2Transfer {
    p1: ProjPoint2,
    p2: ProjPoint2,
    line: Line2,
    frame: Matrix3,
    frame_inv: Matrix3,
}

impl P2Transfer {
    pub fn new(p1: &ProjPoint2, p2: &ProjPoint2, line: &Line2) -> Result<Self> {
        let frame = standardize(p1, p2, line)?;
        let frame_inv = linalg::inverse(&frame).ok_or(Error::SingularMatrix)?;
        Ok(P2Transfer {
            p1: p1.clone(),
            p2: p2.clone(),
            line: line.clone(),
            frame,
            frame_inv,
        })
    }

    pub fn line(&self) -> &Line2 {
        &self.line
    }

    pub fn blown_up_points(&self) -> (&ProjPoint2, &ProjPoint2) {
        (&self.p1, &self.p2)
    }

    pub fn frame(&self) -> &Matrix3 {
        &self.frame
    }

    /// Errors on the two blown-up points and on the contracted line.
    pub fn forward(&self, r: &ProjPoint2) -> Result<TorusPoint> {
        if self.line.contains(r) {
            return Err(Error::ExcludedLocus);
        }
        let s = transform_point(&self.frame, r)?;
        let [x, y, z] = s.coords().clone();
        debug_assert!(!z.is_zero());
        Ok(TorusPoint::new(
            ProjPoint1::new(y, z.clone())?,
            ProjPoint1::new(x, z)?,
        ))
    }

    /// Errors on the two fibers through `(∞, ∞)`, which are the images of the
    /// exceptional curves and of the contracted line.
    pub fn inverse(&self, t: &TorusPoint) -> Result<ProjPoint2> {
        let (a, b) = t.x.coords();
        let (c, d) = t.y.coords();
        if b.is_zero() || d.is_zero() {
            return Err(Error::ExcludedLocus);
        }
        let s: [BigInt; 3] = [c * b, a * d, b * d];
        let s: Vec<BigRational> = s.into_iter().map(BigRational::from_integer).collect();
        ProjPoint2::from_rationals(&linalg::mat_vec(&self.frame_inv, &s))
    }
}
