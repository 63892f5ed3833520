use std::fmt;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::IntLit;
use crate::error::{Error, Result};

/// Point `[a:b]` of the real projective line with coprime integer
/// coordinates, first nonzero coordinate positive. `[1:0]` is infinity and
/// `[a:b]` with `b != 0` has affine value `a/b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint1 {
    a: BigInt,
    b: BigInt,
}

impl ProjPoint1 {
    pub fn new(a: BigInt, b: BigInt) -> Result<Self> {
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroPoint);
        }
        let g = a.gcd(&b);
        Ok(ProjPoint1::divided(a, b, &g))
    }

    /// Like [`ProjPoint1::new`] when `g = gcd(a, b)` is already known.
    pub(crate) fn divided(a: BigInt, b: BigInt, g: &BigInt) -> Self {
        let (mut a, mut b) = if g.is_one() { (a, b) } else { (a / g, b / g) };
        if a.is_negative() || (a.is_zero() && b.is_negative()) {
            a = -a;
            b = -b;
        }
        ProjPoint1 { a, b }
    }

    /// `[a:b]` for rational coordinates, after clearing denominators.
    pub fn from_rationals(a: &BigRational, b: &BigRational) -> Result<Self> {
        let l = a.denom().lcm(b.denom());
        let a = (a * BigRational::from_integer(l.clone())).to_integer();
        let b = (b * BigRational::from_integer(l)).to_integer();
        ProjPoint1::new(a, b)
    }

    pub fn finite(x: &BigRational) -> Self {
        ProjPoint1::new(x.numer().clone(), x.denom().clone()).expect("denominator is nonzero")
    }

    pub fn infinity() -> Self {
        ProjPoint1 {
            a: BigInt::one(),
            b: BigInt::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        ProjPoint1::finite(&BigRational::from_integer(n.into()))
    }

    pub fn is_infinite(&self) -> bool {
        self.b.is_zero()
    }

    /// Affine value `a/b`, `None` at infinity.
    pub fn affine(&self) -> Option<BigRational> {
        (!self.is_infinite()).then(|| BigRational::new(self.a.clone(), self.b.clone()))
    }

    pub fn coords(&self) -> (&BigInt, &BigInt) {
        (&self.a, &self.b)
    }
}

impl fmt::Display for ProjPoint1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}]", self.a, self.b)
    }
}

impl Serialize for ProjPoint1 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.a.to_string(), self.b.to_string()].serialize(s)
    }
}

impl<'de> Deserialize<'de> for ProjPoint1 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [a, b] = <[IntLit; 2]>::deserialize(d)?;
        ProjPoint1::new(a.0, b.0).map_err(serde::de::Error::custom)
    }
}

/// Real point of `P¹ × P¹`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TorusPoint {
    pub x: ProjPoint1,
    pub y: ProjPoint1,
}

impl TorusPoint {
    pub fn new(x: ProjPoint1, y: ProjPoint1) -> Self {
        TorusPoint { x, y }
    }

    pub fn affine(x: &BigRational, y: &BigRational) -> Self {
        TorusPoint::new(ProjPoint1::finite(x), ProjPoint1::finite(y))
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        TorusPoint::new(ProjPoint1::from_int(x), ProjPoint1::from_int(y))
    }

    /// Both coordinates finite with strictly positive affine value.
    pub fn in_positive_quadrant(&self) -> bool {
        [&self.x, &self.y]
            .iter()
            .all(|c| c.affine().is_some_and(|v| v.is_positive()))
    }
}

impl fmt::Display for TorusPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// Error unless all points are pairwise distinct.
pub fn ensure_distinct(points: &[TorusPoint]) -> Result<()> {
    let mut sorted: Vec<_> = points.iter().collect();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::PointsNotDistinct);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn canonical_form() {
        let p = ProjPoint1::new(BigInt::from(-4), BigInt::from(6)).unwrap();
        assert_eq!(p.coords(), (&BigInt::from(2), &BigInt::from(-3)));
        assert_eq!(p.affine(), Some(rat(-2, 3)));
        let inf = ProjPoint1::new(BigInt::from(-5), BigInt::zero()).unwrap();
        assert_eq!(inf, ProjPoint1::infinity());
        let zero = ProjPoint1::new(BigInt::zero(), BigInt::from(-7)).unwrap();
        assert_eq!(zero, ProjPoint1::from_int(0));
        assert_eq!(
            ProjPoint1::new(BigInt::zero(), BigInt::zero()),
            Err(Error::ZeroPoint)
        );
    }

    #[test]
    fn json_form() {
        let pt: TorusPoint = serde_json::from_str(r#"{"x":["1","0"],"y":["-6","4"]}"#).unwrap();
        assert!(pt.x.is_infinite());
        assert_eq!(pt.y.affine(), Some(rat(-3, 2)));
        assert_eq!(
            serde_json::to_string(&pt).unwrap(),
            r#"{"x":["1","0"],"y":["3","-2"]}"#
        );
        assert!(serde_json::from_str::<TorusPoint>(r#"{"x":["0","0"],"y":["1","1"]}"#).is_err());
    }
}
