//! Real points and lines of the projective plane.

use std::fmt;

use num::{BigInt, BigRational, Integer, One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::linalg;
use crate::arith::IntLit;
use crate::error::{Error, Result};

pub type Matrix3 = Vec<Vec<BigRational>>;

fn canonical_triple(mut v: [BigInt; 3]) -> Result<[BigInt; 3]> {
    if v.iter().all(Zero::is_zero) {
        return Err(Error::ZeroPoint);
    }
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    for x in v.iter_mut() {
        *x = &*x / &g;
    }
    if v.iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative())
    {
        for x in v.iter_mut() {
            *x = -&*x;
        }
    }
    Ok(v)
}

fn clear_denominators(v: &[BigRational]) -> [BigInt; 3] {
    let l = v.iter().fold(BigInt::from(1), |acc, x| acc.lcm(x.denom()));
    let l = BigRational::from_integer(l);
    [0, 1, 2].map(|i| (&v[i] * &l).to_integer())
}

macro_rules! triple_type {
    ($name:ident, $doc:literal) => {
        #[doc = $doc]
        #[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
        pub struct $name([BigInt; 3]);

        impl $name {
            pub fn new(x: BigInt, y: BigInt, z: BigInt) -> Result<Self> {
                canonical_triple([x, y, z]).map($name)
            }

            pub fn from_ints(x: i64, y: i64, z: i64) -> Result<Self> {
                $name::new(x.into(), y.into(), z.into())
            }

            pub fn from_rationals(v: &[BigRational]) -> Result<Self> {
                assert_eq!(v.len(), 3);
                canonical_triple(clear_denominators(v)).map($name)
            }

            pub fn coords(&self) -> &[BigInt; 3] {
                &self.0
            }

            pub fn to_rationals(&self) -> Vec<BigRational> {
                self.0
                    .iter()
                    .map(|x| BigRational::from_integer(x.clone()))
                    .collect()
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "[{}:{}:{}]", self.0[0], self.0[1], self.0[2])
            }
        }

        impl Serialize for $name {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                self.0.clone().map(|x| x.to_string()).serialize(s)
            }
        }

        impl<'de> Deserialize<'de> for $name {
            fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
                let [x, y, z] = <[IntLit; 3]>::deserialize(d)?;
                $name::new(x.0, y.0, z.0).map_err(serde::de::Error::custom)
            }
        }
    };
}

triple_type!(
    ProjPoint2,
    "Real point `[x:y:z]` of `P²`: coprime integers, first nonzero coordinate positive."
);
triple_type!(
    Line2,
    "Real line `l·x + m·y + n·z = 0` of `P²` in the same canonical form as points."
);

impl Line2 {
    /// `l·x + m·y + n·z`
    pub fn incidence(&self, p: &ProjPoint2) -> BigInt {
        self.0.iter().zip(p.coords()).map(|(a, b)| a * b).sum()
    }

    pub fn contains(&self, p: &ProjPoint2) -> bool {
        self.incidence(p).is_zero()
    }
}

fn cross(a: &[BigInt; 3], b: &[BigInt; 3]) -> [BigInt; 3] {
    [
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

fn det3(rows: [&[BigInt; 3]; 3]) -> BigInt {
    let c = cross(rows[1], rows[2]);
    rows[0].iter().zip(&c).map(|(a, b)| a * b).sum()
}

pub fn collinear(p: &ProjPoint2, q: &ProjPoint2, r: &ProjPoint2) -> bool {
    det3([p.coords(), q.coords(), r.coords()]).is_zero()
}

pub fn line_through(p: &ProjPoint2, q: &ProjPoint2) -> Result<Line2> {
    let [l, m, n] = cross(p.coords(), q.coords());
    Line2::new(l, m, n).map_err(|_| Error::EqualPoints)
}

/// Projective transformation `A` with `A·p1 ~ [1:0:0]`, `A·p2 ~ [0:1:0]` and
/// `A(line) = {z = 0}`.
///
/// Both points must be distinct and lie on `line`. The remaining freedom is
/// fixed by sending the first coordinate vertex off the line to `[0:0:1]`.
pub fn standardize(p1: &ProjPoint2, p2: &ProjPoint2, line: &Line2) -> Result<Matrix3> {
    if p1 == p2 {
        return Err(Error::EqualPoints);
    }
    if !line.contains(p1) || !line.contains(p2) {
        return Err(Error::PointNotOnLine);
    }
    let k = line
        .coords()
        .iter()
        .position(|c| !c.is_zero())
        .expect("line has a nonzero coordinate");
    let mut off = vec![BigRational::zero(); 3];
    off[k] = BigRational::one();
    let (c1, c2) = (p1.to_rationals(), p2.to_rationals());
    // columns p1, p2, off
    let b: Matrix3 = (0..3)
        .map(|i| vec![c1[i].clone(), c2[i].clone(), off[i].clone()])
        .collect();
    linalg::inverse(&b).ok_or(Error::SingularMatrix)
}

/// Image of a point under a 3×3 rational matrix.
pub fn transform_point(m: &Matrix3, p: &ProjPoint2) -> Result<ProjPoint2> {
    ProjPoint2::from_rationals(&linalg::mat_vec(m, &p.to_rationals()))
}

/// Image of a line under the point transformation `m`, i.e. `ℓ·m⁻¹`.
pub fn transform_line(m: &Matrix3, l: &Line2) -> Result<Line2> {
    let inv = linalg::inverse(m).ok_or(Error::SingularMatrix)?;
    let row = l.to_rationals();
    let img: Vec<BigRational> = (0..3)
        .map(|j| (0..3).fold(BigRational::zero(), |acc, i| acc + &row[i] * &inv[i][j]))
        .collect();
    Line2::from_rationals(&img)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(x: i64, y: i64, z: i64) -> ProjPoint2 {
        ProjPoint2::from_ints(x, y, z).unwrap()
    }

    #[test]
    fn canonical_points() {
        assert_eq!(p(-2, 4, 6), p(1, -2, -3));
        assert_eq!(
            p(0, -3, 0).coords(),
            &[BigInt::zero(), BigInt::from(1), BigInt::zero()]
        );
        assert_eq!(ProjPoint2::from_ints(0, 0, 0), Err(Error::ZeroPoint));
    }

    #[test]
    fn collinearity() {
        assert!(collinear(&p(1, 0, 0), &p(0, 1, 0), &p(1, 1, 0)));
        assert!(!collinear(&p(1, 0, 0), &p(0, 1, 0), &p(0, 0, 1)));
        assert!(collinear(&p(1, 1, 1), &p(2, 2, 2), &p(0, 0, 1)));
    }

    #[test]
    fn lines() {
        let l = line_through(&p(1, 0, 0), &p(0, 1, 0)).unwrap();
        assert_eq!(l, Line2::from_ints(0, 0, 1).unwrap());
        let l = line_through(&p(1, 0, 1), &p(0, 1, 1)).unwrap();
        assert_eq!(l, Line2::from_ints(1, 1, -1).unwrap());
        assert!(l.contains(&p(1, 0, 1)) && l.contains(&p(0, 1, 1)));
        assert_eq!(
            line_through(&p(1, 1, 1), &p(3, 3, 3)),
            Err(Error::EqualPoints)
        );
    }

    #[test]
    fn standard_triple_gives_diagonal() {
        let a = standardize(
            &p(1, 0, 0),
            &p(0, 1, 0),
            &Line2::from_ints(0, 0, 1).unwrap(),
        )
        .unwrap();
        for (i, row) in a.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                assert_eq!(x.is_zero(), i != j);
            }
        }
    }

    #[test]
    fn standardize_worked_example() {
        let (p1, p2) = (p(1, 1, 1), p(1, -1, 1));
        let l = line_through(&p1, &p2).unwrap();
        assert_eq!(l, Line2::from_ints(1, 0, -1).unwrap());
        let a = standardize(&p1, &p2, &l).unwrap();
        assert!(!linalg::det(&a).is_zero());
        assert_eq!(transform_point(&a, &p1).unwrap(), p(1, 0, 0));
        assert_eq!(transform_point(&a, &p2).unwrap(), p(0, 1, 0));
        assert_eq!(
            transform_line(&a, &l).unwrap(),
            Line2::from_ints(0, 0, 1).unwrap()
        );
        // the third basis column [1:0:0] is off the line and goes to [0:0:1]
        assert_eq!(transform_point(&a, &p(1, 0, 0)).unwrap(), p(0, 0, 1));
    }

    #[test]
    fn standardize_preconditions() {
        let x0 = Line2::from_ints(1, 0, 0).unwrap();
        assert_eq!(
            standardize(&p(1, 1, 1), &p(1, -1, 1), &x0),
            Err(Error::PointNotOnLine)
        );
        assert_eq!(
            standardize(&p(0, 1, 1), &p(0, 2, 2), &x0),
            Err(Error::EqualPoints)
        );
    }
}
