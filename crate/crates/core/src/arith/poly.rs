//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::intpoly;
use super::rational::{common_denominator, int, parse_rational, RatLit};
use crate::error::{Error, Result};

/// Polynomial in one variable; `coeffs[i]` multiplies `ζ^i`.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and `degree` is `len - 1` otherwise.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Poly::new(vec![c])
    }

    /// The monic linear polynomial `ζ - root`.
    pub fn linear(root: &BigRational) -> Self {
        Poly::new(vec![-root.clone(), BigRational::one()])
    }

    /// `Π (ζ - r)` over the given roots.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a BigRational>) -> Self {
        roots
            .into_iter()
            .fold(Poly::one(), |acc, r| &acc * &Poly::linear(r))
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Degree-`d` homogenization evaluated at `[a:b]`: `Σ c_i a^i b^(d-i)`.
    ///
    /// `d` must be at least the degree.
    pub fn eval_homogeneous(&self, a: &BigRational, b: &BigRational, d: usize) -> BigRational {
        assert!(self.degree().is_none_or(|deg| deg <= d));
        let mut acc = BigRational::zero();
        let mut bpow = BigRational::one();
        for i in (0..=d).rev() {
            let c = self
                .coeffs
                .get(i)
                .cloned()
                .unwrap_or_else(BigRational::zero);
            acc = acc * a + c * &bpow;
            if i > 0 {
                bpow *= b;
            }
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        Poly::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Divides by the leading coefficient. The zero polynomial stays zero.
    pub fn monic(&self) -> Poly {
        match self.leading_coeff() {
            Some(lc) => self.scale(&lc.recip()),
            None => Poly::zero(),
        }
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return Ok((Poly::zero(), Poly::zero()));
        };
        if nd < dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![BigRational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if !c.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[k + j] -= &c * dc;
                }
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn rem(&self, divisor: &Poly) -> Result<Poly> {
        self.div_rem(divisor).map(|(_, r)| r)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdUndefined);
        }
        let mut a = intpoly::from_rationals(&self.coeffs);
        let mut b = intpoly::from_rationals(&other.coeffs);
        while !b.is_empty() {
            let r = intpoly::primitive(intpoly::pseudo_rem(&a, &b));
            a = std::mem::replace(&mut b, r);
        }
        Ok(Poly::new(intpoly::to_rationals(&a)).monic())
    }

    /// `p / gcd(p, p')`: same roots, each with multiplicity one.
    pub fn square_free_part(&self) -> Result<Poly> {
        if self.is_zero() {
            return Err(Error::IdenticallyZero);
        }
        let g = self.gcd(&self.derivative())?;
        Ok(self.div_rem(&g)?.0)
    }

    /// Coefficients multiplied by the least common denominator, as integers.
    /// Returns the integer coefficients together with that denominator.
    pub fn integer_coeffs(&self) -> (Vec<BigInt>, BigInt) {
        let den = common_denominator(&self.coeffs);
        let ints = self
            .coeffs
            .iter()
            .map(|c| (c * &den).to_integer())
            .collect();
        (ints, den)
    }

    pub fn is_leading_positive(&self) -> bool {
        self.leading_coeff().is_some_and(Signed::is_positive)
    }
}

impl From<Vec<BigRational>> for Poly {
    fn from(coeffs: Vec<BigRational>) -> Self {
        Poly::new(coeffs)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let zero = BigRational::zero();
        Poly::new(
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + rhs.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self + &(-rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

/// Dense coefficient list, lowest degree first: `[1, 0, 1]` is `ζ²+1`.
impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl FromStr for Poly {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("polynomial must be a bracketed list: `{s}`")))?;
        if inner.trim().is_empty() {
            return Ok(Poly::zero());
        }
        inner
            .split(',')
            .map(|t| parse_rational(t.trim().trim_matches('"')))
            .collect::<Result<Vec<_>>>()
            .map(Poly::new)
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.coeffs.iter().map(ToString::to_string))
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = Vec::<RatLit>::deserialize(d)?;
        Ok(Poly::new(raw.into_iter().map(|r| r.0).collect()))
    }
}
