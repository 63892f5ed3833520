//! Rational scalars and their text forms.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// `n/d` as a reduced rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Parses `"a/b"` or `"a"` (optional sign on `a`).
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num = BigInt::from_str(num).map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
    let den = BigInt::from_str(den).map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(BigRational::new(num, den))
}

/// Sign of a rational as -1, 0 or 1.
pub fn sign(x: &BigRational) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

/// Least common multiple of the denominators.
pub fn common_denominator<'a>(xs: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    use num::Integer;
    xs.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// A rational number or one of the two infinities, used as interval endpoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtRational {
    NegInf,
    Finite(BigRational),
    PosInf,
}

impl From<BigRational> for ExtRational {
    fn from(x: BigRational) -> Self {
        ExtRational::Finite(x)
    }
}

impl PartialOrd for ExtRational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtRational {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtRational::*;
        match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (_, NegInf) | (PosInf, _) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl FromStr for ExtRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "-inf" | "-oo" => Ok(ExtRational::NegInf),
            "inf" | "+inf" | "oo" | "+oo" => Ok(ExtRational::PosInf),
            other => parse_rational(other).map(ExtRational::Finite),
        }
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRational::NegInf => f.write_str("-inf"),
            ExtRational::PosInf => f.write_str("inf"),
            ExtRational::Finite(x) => write!(f, "{x}"),
        }
    }
}

/// JSON carrier for a rational: accepts `"a/b"` strings and bare integers,
/// always writes the string form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatLit(pub BigRational);

impl Serialize for RatLit {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for RatLit {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(n) => Ok(RatLit(int(n))),
            Raw::Str(s) => parse_rational(&s)
                .map(RatLit)
                .map_err(serde::de::Error::custom),
        }
    }
}

/// JSON carrier for an integer given as a decimal string (or bare number).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntLit(pub BigInt);

impl Serialize for IntLit {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for IntLit {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(n) => Ok(IntLit(BigInt::from(n))),
            Raw::Str(s) => BigInt::from_str(s.trim())
                .map(IntLit)
                .map_err(|_| serde::de::Error::custom(format!("bad integer `{s}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_prints_literals() {
        assert_eq!(parse_rational("-3/2").unwrap(), rat(-3, 2));
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert_eq!(parse_rational("6/4").unwrap(), rat(3, 2));
        assert_eq!(rat(-3, 2).to_string(), "-3/2");
        assert_eq!(int(7).to_string(), "7");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn extended_order() {
        let a: ExtRational = "-inf".parse().unwrap();
        let b: ExtRational = "3/2".parse().unwrap();
        let c: ExtRational = "inf".parse().unwrap();
        assert!(a < b && b < c);
    }

    #[test]
    fn json_literals() {
        let v: Vec<RatLit> = serde_json::from_str(r#"[1, "-3/2", "0"]"#).unwrap();
        assert_eq!(v[1].0, rat(-3, 2));
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"["1","-3/2","0"]"#);
    }
}
