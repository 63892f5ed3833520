//! Integer polynomial helpers: primitive parts and sign-preserving
//! pseudo-remainders. Coefficient lists are lowest degree first with no
//! trailing zeros.

use num::{BigInt, BigRational, Integer, One, Signed, Zero};

use super::rational::common_denominator;

fn trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

/// Divides out the positive content.
pub fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    trim(&mut v);
    let content = v.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    if !content.is_zero() && !content.is_one() {
        for c in &mut v {
            *c = &*c / &content;
        }
    }
    v
}

/// Positive integer multiple of a rational coefficient list, made primitive.
pub fn from_rationals(coeffs: &[BigRational]) -> Vec<BigInt> {
    let den = common_denominator(coeffs);
    primitive(coeffs.iter().map(|c| (c * &den).to_integer()).collect())
}

pub fn to_rationals(v: &[BigInt]) -> Vec<BigRational> {
    v.iter().cloned().map(BigRational::from_integer).collect()
}

/// A positive integer multiple of `a mod b`. `b` must be nonzero.
pub fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    let mut negated = false;
    while r.len() > db {
        let dr = r.len() - 1;
        let lr = r[dr].clone();
        let shift = dr - db;
        for c in &mut r {
            *c *= lb;
        }
        for (i, bc) in b.iter().enumerate() {
            r[i + shift] -= &lr * bc;
        }
        if lb.is_negative() {
            negated = !negated;
        }
        trim(&mut r);
    }
    if negated {
        for c in &mut r {
            *c = -&*c;
        }
    }
    r
}

/// Sign of `Σ c_i (n/d)^i` for `d > 0`, computed as the sign of the
/// homogenized integer value.
pub fn sign_at(v: &[BigInt], n: &BigInt, d: &BigInt) -> i8 {
    let mut acc = BigInt::zero();
    let mut dpow = BigInt::one();
    for c in v.iter().rev() {
        acc = acc * n + c * &dpow;
        dpow *= d;
    }
    // acc = Σ c_i n^i d^(k-i) = d^k · p(n/d)
    match acc.sign() {
        num::bigint::Sign::Minus => -1,
        num::bigint::Sign::NoSign => 0,
        num::bigint::Sign::Plus => 1,
    }
}
