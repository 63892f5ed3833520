//! Sturm sequences and exact real-root counting.

use num::{BigInt, BigRational, Signed, Zero};

use super::intpoly;
use super::poly::Poly;
use super::rational::ExtRational;
use crate::error::{Error, Result};

/// Sturm chain of the square-free part of a polynomial.
///
/// `chain[0]` is square-free, `chain[1]` its derivative, and each later
/// entry is a positive multiple of the negated remainder of the two before
/// it. The last entry is a nonzero constant. Entries are kept primitive
/// with integer coefficients so evaluation avoids rational normalization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SturmChain {
    chain: Vec<Vec<BigInt>>,
}

impl SturmChain {
    pub fn new(p: &Poly) -> Result<Self> {
        let seed = p.square_free_part()?;
        let first = intpoly::from_rationals(seed.coeffs());
        let second = intpoly::from_rationals(seed.derivative().coeffs());
        let mut chain = vec![first];
        if second.is_empty() {
            // constant seed
            return Ok(SturmChain { chain });
        }
        chain.push(second);
        loop {
            let n = chain.len();
            let r = intpoly::primitive(intpoly::pseudo_rem(&chain[n - 2], &chain[n - 1]));
            if r.is_empty() {
                break;
            }
            chain.push(r.into_iter().map(|c| -c).collect());
        }
        Ok(SturmChain { chain })
    }

    pub fn chain(&self) -> Vec<Poly> {
        self.chain
            .iter()
            .map(|v| Poly::new(intpoly::to_rationals(v)))
            .collect()
    }

    /// Sign changes of the chain at `x`, zeros skipped.
    pub fn variations(&self, x: &ExtRational) -> usize {
        let signs = self.chain.iter().map(|p| match x {
            ExtRational::Finite(v) => intpoly::sign_at(p, v.numer(), v.denom()),
            ExtRational::PosInf => sign_at_infinity(p, false),
            ExtRational::NegInf => sign_at_infinity(p, true),
        });
        count_changes(signs)
    }

    /// Distinct real roots in `(lo, hi]`.
    pub fn count(&self, lo: &ExtRational, hi: &ExtRational) -> Result<usize> {
        if lo >= hi {
            return Err(Error::EmptyInterval);
        }
        let (vl, vh) = (self.variations(lo), self.variations(hi));
        debug_assert!(vl >= vh);
        Ok(vl - vh)
    }
}

fn sign_at_infinity(p: &[BigInt], negative: bool) -> i8 {
    let Some(lc) = p.last() else { return 0 };
    let s = if lc.is_negative() { -1 } else { 1 };
    let odd = p.len().is_multiple_of(2);
    if negative && odd {
        -s
    } else {
        s
    }
}

fn count_changes(signs: impl Iterator<Item = i8>) -> usize {
    let mut last = 0i8;
    let mut changes = 0;
    for s in signs.filter(|&s| s != 0) {
        if last != 0 && s != last {
            changes += 1;
        }
        last = s;
    }
    changes
}

/// Number of distinct real roots of `p` in `(lo, hi]`; either end may be infinite.
pub fn count_real_roots(p: &Poly, lo: &ExtRational, hi: &ExtRational) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::IdenticallyZero);
    }
    if lo >= hi {
        return Err(Error::EmptyInterval);
    }
    SturmChain::new(p)?.count(lo, hi)
}

/// Number of distinct real roots of `p` on the whole line.
pub fn count_all_real_roots(p: &Poly) -> Result<usize> {
    count_real_roots(p, &ExtRational::NegInf, &ExtRational::PosInf)
}

/// True when `p` is nonzero and has no real root.
pub fn is_zero_free(p: &Poly) -> bool {
    count_all_real_roots(p).is_ok_and(|n| n == 0)
}

/// Whether `p(x) == 0`, exposed for callers that need to check split points.
pub fn vanishes_at(p: &Poly, x: &BigRational) -> bool {
    p.eval(x).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, rat};
    use proptest::prelude::*;

    const ALL: (ExtRational, ExtRational) = (ExtRational::NegInf, ExtRational::PosInf);

    #[test]
    fn known_root_counts() {
        let (lo, hi) = ALL;
        assert_eq!(
            count_real_roots(&Poly::from_ints(&[1, 0, 1]), &lo, &hi),
            Ok(0)
        );
        assert_eq!(
            count_real_roots(&Poly::from_ints(&[-2, 0, 1]), &lo, &hi),
            Ok(2)
        );
        let cubic = Poly::from_roots(&[int(1), int(2), int(3)]);
        assert_eq!(cubic, Poly::from_ints(&[-6, 11, -6, 1]));
        assert_eq!(
            count_real_roots(&cubic, &rat(3, 2).into(), &ExtRational::PosInf),
            Ok(2)
        );
    }

    #[test]
    fn half_open_convention() {
        let cubic = Poly::from_roots(&[int(1), int(2), int(3)]);
        // (1, 3] contains 2 and 3 but not 1
        assert_eq!(
            count_real_roots(&cubic, &int(1).into(), &int(3).into()),
            Ok(2)
        );
        assert_eq!(
            count_real_roots(&cubic, &int(0).into(), &int(1).into()),
            Ok(1)
        );
    }

    #[test]
    fn multiple_roots_count_once() {
        let p = &Poly::from_roots(&[int(1), int(1), int(1)]) * &Poly::from_roots(&[int(-4)]);
        assert_eq!(count_all_real_roots(&p), Ok(2));
    }

    #[test]
    fn errors() {
        assert_eq!(
            count_all_real_roots(&Poly::zero()),
            Err(Error::IdenticallyZero)
        );
        let p = Poly::from_ints(&[1, 1]);
        assert_eq!(
            count_real_roots(&p, &int(1).into(), &int(1).into()),
            Err(Error::EmptyInterval)
        );
        assert_eq!(count_all_real_roots(&Poly::from_ints(&[5])), Ok(0));
    }

    #[test]
    fn chain_shape() {
        let sc = SturmChain::new(&Poly::from_ints(&[-2, 0, 1])).unwrap();
        assert_eq!(sc.chain().last().unwrap().degree(), Some(0));
    }

    proptest! {
        #[test]
        fn interval_additivity(roots in prop::collection::vec(-10i64..10, 1..6),
                               a in -15i64..15, b in -15i64..15, c in -15i64..15) {
            let mut ends = [a, b, c];
            ends.sort();
            prop_assume!(ends[0] < ends[1] && ends[1] < ends[2]);
            let rs: Vec<_> = roots.iter().map(|&r| rat(r, 2)).collect();
            let p = &Poly::from_roots(&rs) * &Poly::from_ints(&[3, 0, 1]);
            let mid = int(ends[1]);
            prop_assume!(!vanishes_at(&p, &mid));
            let (x, y, z): (ExtRational, ExtRational, ExtRational) =
                (int(ends[0]).into(), mid.into(), int(ends[2]).into());
            prop_assert_eq!(
                count_real_roots(&p, &x, &y).unwrap() + count_real_roots(&p, &y, &z).unwrap(),
                count_real_roots(&p, &x, &z).unwrap()
            );
        }
    }
}
