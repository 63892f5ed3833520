//! Elementary birational self-maps of `P¹ × P¹`.

use num::{BigInt, BigRational, Integer, One, Zero};
use serde::Serialize;

use super::point::{ProjPoint1, TorusPoint};
use crate::arith::rational::common_denominator;
use crate::arith::{count_all_real_roots, Poly};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axis {
    /// `(x, y) ↦ (x, p(x)/q(x) · y)`
    ScaleY,
    /// `(x, y) ↦ (p(y)/q(y) · x, y)`
    ScaleX,
}

/// Fiber scaling by the ratio `p/q` of two real-root-free polynomials of
/// the same degree. Such a map is a birational self-map of `P¹ × P¹` that
/// restricts to an algebraic diffeomorphism of the real torus.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiberScale {
    axis: Axis,
    p: Poly,
    q: Poly,
    // integer multiples of p and q plus the multipliers, for fast evaluation
    p_int: (Vec<BigInt>, BigInt),
    q_int: (Vec<BigInt>, BigInt),
}

impl FiberScale {
    /// Builds a scaling after checking its diffeomorphism conditions.
    pub fn new(axis: Axis, p: Poly, q: Poly) -> Result<Self> {
        let fs = FiberScale::new_unchecked(axis, p, q);
        let problems = fs.problems();
        if let Some(first) = problems.into_iter().next() {
            return Err(Error::CertificationFailed {
                index: 0,
                reason: first,
            });
        }
        Ok(fs)
    }

    /// Builds a scaling without checks. Such a move may be undefined at some
    /// real points; run [`crate::torus::certify`] before trusting it.
    pub fn new_unchecked(axis: Axis, p: Poly, q: Poly) -> Self {
        let p_int = p.integer_coeffs();
        let q_int = q.integer_coeffs();
        FiberScale {
            axis,
            p,
            q,
            p_int,
            q_int,
        }
    }

    pub fn axis(&self) -> Axis {
        self.axis
    }

    pub fn p(&self) -> &Poly {
        &self.p
    }

    pub fn q(&self) -> &Poly {
        &self.q
    }

    /// Homogenization degree; equals `deg p = deg q` for certified moves.
    pub fn degree(&self) -> usize {
        self.p
            .degree()
            .unwrap_or(0)
            .max(self.q.degree().unwrap_or(0))
    }

    /// Empty when the move is a certified diffeomorphism of the real torus.
    pub fn problems(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (name, poly) in [("p", &self.p), ("q", &self.q)] {
            match count_all_real_roots(poly) {
                Err(_) => out.push(format!("{name} is identically zero")),
                Ok(0) => {}
                Ok(n) => out.push(format!("{name} has {n} real roots")),
            }
            if !poly.is_zero() && !poly.is_leading_positive() {
                out.push(format!("{name} has nonpositive leading coefficient"));
            }
        }
        if self.p.degree() != self.q.degree() {
            out.push(format!(
                "degree mismatch: deg p = {:?}, deg q = {:?}",
                self.p.degree(),
                self.q.degree()
            ));
        }
        out
    }

    pub fn inverse(&self) -> FiberScale {
        FiberScale {
            axis: self.axis,
            p: self.q.clone(),
            q: self.p.clone(),
            p_int: self.q_int.clone(),
            q_int: self.p_int.clone(),
        }
    }

    /// `None` if the image has both coordinates zero (only possible for
    /// uncertified moves).
    pub fn apply(&self, pt: &TorusPoint) -> Option<TorusPoint> {
        let (base, fiber) = match self.axis {
            Axis::ScaleY => (&pt.x, &pt.y),
            Axis::ScaleX => (&pt.y, &pt.x),
        };
        let (a, b) = base.coords();
        let (u, v) = fiber.coords();
        let d = self.degree();
        // P = p_int(a,b) / λp and Q = q_int(a,b) / λq, so
        // [P·u : Q·v] = [p_int(a,b)·λq·u : q_int(a,b)·λp·v].
        let pa = eval_homogeneous_int(&self.p_int.0, a, b, d);
        let qa = eval_homogeneous_int(&self.q_int.0, a, b, d);
        let new_fiber = ProjPoint1::new(pa * &self.q_int.1 * u, qa * &self.p_int.1 * v).ok()?;
        Some(match self.axis {
            Axis::ScaleY => TorusPoint::new(pt.x.clone(), new_fiber),
            Axis::ScaleX => TorusPoint::new(new_fiber, pt.y.clone()),
        })
    }
}

/// `Σ c_i a^i b^(d-i)` over the integers.
fn eval_homogeneous_int(coeffs: &[BigInt], a: &BigInt, b: &BigInt, d: usize) -> BigInt {
    let mut acc = BigInt::zero();
    let mut bpow = BigInt::one();
    for i in (0..=d).rev() {
        acc *= a;
        if let Some(c) = coeffs.get(i) {
            if !c.is_zero() {
                acc += c * &bpow;
            }
        }
        if i > 0 {
            bpow *= b;
        }
    }
    acc
}

pub type Matrix2 = [[BigRational; 2]; 2];

pub fn identity2() -> Matrix2 {
    [
        [BigRational::one(), BigRational::zero()],
        [BigRational::zero(), BigRational::one()],
    ]
}

pub fn det2(m: &Matrix2) -> BigRational {
    &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0]
}

/// `lhs · rhs`
pub fn mul2(lhs: &Matrix2, rhs: &Matrix2) -> Matrix2 {
    let e = |i: usize, j: usize| &lhs[i][0] * &rhs[0][j] + &lhs[i][1] * &rhs[1][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

fn adjugate2(m: &Matrix2) -> Matrix2 {
    [
        [m[1][1].clone(), -m[0][1].clone()],
        [-m[1][0].clone(), m[0][0].clone()],
    ]
}

/// Projective action `[a:b] ↦ [m00 a + m01 b : m10 a + m11 b]`.
pub fn act2(m: &Matrix2, p: &ProjPoint1) -> Option<ProjPoint1> {
    let den = common_denominator(m.iter().flatten());
    let e = |i: usize, j: usize| (&m[i][j] * &den).to_integer();
    let (a, b) = p.coords();
    let (na, nb) = (e(0, 0) * a + e(0, 1) * b, e(1, 0) * a + e(1, 1) * b);
    let det = e(0, 0) * e(1, 1) - e(0, 1) * e(1, 0);
    if det.is_zero() || (na.is_zero() && nb.is_zero()) {
        return ProjPoint1::new(na, nb).ok();
    }
    // gcd(a, b) = 1, so the content of the image divides det
    let g = det.gcd(&(&na % &det)).gcd(&(&nb % &det));
    Some(ProjPoint1::divided(na, nb, &g))
}

/// A Möbius transformation on each factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoebiusPair {
    mx: Matrix2,
    my: Matrix2,
}

impl MoebiusPair {
    pub fn new(mx: Matrix2, my: Matrix2) -> Result<Self> {
        if det2(&mx).is_zero() || det2(&my).is_zero() {
            return Err(Error::SingularMatrix);
        }
        Ok(MoebiusPair { mx, my })
    }

    pub fn new_unchecked(mx: Matrix2, my: Matrix2) -> Self {
        MoebiusPair { mx, my }
    }

    pub fn identity() -> Self {
        MoebiusPair {
            mx: identity2(),
            my: identity2(),
        }
    }

    pub fn mx(&self) -> &Matrix2 {
        &self.mx
    }

    pub fn my(&self) -> &Matrix2 {
        &self.my
    }

    pub fn is_identity(&self) -> bool {
        self.mx == identity2() && self.my == identity2()
    }

    pub fn problems(&self) -> Vec<String> {
        let mut out = Vec::new();
        if det2(&self.mx).is_zero() {
            out.push("mx is singular".to_string());
        }
        if det2(&self.my).is_zero() {
            out.push("my is singular".to_string());
        }
        out
    }

    pub fn inverse(&self) -> MoebiusPair {
        MoebiusPair {
            mx: adjugate2(&self.mx),
            my: adjugate2(&self.my),
        }
    }

    pub fn apply(&self, pt: &TorusPoint) -> Option<TorusPoint> {
        Some(TorusPoint::new(
            act2(&self.mx, &pt.x)?,
            act2(&self.my, &pt.y)?,
        ))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Move {
    Scale(FiberScale),
    Moebius(MoebiusPair),
}

impl Move {
    pub fn apply(&self, pt: &TorusPoint) -> Option<TorusPoint> {
        match self {
            Move::Scale(s) => s.apply(pt),
            Move::Moebius(m) => m.apply(pt),
        }
    }

    pub fn inverse(&self) -> Move {
        match self {
            Move::Scale(s) => Move::Scale(s.inverse()),
            Move::Moebius(m) => Move::Moebius(m.inverse()),
        }
    }

    pub fn problems(&self) -> Vec<String> {
        match self {
            Move::Scale(s) => s.problems(),
            Move::Moebius(m) => m.problems(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Move::Scale(s) if s.axis == Axis::ScaleY => "scale_y",
            Move::Scale(_) => "scale_x",
            Move::Moebius(_) => "moebius",
        }
    }
}

impl From<FiberScale> for Move {
    fn from(s: FiberScale) -> Self {
        Move::Scale(s)
    }
}

impl From<MoebiusPair> for Move {
    fn from(m: MoebiusPair) -> Self {
        Move::Moebius(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn scale_y(p: &[i64], q: &[i64]) -> FiberScale {
        FiberScale::new(Axis::ScaleY, Poly::from_ints(p), Poly::from_ints(q)).unwrap()
    }

    #[test]
    fn moebius_action_removes_content() {
        let m: Matrix2 = [[rat(1, 2), rat(1, 2)], [rat(3, 2), rat(-3, 2)]];
        assert_eq!(
            act2(&m, &ProjPoint1::from_int(1)),
            Some(ProjPoint1::infinity())
        );
        assert_eq!(
            act2(&m, &ProjPoint1::from_int(3)),
            Some(ProjPoint1::finite(&rat(2, 3)))
        );
        assert_eq!(
            act2(&m, &ProjPoint1::infinity()),
            Some(ProjPoint1::finite(&rat(1, 3)))
        );
    }

    #[test]
    fn scale_y_at_origin() {
        let s = scale_y(&[1, 0, 1], &[2, 0, 1]);
        let out = s.apply(&TorusPoint::from_ints(0, 1)).unwrap();
        assert_eq!(out, TorusPoint::affine(&int(0), &rat(1, 2)));
        assert_eq!(out.y.coords(), (&BigInt::from(1), &BigInt::from(2)));
    }

    #[test]
    fn scale_y_at_infinity_uses_leading_coefficients() {
        let s = scale_y(&[1, 0, 1], &[2, 0, 1]);
        let pt = TorusPoint::new(ProjPoint1::infinity(), ProjPoint1::from_int(3));
        assert_eq!(s.apply(&pt).unwrap(), pt);
        // lc ratio 2/1 at infinity
        let s = FiberScale::new(
            Axis::ScaleY,
            Poly::from_ints(&[1, 0, 2]),
            Poly::from_ints(&[1, 0, 1]),
        )
        .unwrap();
        let out = s.apply(&pt).unwrap();
        assert_eq!(out.y, ProjPoint1::from_int(6));
    }

    #[test]
    fn rational_coefficients() {
        let s = FiberScale::new(
            Axis::ScaleX,
            Poly::new(vec![rat(1, 3), int(0), rat(1, 2)]),
            Poly::from_ints(&[1, 1, 1]),
        )
        .unwrap();
        let pt = TorusPoint::affine(&rat(5, 7), &rat(2, 3));
        let factor = s.p().eval(&rat(2, 3)) / s.q().eval(&rat(2, 3));
        let out = s.apply(&pt).unwrap();
        assert_eq!(out, TorusPoint::affine(&(rat(5, 7) * factor), &rat(2, 3)));
        assert_eq!(s.inverse().apply(&out).unwrap(), pt);
    }

    #[test]
    fn scale_checks() {
        assert!(FiberScale::new(
            Axis::ScaleY,
            Poly::from_ints(&[-1, 0, 1]),
            Poly::from_ints(&[1, 0, 1])
        )
        .is_err());
        assert!(FiberScale::new(
            Axis::ScaleY,
            Poly::from_ints(&[1, 0, 1]),
            Poly::from_ints(&[1])
        )
        .is_err());
        assert!(FiberScale::new(
            Axis::ScaleY,
            Poly::from_ints(&[-1, 0, -1]),
            Poly::from_ints(&[1, 0, 1])
        )
        .is_err());
        let bad = FiberScale::new_unchecked(
            Axis::ScaleY,
            Poly::from_ints(&[-1, 0, 1]),
            Poly::from_ints(&[1, 0, 1]),
        );
        assert_eq!(bad.problems(), vec!["p has 2 real roots".to_string()]);
    }

    #[test]
    fn moebius_round_trip() {
        let m = MoebiusPair::new(
            [[int(0), int(1)], [int(1), int(-2)]],
            [[int(2), int(3)], [int(1), int(1)]],
        )
        .unwrap();
        let pts = [
            TorusPoint::new(ProjPoint1::infinity(), ProjPoint1::from_int(-1)),
            TorusPoint::from_ints(2, 5),
            TorusPoint::affine(&rat(-7, 3), &rat(1, 9)),
        ];
        for p in &pts {
            assert_eq!(m.inverse().apply(&m.apply(p).unwrap()).unwrap(), *p);
        }
        // x = 2 goes to infinity under [b : a - 2b]
        assert!(m.apply(&pts[1]).unwrap().x.is_infinite());
        assert_eq!(
            MoebiusPair::new([[int(1), int(2)], [int(2), int(4)]], identity2()),
            Err(Error::SingularMatrix)
        );
    }
}
