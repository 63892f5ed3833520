//! Complex points, conics through five points, and six-point Cremona
//! configurations over ℚ(i).

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::gaussian::GaussRat;
use num::Zero;

use super::linalg;
use super::plane::ProjPoint2;
use crate::error::{Error, Result};

fn normalize(v: &mut [GaussRat]) -> Result<()> {
    let lead = v
        .iter()
        .find(|c| !Zero::is_zero(*c))
        .cloned()
        .ok_or(Error::ZeroPoint)?;
    for c in v.iter_mut() {
        *c = &*c / &lead;
    }
    Ok(())
}

/// Complex point of `P²` with Gaussian-rational coordinates, scaled so the
/// first nonzero coordinate is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussianPoint2([GaussRat; 3]);

impl GaussianPoint2 {
    pub fn new(x: GaussRat, y: GaussRat, z: GaussRat) -> Result<Self> {
        let mut v = [x, y, z];
        normalize(&mut v)?;
        Ok(GaussianPoint2(v))
    }

    pub fn coords(&self) -> &[GaussRat; 3] {
        &self.0
    }

    pub fn conj(&self) -> Self {
        GaussianPoint2(self.0.clone().map(|c| c.conj()))
    }

    pub fn is_real(&self) -> bool {
        self.0.iter().all(GaussRat::is_real)
    }

    /// Values of `x², xy, y², xz, yz, z²`.
    pub fn monomials(&self) -> Vec<GaussRat> {
        let [x, y, z] = &self.0;
        vec![x * x, x * y, y * y, x * z, y * z, z * z]
    }
}

impl From<&ProjPoint2> for GaussianPoint2 {
    fn from(p: &ProjPoint2) -> Self {
        let [x, y, z] = p.to_rationals().try_into().expect("three coordinates");
        GaussianPoint2::new(x.into(), y.into(), z.into()).expect("nonzero point")
    }
}

impl fmt::Display for GaussianPoint2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}:{}:{}]", self.0[0], self.0[1], self.0[2])
    }
}

impl Serialize for GaussianPoint2 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for GaussianPoint2 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [x, y, z] = <[GaussRat; 3]>::deserialize(d)?;
        GaussianPoint2::new(x, y, z).map_err(serde::de::Error::custom)
    }
}

/// Conic `a x² + b xy + c y² + d xz + e yz + f z² = 0`, scaled so the first
/// nonzero coefficient is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Conic {
    coeffs: [GaussRat; 6],
}

impl Conic {
    pub fn new(coeffs: [GaussRat; 6]) -> Result<Self> {
        let mut coeffs = coeffs;
        normalize(&mut coeffs)?;
        Ok(Conic { coeffs })
    }

    /// Coefficients of `x², xy, y², xz, yz, z²`.
    pub fn coeffs(&self) -> &[GaussRat; 6] {
        &self.coeffs
    }

    pub fn eval(&self, p: &GaussianPoint2) -> GaussRat {
        self.coeffs
            .iter()
            .zip(p.monomials())
            .fold(GaussRat::zero(), |acc, (c, m)| &acc + &(c * &m))
    }

    /// Symmetric matrix `M` with `X^T M X` equal to the quadratic form.
    pub fn matrix(&self) -> Vec<Vec<GaussRat>> {
        let half = |c: &GaussRat| c / &GaussRat::from_ints(2, 0);
        let [a, b, c, d, e, f] = &self.coeffs;
        vec![
            vec![a.clone(), half(b), half(d)],
            vec![half(b), c.clone(), half(e)],
            vec![half(d), half(e), f.clone()],
        ]
    }

    pub fn det(&self) -> GaussRat {
        linalg::det(&self.matrix())
    }

    pub fn is_nonsingular(&self) -> bool {
        !Zero::is_zero(&self.det())
    }

    pub fn conj(&self) -> Conic {
        Conic {
            coeffs: self.coeffs.clone().map(|c| c.conj()),
        }
    }
}

impl fmt::Display for Conic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const MONO: [&str; 6] = ["x^2", "x*y", "y^2", "x*z", "y*z", "z^2"];
        let mut first = true;
        for (c, m) in self.coeffs.iter().zip(MONO) {
            if Zero::is_zero(c) {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*{m}")?;
            first = false;
        }
        f.write_str(" = 0")
    }
}

fn monomial_matrix(pts: &[&GaussianPoint2]) -> Vec<Vec<GaussRat>> {
    pts.iter().map(|p| p.monomials()).collect()
}

/// The unique conic through five points; errors if the points impose fewer
/// than five conditions.
pub fn conic_through_five(pts: &[GaussianPoint2]) -> Result<Conic> {
    if pts.len() != 5 {
        return Err(Error::LengthMismatch(format!(
            "need 5 points, got {}",
            pts.len()
        )));
    }
    conic_through(&pts.iter().collect::<Vec<_>>())
}

fn conic_through(pts: &[&GaussianPoint2]) -> Result<Conic> {
    let ns = linalg::nullspace(&monomial_matrix(pts));
    match <[Vec<GaussRat>; 1]>::try_from(ns) {
        Ok([v]) => Conic::new(v.try_into().expect("six coefficients")),
        Err(_) => Err(Error::ConicNotUnique),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubsetReport {
    /// Index of the point left out.
    pub omitted: usize,
    pub conic: Option<Conic>,
    pub nonsingular: bool,
}

/// Outcome of the three six-point conditions.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfigReport {
    pub conjugation_closed: bool,
    pub not_on_common_conic: bool,
    pub five_point_conics_nonsingular: bool,
    pub subsets: Vec<SubsetReport>,
}

impl ConfigReport {
    pub fn is_valid(&self) -> bool {
        self.conjugation_closed && self.not_on_common_conic && self.five_point_conics_nonsingular
    }
}

pub fn validate_six_config(pts: &[GaussianPoint2]) -> Result<ConfigReport> {
    if pts.len() != 6 {
        return Err(Error::LengthMismatch(format!(
            "need 6 points, got {}",
            pts.len()
        )));
    }
    let mut sorted: Vec<_> = pts.iter().collect();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::PointsNotDistinct);
    }

    let conjugation_closed = pts.iter().all(|p| pts.contains(&p.conj()));
    let all: Vec<_> = pts.iter().collect();
    let not_on_common_conic = linalg::rank(&monomial_matrix(&all)) == 6;

    let subsets: Vec<SubsetReport> = (0..6)
        .map(|omitted| {
            let five: Vec<_> = pts
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != omitted)
                .map(|(_, p)| p)
                .collect();
            let conic = conic_through(&five).ok();
            let nonsingular = conic.as_ref().is_some_and(Conic::is_nonsingular);
            SubsetReport {
                omitted,
                conic,
                nonsingular,
            }
        })
        .collect();
    let five_point_conics_nonsingular = subsets.iter().all(|s| s.nonsingular);

    Ok(ConfigReport {
        conjugation_closed,
        not_on_common_conic,
        five_point_conics_nonsingular,
        subsets,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real(x: i64, y: i64, z: i64) -> GaussianPoint2 {
        GaussianPoint2::from(&ProjPoint2::from_ints(x, y, z).unwrap())
    }

    fn g(x: (i64, i64), y: (i64, i64), z: (i64, i64)) -> GaussianPoint2 {
        GaussianPoint2::new(
            GaussRat::from_ints(x.0, x.1),
            GaussRat::from_ints(y.0, y.1),
            GaussRat::from_ints(z.0, z.1),
        )
        .unwrap()
    }

    #[test]
    fn five_real_points() {
        let pts = [
            real(1, 0, 0),
            real(0, 1, 0),
            real(0, 0, 1),
            real(1, 1, 1),
            real(1, 2, 3),
        ];
        let c = conic_through_five(&pts).unwrap();
        for p in &pts {
            assert!(Zero::is_zero(&c.eval(p)));
        }
        // through the three vertices: only mixed terms survive
        assert!(Zero::is_zero(&c.coeffs()[0]) && Zero::is_zero(&c.coeffs()[2]));
        assert!(c.is_nonsingular());
    }

    #[test]
    fn four_collinear_points_are_degenerate() {
        let pts = [
            real(1, 0, 1),
            real(2, 0, 1),
            real(3, 0, 1),
            real(4, 0, 1),
            real(0, 1, 1),
        ];
        assert_eq!(conic_through_five(&pts), Err(Error::ConicNotUnique));
    }

    #[test]
    fn three_collinear_points_give_singular_conic() {
        let pts = [
            real(1, 0, 1),
            real(2, 0, 1),
            real(3, 0, 1),
            real(0, 1, 1),
            real(0, 2, 1),
        ];
        let c = conic_through_five(&pts).unwrap();
        assert!(!c.is_nonsingular());
    }

    #[test]
    fn six_points_on_a_conic() {
        // [1:t:t²] lies on x z = y²
        let pts: Vec<_> = (-2..4).map(|t| real(1, t, t * t)).collect();
        let r = validate_six_config(&pts).unwrap();
        assert!(!r.not_on_common_conic);
        assert!(r.conjugation_closed);
        assert!(!r.is_valid());
    }

    #[test]
    fn conjugation_closure() {
        let a = g((1, 0), (0, 1), (2, 1));
        let b = g((1, 0), (1, -2), (0, 1));
        let c = g((1, 0), (3, 1), (-1, 0));
        let mut pts = vec![
            a.clone(),
            a.conj(),
            b.clone(),
            b.conj(),
            c.clone(),
            c.conj(),
        ];
        assert!(validate_six_config(&pts).unwrap().conjugation_closed);
        // conj(a) = [1 : -i : 2-i]; flip the imaginary sign of its last coordinate
        pts[1] = g((1, 0), (0, -1), (2, 1));
        assert!(!validate_six_config(&pts).unwrap().conjugation_closed);
    }

    #[test]
    fn duplicates_rejected() {
        let p = real(1, 2, 3);
        let pts = vec![
            p.clone(),
            p,
            real(0, 0, 1),
            real(0, 1, 0),
            real(1, 0, 0),
            real(1, 1, 1),
        ];
        assert_eq!(validate_six_config(&pts), Err(Error::PointsNotDistinct));
    }
}
