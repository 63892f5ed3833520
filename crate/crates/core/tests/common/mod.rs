//! Seeded generators and independent oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num::{BigInt, BigRational, One, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use realmodels::arith::Poly;
use realmodels::models::{Base, BlowUpModel, Center, CenterKind, SurfaceType};
use realmodels::projective::{GaussRat, GaussianPoint2, ProjPoint2};
use realmodels::torus::{ProjPoint1, TorusPoint};

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

/// `n/d` with `|n| <= h`, `1 <= d <= h`.
pub fn rational(rng: &mut ChaCha8Rng, h: i64) -> BigRational {
    BigRational::new(rng.gen_range(-h..=h).into(), rng.gen_range(1..=h).into())
}

pub fn positive_rational(rng: &mut ChaCha8Rng, h: i64) -> BigRational {
    BigRational::new(rng.gen_range(1..=h).into(), rng.gen_range(1..=h).into())
}

pub fn distinct_rationals(rng: &mut ChaCha8Rng, m: usize, h: i64) -> Vec<BigRational> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(m);
    while out.len() < m {
        let x = rational(rng, h);
        if seen.insert(x.clone()) {
            out.push(x);
        }
    }
    out
}

/// Coordinate of `P¹`, infinite with probability `1/8`.
pub fn proj1(rng: &mut ChaCha8Rng, h: i64) -> ProjPoint1 {
    if rng.gen_ratio(1, 8) {
        ProjPoint1::infinity()
    } else {
        ProjPoint1::finite(&rational(rng, h))
    }
}

pub fn torus_point(rng: &mut ChaCha8Rng, h: i64) -> TorusPoint {
    let x = proj1(rng, h);
    TorusPoint::new(x, proj1(rng, h))
}

/// `n` distinct torus points. Every fourth draw reuses an earlier `x` to
/// exercise shared fibers.
pub fn distinct_torus_points(rng: &mut ChaCha8Rng, n: usize, h: i64) -> Vec<TorusPoint> {
    let mut seen = BTreeSet::new();
    let mut out: Vec<TorusPoint> = Vec::with_capacity(n);
    while out.len() < n {
        let mut p = torus_point(rng, h);
        if !out.is_empty() && rng.gen_ratio(1, 4) {
            p.x = out[rng.gen_range(0..out.len())].x.clone();
        }
        if seen.insert(p.clone()) {
            out.push(p);
        }
    }
    out
}

/// Coefficients `Σ c_i x^i` evaluated term by term with explicit powers,
/// independent of the library's Horner evaluation.
pub fn naive_eval(coeffs: &[BigRational], x: &BigRational) -> BigRational {
    coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| c * num::pow(x.clone(), i))
        .fold(BigRational::zero(), |a, b| a + b)
}

/// Product of `(x - r)` for the given roots times irreducible quadratics
/// `(x - a)² + b²` with `b != 0`; returns the polynomial and the number of
/// distinct rational roots.
pub fn factored_poly(rng: &mut ChaCha8Rng, max_degree: usize) -> (Poly, usize) {
    let mut p = Poly::one();
    let mut degree = 0;
    let mut roots = BTreeSet::new();
    while degree < max_degree {
        let room = max_degree - degree;
        if room >= 2 && rng.gen_bool(0.4) {
            let a = rational(rng, 20);
            let mut b = rational(rng, 20);
            if b.is_zero() {
                b = BigRational::one();
            }
            // x² - 2a x + a² + b²
            let quad = Poly::new(vec![&a * &a + &b * &b, -(&a + &a), BigRational::one()]);
            p = &p * &quad;
            degree += 2;
        } else {
            let r = rational(rng, 20);
            roots.insert(r.clone());
            p = &p * &Poly::linear(&r);
            degree += 1;
        }
        if rng.gen_ratio(1, 6) {
            break;
        }
    }
    let scale = positive_rational(rng, 9)
        * if rng.gen_bool(0.5) {
            -BigRational::one()
        } else {
            BigRational::one()
        };
    (p.scale(&scale), roots.len())
}

/// Random blow-up of `P²` at real points with forest length exactly `ell`.
pub fn real_forest(rng: &mut ChaCha8Rng, ell: usize, extra_roots: usize) -> BlowUpModel {
    let total = ell + extra_roots.max(1);
    let mut remaining_edges = ell;
    let mut centers: Vec<Center> = Vec::with_capacity(total);
    for i in 0..total {
        let remaining_slots = total - i;
        let must_attach = remaining_edges == remaining_slots;
        let attach =
            !centers.is_empty() && remaining_edges > 0 && (must_attach || rng.gen_bool(0.6));
        let mut c = Center::real(format!("c{i}"));
        if attach {
            c.parent = Some(centers[rng.gen_range(0..centers.len())].id.clone());
            remaining_edges -= 1;
        }
        centers.push(c);
    }
    BlowUpModel::new(Base::P2, centers).expect("generated forest is valid")
}

/// Random model on any base with real and conjugate centers.
pub fn any_model(rng: &mut ChaCha8Rng) -> BlowUpModel {
    let base = match rng.gen_range(0..4) {
        0 => Base::P2,
        1 => Base::Sphere,
        2 => Base::P1xP1,
        _ => Base::Hirzebruch(rng.gen_range(0..12)),
    };
    let n = rng.gen_range(0..7);
    let mut centers: Vec<Center> = Vec::new();
    for i in 0..n {
        let kind = if rng.gen_bool(0.6) {
            CenterKind::RealPoint
        } else {
            CenterKind::ConjugatePair
        };
        let mut c = Center {
            id: format!("p{i}"),
            kind,
            parent: None,
        };
        let eligible: Vec<&Center> = centers
            .iter()
            .filter(|p| kind == CenterKind::ConjugatePair || p.kind == CenterKind::RealPoint)
            .collect();
        if !eligible.is_empty() && rng.gen_bool(0.4) {
            c.parent = Some(eligible[rng.gen_range(0..eligible.len())].id.clone());
        }
        centers.push(c);
    }
    BlowUpModel::new(base, centers).expect("generated model is valid")
}

/// Euler characteristic and orientability of the real locus, counted
/// directly: each real blow-up removes a disc and glues in a Möbius band.
pub fn euler_oracle(model: &BlowUpModel) -> (i64, bool) {
    let (chi, orientable) = match model.base() {
        Base::Sphere => (2, true),
        Base::P1xP1 => (0, true),
        Base::P2 => (1, false),
        Base::Hirzebruch(d) => (0, d % 2 == 0),
    };
    let r = model
        .centers()
        .iter()
        .filter(|c| c.kind == CenterKind::RealPoint)
        .count() as i64;
    (chi - r, orientable && r == 0)
}

pub fn surface_euler(s: SurfaceType) -> (i64, bool) {
    match s {
        SurfaceType::OrientableGenus(g) => (2 - 2 * i64::from(g), true),
        SurfaceType::Nonorientable(k) => (2 - i64::from(k), false),
    }
}

pub fn proj2(rng: &mut ChaCha8Rng, h: i64) -> ProjPoint2 {
    loop {
        let v: Vec<BigInt> = (0..3)
            .map(|_| BigInt::from(rng.gen_range(-h..=h)))
            .collect();
        if let Ok(p) = ProjPoint2::new(v[0].clone(), v[1].clone(), v[2].clone()) {
            return p;
        }
    }
}

pub fn gauss(rng: &mut ChaCha8Rng, h: i64) -> GaussRat {
    GaussRat::new(rational(rng, h), rational(rng, h))
}

pub fn gaussian_point(rng: &mut ChaCha8Rng, h: i64) -> GaussianPoint2 {
    loop {
        if let Ok(p) = GaussianPoint2::new(gauss(rng, h), gauss(rng, h), gauss(rng, h)) {
            return p;
        }
    }
}

/// Conic value at a point from explicit monomials.
pub fn conic_value(coeffs: &[GaussRat; 6], p: &GaussianPoint2) -> GaussRat {
    let [x, y, z] = p.coords();
    let mono = [x * x, x * y, y * y, x * z, y * z, z * z];
    coeffs
        .iter()
        .zip(&mono)
        .fold(GaussRat::zero(), |acc, (c, m)| &acc + &(c * m))
}
