//! n-transitivity of algebraic diffeomorphisms on the real torus.
//!
//! Given distinct sources `P_1..P_n` and distinct targets `Q_1..Q_n`, the
//! constructed map sends each `P_i` to `Q_i`. Both tuples are first moved
//! onto the grid `(i, i)` by the same pipeline:
//!
//! 1. a Möbius pair puts every point in the open positive quadrant;
//! 2. a y-scaling makes all second coordinates distinct;
//! 3. an x-scaling, interpolated over those second coordinates, sends
//!    each first coordinate to `i`;
//! 4. a y-scaling, interpolated over the nodes `1..n`, sends each second
//!    coordinate to `i`.
//!
//! The final map is `pipeline(targets)⁻¹ ∘ pipeline(sources)`.

use num::{BigRational, One, Signed, Zero};

use super::map::TorusMap;
use super::moves::{identity2, mul2, Axis, FiberScale, Matrix2, MoebiusPair};
use super::point::{ensure_distinct, ProjPoint1, TorusPoint};
use crate::arith::int;
use crate::error::{Error, Result};
use crate::interpolation::positive_ratio_interpolate;

/// Möbius transformation of one factor that sends all `coords` to finite
/// values `>= 1`.
fn factor_normalizer(coords: &[&ProjPoint1]) -> Matrix2 {
    let has_infinity = coords.iter().any(|c| c.is_infinite());
    let base = if has_infinity {
        // first integer not among the coordinates goes to infinity:
        // [a:b] ↦ [b : a - t·b]
        let t = (0i64..)
            .find(|&t| !coords.contains(&&ProjPoint1::from_int(t)))
            .expect("finitely many coordinates");
        [
            [BigRational::zero(), BigRational::one()],
            [BigRational::one(), -int(t)],
        ]
    } else {
        identity2()
    };
    let min = coords
        .iter()
        .map(|c| {
            super::moves::act2(&base, c)
                .and_then(|p| p.affine())
                .expect("only the chosen free point goes to infinity")
        })
        .min()
        .expect("at least one coordinate");
    if min >= BigRational::one() {
        return base;
    }
    let shift = BigRational::one() - min;
    mul2(
        &[
            [BigRational::one(), shift],
            [BigRational::zero(), BigRational::one()],
        ],
        &base,
    )
}

/// Moves all points into the quadrant where both affine coordinates are `>= 1`.
pub fn quadrant_normalize(points: &[TorusPoint]) -> Result<(MoebiusPair, Vec<TorusPoint>)> {
    if points.is_empty() {
        return Err(Error::NoPoints);
    }
    ensure_distinct(points)?;
    let xs: Vec<_> = points.iter().map(|p| &p.x).collect();
    let ys: Vec<_> = points.iter().map(|p| &p.y).collect();
    let mu = MoebiusPair::new(factor_normalizer(&xs), factor_normalizer(&ys))?;
    let images = points
        .iter()
        .map(|p| mu.apply(p).expect("invertible Möbius action"))
        .collect();
    Ok((mu, images))
}

fn affine_coords(points: &[TorusPoint]) -> Result<Vec<(BigRational, BigRational)>> {
    points
        .iter()
        .map(|p| match (p.x.affine(), p.y.affine()) {
            (Some(x), Some(y)) if x.is_positive() && y.is_positive() => Ok((x, y)),
            _ => Err(Error::NotPositiveQuadrant),
        })
        .collect()
}

/// A y-scaling after which the points have pairwise distinct second coordinates.
///
/// Points are grouped by first coordinate `x̂_1 < … < x̂_r`, and the group
/// `j` is scaled by `M^j` with `M = 1 + max y_i/y_k`. Within a group the
/// order of the y-values is kept; across groups the factor gap `M`
/// exceeds any ratio of y-values, so no collision is possible.
pub fn separate_y(points: &[TorusPoint]) -> Result<FiberScale> {
    if points.is_empty() {
        return Err(Error::NoPoints);
    }
    ensure_distinct(points)?;
    let coords = affine_coords(points)?;
    let ys: Vec<_> = coords.iter().map(|(_, y)| y).collect();
    let y_max = ys.iter().max().expect("nonempty");
    let y_min = ys.iter().min().expect("nonempty");
    let m = BigRational::one() + *y_max / *y_min;

    let mut xs: Vec<BigRational> = coords.iter().map(|(x, _)| x.clone()).collect();
    xs.sort();
    xs.dedup();
    let mut factors = Vec::with_capacity(xs.len());
    let mut c = BigRational::one();
    for _ in &xs {
        c *= &m;
        factors.push(c.clone());
    }
    let ones = vec![BigRational::one(); xs.len()];
    let ratio = positive_ratio_interpolate(&xs, &factors, &ones)?;
    FiberScale::new(Axis::ScaleY, ratio.p, ratio.q)
}

/// Map sending `points[i]` to the grid point `(i+1, i+1)`.
pub fn grid_pipeline(points: &[TorusPoint]) -> Result<TorusMap> {
    let (mu, pts) = quadrant_normalize(points)?;
    let mut map = TorusMap::identity();
    if !mu.is_identity() {
        map.push(mu);
    }

    let sep = separate_y(&pts)?;
    let pts: Vec<_> = pts
        .iter()
        .map(|p| sep.apply(p).expect("certified move"))
        .collect();
    map.push(sep);

    // x_i ↦ i, interpolated over the now distinct y_i
    let coords = affine_coords(&pts)?;
    let nodes: Vec<_> = coords.iter().map(|(_, y)| y.clone()).collect();
    let targets: Vec<_> = (1..=pts.len() as i64).map(int).collect();
    let dens: Vec<_> = coords.iter().map(|(x, _)| x.clone()).collect();
    let r = positive_ratio_interpolate(&nodes, &targets, &dens)?;
    let sx = FiberScale::new(Axis::ScaleX, r.p, r.q)?;
    let pts: Vec<_> = pts
        .iter()
        .map(|p| sx.apply(p).expect("certified move"))
        .collect();
    map.push(sx);

    // y_i ↦ i over the nodes x = i
    let coords = affine_coords(&pts)?;
    let dens: Vec<_> = coords.iter().map(|(_, y)| y.clone()).collect();
    let r = positive_ratio_interpolate(&targets, &targets, &dens)?;
    map.push(FiberScale::new(Axis::ScaleY, r.p, r.q)?);
    Ok(map)
}

/// Certified map with `f(sources[i]) = targets[i]` for every `i`.
pub fn build_transitivity_map(sources: &[TorusPoint], targets: &[TorusPoint]) -> Result<TorusMap> {
    if sources.len() != targets.len() {
        return Err(Error::LengthMismatch(format!(
            "{} sources but {} targets",
            sources.len(),
            targets.len()
        )));
    }
    if sources.is_empty() {
        return Err(Error::NoPoints);
    }
    let forward = grid_pipeline(sources)?;
    let backward = grid_pipeline(targets)?.invert();
    let map = forward.then(&backward);

    for (i, (s, t)) in sources.iter().zip(targets).enumerate() {
        if &map.apply(s) != t {
            return Err(Error::CertificationFailed {
                index: i,
                reason: format!("source {s} does not reach target {t}"),
            });
        }
    }
    Ok(map)
}
