//! Interpolation by polynomials that are strictly positive on the real line.
//!
//! For distinct nodes `x_1..x_m` and positive targets `y_1..y_m` the base
//! interpolant is a sum of squared Lagrange basis polynomials weighted by the
//! targets:
//!
//! ```text
//! base(ζ) = Σ_j y_j · Π_{k≠j} (ζ - x_k)² / (x_j - x_k)²
//! ```
//!
//! Every term is a nonnegative square times a positive weight and at any
//! real point at least one term is strictly positive, so `base` has no real
//! zeros. Its degree is at most `2m - 2`; adding `W(ζ)²` with
//! `W = Π (ζ - x_k)` lifts the degree to exactly `2m`, makes the result
//! monic, and leaves the node values untouched.

use num::{BigRational, One, Signed};
use serde::Serialize;

use crate::arith::{count_all_real_roots, Poly};
use crate::error::{Error, Result};

/// A positive interpolant together with its root-count certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PositiveInterpolant {
    pub poly: Poly,
    #[serde(serialize_with = "ser_rats")]
    pub nodes: Vec<BigRational>,
    #[serde(serialize_with = "ser_rats")]
    pub values: Vec<BigRational>,
    /// Sturm count of real roots over the whole line; always zero.
    pub real_roots: usize,
}

/// Two positive interpolants of equal degree whose quotient hits `y_i / z_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PositiveRatio {
    pub p: Poly,
    pub q: Poly,
    #[serde(serialize_with = "ser_rats")]
    pub nodes: Vec<BigRational>,
    #[serde(serialize_with = "ser_rats")]
    pub num_values: Vec<BigRational>,
    #[serde(serialize_with = "ser_rats")]
    pub den_values: Vec<BigRational>,
}

fn ser_rats<S: serde::Serializer>(v: &[BigRational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

fn check_nodes(nodes: &[BigRational]) -> Result<()> {
    if nodes.is_empty() {
        return Err(Error::NoNodes);
    }
    let mut sorted: Vec<_> = nodes.iter().collect();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::NodesNotDistinct);
    }
    Ok(())
}

/// Sum of weighted squared Lagrange basis polynomials, without the degree pad.
pub fn squared_lagrange_sum(nodes: &[BigRational], values: &[BigRational]) -> Poly {
    let mut base = Poly::zero();
    for (j, (xj, yj)) in nodes.iter().zip(values).enumerate() {
        let mut term = Poly::constant(yj.clone());
        for (k, xk) in nodes.iter().enumerate() {
            if k == j {
                continue;
            }
            let lin = Poly::linear(xk);
            let denom = (xj - xk) * (xj - xk);
            term = (&term * &(&lin * &lin)).scale(&denom.recip());
        }
        base = &base + &term;
    }
    base
}

pub fn positive_interpolate(
    nodes: &[BigRational],
    values: &[BigRational],
) -> Result<PositiveInterpolant> {
    if nodes.len() != values.len() {
        return Err(Error::LengthMismatch(format!(
            "{} nodes but {} values",
            nodes.len(),
            values.len()
        )));
    }
    check_nodes(nodes)?;
    if values.iter().any(|v| !v.is_positive()) {
        return Err(Error::NonPositiveValue);
    }

    let w = Poly::from_roots(nodes);
    let poly = &squared_lagrange_sum(nodes, values) + &(&w * &w);
    let real_roots = count_all_real_roots(&poly)?;

    debug_assert_eq!(poly.degree(), Some(2 * nodes.len()));
    debug_assert_eq!(poly.leading_coeff(), Some(&BigRational::one()));
    debug_assert_eq!(real_roots, 0);

    Ok(PositiveInterpolant {
        poly,
        nodes: nodes.to_vec(),
        values: values.to_vec(),
        real_roots,
    })
}

pub fn positive_ratio_interpolate(
    nodes: &[BigRational],
    num_values: &[BigRational],
    den_values: &[BigRational],
) -> Result<PositiveRatio> {
    if num_values.len() != den_values.len() {
        return Err(Error::LengthMismatch(format!(
            "{} numerator values but {} denominator values",
            num_values.len(),
            den_values.len()
        )));
    }
    let p = positive_interpolate(nodes, num_values)?.poly;
    let q = positive_interpolate(nodes, den_values)?.poly;
    Ok(PositiveRatio {
        p,
        q,
        nodes: nodes.to_vec(),
        num_values: num_values.to_vec(),
        den_values: den_values.to_vec(),
    })
}
