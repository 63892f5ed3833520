//! Exact Gaussian elimination over a field.

use num::{BigRational, One, Zero};

/// Minimal field interface used by the elimination routines.
pub trait Field: Clone + PartialEq + Zero + One {
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn div_ref(&self, rhs: &Self) -> Self;
}

impl Field for BigRational {
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn div_ref(&self, rhs: &Self) -> Self {
        self / rhs
    }
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref<T: Field>(m: &mut [Vec<T>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = T::one().div_ref(&m[r][c]);
        for x in m[r].iter_mut() {
            *x = x.mul_ref(&inv);
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot = m[r].clone();
                for (x, p) in m[i].iter_mut().zip(&pivot) {
                    *x = x.sub_ref(&f.mul_ref(p));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank<T: Field>(m: &[Vec<T>]) -> usize {
    rref(&mut m.to_vec()).len()
}

/// Basis of `{ v : m·v = 0 }`, one vector per free column.
pub fn nullspace<T: Field>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    let cols = m.first().map_or(0, Vec::len);
    let mut work = m.to_vec();
    let pivots = rref(&mut work);
    (0..cols)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![T::zero(); cols];
            v[free] = T::one();
            for (row, &pc) in pivots.iter().enumerate() {
                v[pc] = T::zero().sub_ref(&work[row][free]);
            }
            v
        })
        .collect()
}

/// Determinant by elimination.
pub fn det<T: Field>(m: &[Vec<T>]) -> T {
    let n = m.len();
    let mut a = m.to_vec();
    let mut d = T::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return T::zero();
        };
        if p != c {
            a.swap(p, c);
            d = T::zero().sub_ref(&d);
        }
        d = d.mul_ref(&a[c][c]);
        for i in c + 1..n {
            if !a[i][c].is_zero() {
                let f = a[i][c].div_ref(&a[c][c]);
                let pivot = a[c].clone();
                for (x, p) in a[i].iter_mut().zip(&pivot).skip(c) {
                    *x = x.sub_ref(&f.mul_ref(p));
                }
            }
        }
    }
    d
}

/// Inverse by Gauss–Jordan, `None` if singular.
pub fn inverse<T: Field>(m: &[Vec<T>]) -> Option<Vec<Vec<T>>> {
    let n = m.len();
    let mut aug: Vec<Vec<T>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { T::one() } else { T::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn mat_vec<T: Field>(m: &[Vec<T>], v: &[T]) -> Vec<T> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(T::zero(), |acc, (a, b)| acc.add_ref(&a.mul_ref(b)))
        })
        .collect()
}

pub fn mat_mul<T: Field>(a: &[Vec<T>], b: &[Vec<T>]) -> Vec<Vec<T>> {
    let cols = b.first().map_or(0, Vec::len);
    a.iter()
        .map(|row| {
            (0..cols)
                .map(|j| {
                    row.iter().zip(b).fold(T::zero(), |acc, (x, brow)| {
                        acc.add_ref(&x.mul_ref(&brow[j]))
                    })
                })
                .collect()
        })
        .collect()
}
