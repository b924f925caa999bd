//! Exact integer linear algebra on small dense matrices: fraction-free
//! determinants, adjugates, null vectors of corank-1 systems, and an
//! integer row echelon for rank tracking. Everything is checked i128;
//! overflow surfaces as an error instead of wrapping.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

pub type Mat = Vec<Vec<i128>>;

pub fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn mul(a: i128, b: i128) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::ArithmeticOverflow)
}

fn sub(a: i128, b: i128) -> Result<i128> {
    a.checked_sub(b).ok_or(Error::ArithmeticOverflow)
}

/// Bareiss fraction-free determinant.
pub fn det(mut m: Mat) -> Result<i128> {
    let n = m.len();
    if n == 0 {
        return Ok(1);
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            let Some(r) = (k + 1..n).find(|&r| m[r][k] != 0) else {
                return Ok(0);
            };
            m.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = sub(mul(m[i][j], m[k][k])?, mul(m[i][k], m[k][j])?)? / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    Ok(sign * m[n - 1][n - 1])
}

fn minor(m: &Mat, skip_row: usize, skip_col: usize) -> Mat {
    m.iter()
        .enumerate()
        .filter(|(i, _)| *i != skip_row)
        .map(|(_, row)| {
            row.iter()
                .enumerate()
                .filter(|(j, _)| *j != skip_col)
                .map(|(_, &x)| x)
                .collect()
        })
        .collect()
}

/// Adjugate: adj·m = det(m)·I.
pub fn adjugate(m: &Mat) -> Result<Mat> {
    let n = m.len();
    let mut adj = vec![vec![0i128; n]; n];
    for (i, row) in adj.iter_mut().enumerate() {
        for (j, e) in row.iter_mut().enumerate() {
            let c = det(minor(m, j, i))?;
            *e = if (i + j) % 2 == 0 { c } else { -c };
        }
    }
    Ok(adj)
}

/// Primitive normal of the hyperplane spanned by d−1 independent vectors in
/// ℤ^d (the generalized cross product, reduced by the gcd of its entries).
pub fn cross(vs: &[Vec<i128>]) -> Result<Vec<i128>> {
    let d = vs.len() + 1;
    debug_assert!(vs.iter().all(|v| v.len() == d));
    let mut normal = vec![0i128; d];
    for (j, e) in normal.iter_mut().enumerate() {
        let m: Mat = vs
            .iter()
            .map(|v| {
                v.iter()
                    .enumerate()
                    .filter(|(c, _)| *c != j)
                    .map(|(_, &x)| x)
                    .collect()
            })
            .collect();
        let c = det(m)?;
        *e = if j % 2 == 0 { c } else { -c };
    }
    let g = normal.iter().fold(0u128, |g, &x| gcd(g, x.unsigned_abs()));
    if g > 1 {
        for e in normal.iter_mut() {
            *e /= g as i128;
        }
    }
    Ok(normal)
}

/// Insert `v` into a gcd-normalized integer row echelon; returns whether the
/// rank grew (i.e. `v` was independent of the rows present).
pub fn echelon_insert(rows: &mut Vec<(usize, Vec<i128>)>, mut v: Vec<i128>) -> Result<bool> {
    for (pivot, row) in rows.iter() {
        if v[*pivot] == 0 {
            continue;
        }
        let a = row[*pivot];
        let b = v[*pivot];
        for (x, &r) in v.iter_mut().zip(row) {
            *x = sub(mul(*x, a)?, mul(r, b)?)?;
        }
        let g = v.iter().fold(0u128, |g, &x| gcd(g, x.unsigned_abs()));
        if g > 1 {
            for x in v.iter_mut() {
                *x /= g as i128;
            }
        }
    }
    match v.iter().position(|&x| x != 0) {
        Some(pivot) => {
            rows.push((pivot, v));
            Ok(true)
        }
        None => Ok(false),
    }
}
