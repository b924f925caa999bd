//! Extreme rays by double description: start from the nonnegative orthant
//! and cut with the cover halfspaces one at a time. New rays come from
//! adjacent positive/negative pairs; adjacency is the combinatorial test
//! (no third ray tight on the common tight set), valid because the cone is
//! pointed and full-dimensional throughout.

use alloc::vec;
use alloc::vec::Vec;

use super::lattice::gcd;
use super::SimisCone;
use crate::error::{Error, Result};

struct Ray {
    v: Vec<i64>,
    tight: u128,
}

fn dot(normal: &[i64], v: &[i64]) -> i128 {
    normal.iter().zip(v).map(|(&x, &y)| x as i128 * y as i128).sum()
}

/// Primitive generators of the extreme rays, in a deterministic order.
pub(super) fn extreme_rays(cone: &SimisCone) -> Result<Vec<Vec<i64>>> {
    let d = cone.dimension();
    let normals = cone.normals();
    let total = normals.len();
    if total > 128 {
        return Err(Error::InstanceTooLarge {
            what: "cone constraint count",
            limit: 128,
            got: total as u64,
        });
    }
    let tight_of = |v: &[i64], upto: usize| -> u128 {
        let mut t = 0u128;
        for (k, nrm) in normals[..upto].iter().enumerate() {
            if dot(nrm, v) == 0 {
                t |= 1 << k;
            }
        }
        t
    };
    let mut rays: Vec<Ray> = (0..d)
        .map(|j| {
            let mut v = vec![0i64; d];
            v[j] = 1;
            let tight = tight_of(&v, d);
            Ray { v, tight }
        })
        .collect();
    for (ci, normal) in normals.iter().enumerate().take(total).skip(d) {
        let vals: Vec<i128> = rays.iter().map(|r| dot(normal, &r.v)).collect();
        if vals.iter().all(|&x| x >= 0) {
            for (r, &val) in rays.iter_mut().zip(&vals) {
                if val == 0 {
                    r.tight |= 1 << ci;
                }
            }
            continue;
        }
        let mut fresh: Vec<Vec<i64>> = Vec::new();
        for (p, &vp) in vals.iter().enumerate() {
            if vp <= 0 {
                continue;
            }
            for (q, &vq) in vals.iter().enumerate() {
                if vq >= 0 {
                    continue;
                }
                let common = rays[p].tight & rays[q].tight;
                if (common.count_ones() as usize) + 2 < d {
                    continue;
                }
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(r, ray)| r != p && r != q && ray.tight & common == common);
                if blocked {
                    continue;
                }
                // w = vp·q − vq·p vanishes on constraint ci
                let mut w = vec![0i128; d];
                for (j, wj) in w.iter_mut().enumerate() {
                    *wj = vp
                        .checked_mul(rays[q].v[j] as i128)
                        .and_then(|t| t.checked_sub(vq.checked_mul(rays[p].v[j] as i128)?))
                        .ok_or(Error::ArithmeticOverflow)?;
                }
                let g = w.iter().fold(0u128, |g, &x| gcd(g, x.unsigned_abs()));
                debug_assert!(g != 0);
                let mut prim = vec![0i64; d];
                for j in 0..d {
                    let x = w[j] / g as i128;
                    prim[j] = i64::try_from(x).map_err(|_| Error::ArithmeticOverflow)?;
                }
                fresh.push(prim);
            }
        }
        let mut next: Vec<Ray> = Vec::new();
        for (i, r) in rays.drain(..).enumerate() {
            if vals[i] > 0 {
                next.push(r);
            } else if vals[i] == 0 {
                next.push(Ray { tight: r.tight | 1 << ci, v: r.v });
            }
        }
        for v in fresh {
            let tight = tight_of(&v, ci + 1);
            next.push(Ray { v, tight });
        }
        rays = next;
    }
    Ok(rays.into_iter().map(|r| r.v).collect())
}
