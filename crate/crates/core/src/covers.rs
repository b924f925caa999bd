//! The b-cover calculus: membership, cover values, and a brute-force
//! indecomposability oracle based on exhaustive split search. This module is
//! deliberately independent of the cone module so the two can cross-check
//! each other.

use alloc::vec;
use alloc::vec::Vec;

use crate::clutter::{bits, Clutter};
use crate::error::{Error, Result};

/// A candidate b-cover: a weight vector `a` with a degree `b`. The pair is a
/// b-cover of `C` when every minimal vertex cover has total `a`-weight ≥ b.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CoverVector {
    pub a: Vec<u32>,
    pub b: u64,
}

impl CoverVector {
    pub fn new(a: Vec<u32>, b: u64) -> Self {
        CoverVector { a, b }
    }

    pub fn is_zero(&self) -> bool {
        self.b == 0 && self.a.iter().all(|&x| x == 0)
    }
}

fn weight(cover_mask: u64, a: &[u32]) -> u64 {
    bits(cover_mask).map(|i| a[i] as u64).sum()
}

/// Minimum `a`-weight of a minimal vertex cover, or 0 when the clutter is
/// discrete (no covers). Equals the covering number of the parallelization
/// `C^a`, which the test suite asserts directly.
pub fn cover_value(c: &Clutter, a: &[u32]) -> Result<u64> {
    if a.len() != c.vertex_count() {
        return Err(Error::DimensionMismatch { expected: c.vertex_count(), got: a.len() });
    }
    Ok(c.blocker()
        .edge_masks()
        .iter()
        .map(|&m| weight(m, a))
        .min()
        .unwrap_or(0))
}

/// Is `cv` a b-cover of `c`? For a discrete clutter there are no covers, so
/// every pair qualifies vacuously.
pub fn is_b_cover(c: &Clutter, cv: &CoverVector) -> Result<bool> {
    if cv.a.len() != c.vertex_count() {
        return Err(Error::DimensionMismatch { expected: c.vertex_count(), got: cv.a.len() });
    }
    Ok(c.blocker().edge_masks().iter().all(|&m| weight(m, &cv.a) >= cv.b))
}

/// Largest degree for which a weight vector is a cover; `None` means
/// unbounded (discrete clutter).
fn max_degree(c: &Clutter, covers: &[u64], a: &[u32]) -> Option<u64> {
    if c.is_discrete() {
        None
    } else {
        Some(covers.iter().map(|&m| weight(m, a)).min().unwrap())
    }
}

/// Decide indecomposability of a b-cover by exhaustive split search: `cv` is
/// decomposable when `a = c + d`, `b = i + j` with both `(c,i)` and `(d,j)`
/// nonzero covers. For a fixed `c` the achievable degrees form an interval,
/// so only the maxima matter.
pub fn is_indecomposable_cover(c: &Clutter, cv: &CoverVector) -> Result<bool> {
    if !is_b_cover(c, cv)? || cv.is_zero() {
        return Err(Error::NotACover);
    }
    let covers: Vec<u64> = c.blocker().edge_masks().to_vec();
    let n = cv.a.len();
    let mut part = vec![0u32; n];
    loop {
        // part ranges over all vectors 0 ≤ part ≤ a (odometer)
        let rest: Vec<u32> = cv.a.iter().zip(&part).map(|(&x, &y)| x - y).collect();
        let i_max = max_degree(c, &covers, &part).unwrap_or(cv.b);
        let j_max = max_degree(c, &covers, &rest).unwrap_or(cv.b);
        let part_zero = part.iter().all(|&x| x == 0);
        let rest_zero = rest.iter().all(|&x| x == 0);
        // pick i in [lo, hi] with j = b - i; both pairs must be nonzero
        if !(rest_zero && cv.b == 0) {
            let lo: u64 = (if part_zero { 1 } else { 0 }).max(cv.b.saturating_sub(j_max));
            let hi: u64 = (if rest_zero { cv.b - 1 } else { cv.b }).min(i_max);
            if lo <= hi {
                return Ok(false);
            }
        }
        // advance odometer
        let mut k = 0;
        while k < n {
            if part[k] < cv.a[k] {
                part[k] += 1;
                break;
            }
            part[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
    }
    Ok(true)
}

/// Candidate-vector budget for [`enumerate_indecomposable_covers`].
const ENUMERATION_BUDGET: u64 = 10_000_000;

/// All indecomposable b-covers with `a ≤ box_bound` componentwise and
/// `b ≤ b_max`, ordered lexicographically by (b, a). Pure oracle: quadratic
/// in the box size, intended only for small boxes.
pub fn enumerate_indecomposable_covers(
    c: &Clutter,
    box_bound: &[u32],
    b_max: u64,
) -> Result<Vec<CoverVector>> {
    let n = c.vertex_count();
    if box_bound.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: box_bound.len() });
    }
    let mut candidates: u64 = 1;
    for &x in box_bound {
        candidates = candidates.saturating_mul(x as u64 + 1);
    }
    candidates = candidates.saturating_mul(b_max + 1);
    if candidates > ENUMERATION_BUDGET {
        return Err(Error::InstanceTooLarge {
            what: "cover enumeration box",
            limit: ENUMERATION_BUDGET,
            got: candidates,
        });
    }
    let mut out: Vec<CoverVector> = Vec::new();
    let mut a = vec![0u32; n];
    loop {
        for b in 0..=b_max {
            let cv = CoverVector::new(a.clone(), b);
            if cv.is_zero() {
                continue;
            }
            if is_b_cover(c, &cv)? && is_indecomposable_cover(c, &cv)? {
                out.push(cv);
            }
        }
        let mut k = 0;
        while k < n {
            if a[k] < box_bound[k] {
                a[k] += 1;
                break;
            }
            a[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
    }
    out.sort_by(|p, q| p.b.cmp(&q.b).then_with(|| p.a.cmp(&q.a)));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> Clutter {
        Clutter::new(5, &[vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 0]]).unwrap()
    }

    fn edge() -> Clutter {
        Clutter::new(2, &[vec![0, 1]]).unwrap()
    }

    #[test]
    fn all_ones_is_3_cover_of_c5() {
        let cv = CoverVector::new(vec![1; 5], 3);
        assert!(is_b_cover(&c5(), &cv).unwrap());
        assert!(!is_b_cover(&c5(), &CoverVector::new(vec![1; 5], 4)).unwrap());
    }

    #[test]
    fn unit_vectors_are_0_covers() {
        for c in [c5(), edge()] {
            for i in 0..c.vertex_count() {
                let mut a = vec![0; c.vertex_count()];
                a[i] = 1;
                assert!(is_b_cover(&c, &CoverVector::new(a, 0)).unwrap());
            }
        }
    }

    #[test]
    fn partial_weight_is_not_2_cover_of_edge() {
        assert!(!is_b_cover(&edge(), &CoverVector::new(vec![1, 0], 2)).unwrap());
    }

    #[test]
    fn cover_value_of_single_edge() {
        assert_eq!(cover_value(&edge(), &[3, 3]).unwrap(), 3);
        assert_eq!(cover_value(&edge(), &[3, 1]).unwrap(), 1);
    }

    #[test]
    fn cover_value_of_c5_all_ones() {
        assert_eq!(cover_value(&c5(), &[1; 5]).unwrap(), 3);
    }

    #[test]
    fn cover_value_of_zero_vector() {
        assert_eq!(cover_value(&c5(), &[0; 5]).unwrap(), 0);
        assert_eq!(cover_value(&edge(), &[0, 0]).unwrap(), 0);
    }

    #[test]
    fn cover_value_dimension_mismatch() {
        assert!(matches!(
            cover_value(&edge(), &[1]),
            Err(Error::DimensionMismatch { expected: 2, got: 1 })
        ));
    }

    #[test]
    fn c5_all_ones_3_is_indecomposable() {
        assert!(is_indecomposable_cover(&c5(), &CoverVector::new(vec![1; 5], 3)).unwrap());
    }

    #[test]
    fn edge_characteristic_vector_is_indecomposable_1_cover() {
        assert!(is_indecomposable_cover(&edge(), &CoverVector::new(vec![1, 1], 1)).unwrap());
    }

    #[test]
    fn edge_vector_with_b0_decomposes_into_units() {
        assert!(!is_indecomposable_cover(&edge(), &CoverVector::new(vec![1, 1], 0)).unwrap());
    }

    #[test]
    fn non_cover_is_rejected() {
        assert_eq!(
            is_indecomposable_cover(&edge(), &CoverVector::new(vec![1, 0], 2)),
            Err(Error::NotACover)
        );
        assert_eq!(
            is_indecomposable_cover(&edge(), &CoverVector::new(vec![0, 0], 0)),
            Err(Error::NotACover)
        );
    }

    #[test]
    fn enumerate_single_edge_unit_box() {
        let got = enumerate_indecomposable_covers(&edge(), &[1, 1], 1).unwrap();
        assert_eq!(
            got,
            vec![
                CoverVector::new(vec![0, 1], 0),
                CoverVector::new(vec![1, 0], 0),
                CoverVector::new(vec![1, 1], 1),
            ]
        );
    }

    #[test]
    fn enumerate_c5_unit_box_contains_all_ones_3() {
        let got = enumerate_indecomposable_covers(&c5(), &[1; 5], 3).unwrap();
        assert!(got.contains(&CoverVector::new(vec![1; 5], 3)));
        // degree-0 elements are exactly the unit vectors
        assert_eq!(got.iter().filter(|cv| cv.b == 0).count(), 5);
        // degree-1 elements are exactly the edges
        let deg1: Vec<_> = got.iter().filter(|cv| cv.b == 1).collect();
        assert_eq!(deg1.len(), 5);
        assert!(deg1.iter().all(|cv| cv.a.iter().sum::<u32>() == 2));
    }

    #[test]
    fn enumerate_discrete_singleton() {
        let d = Clutter::new(1, &[]).unwrap();
        let got = enumerate_indecomposable_covers(&d, &[1], 0).unwrap();
        assert_eq!(got, vec![CoverVector::new(vec![1], 0)]);
    }

    #[test]
    fn discrete_clutter_degree_element() {
        // with no covers the only indecomposable with a = 0 is (0, 1)
        let d = Clutter::new(2, &[]).unwrap();
        let got = enumerate_indecomposable_covers(&d, &[1, 1], 2).unwrap();
        assert_eq!(
            got,
            vec![
                CoverVector::new(vec![0, 1], 0),
                CoverVector::new(vec![1, 0], 0),
                CoverVector::new(vec![0, 0], 1),
            ]
        );
    }

    #[test]
    fn enumeration_budget_trips() {
        let err = enumerate_indecomposable_covers(&c5(), &[100; 5], 100).unwrap_err();
        assert!(matches!(err, Error::InstanceTooLarge { .. }));
    }

    #[test]
    fn monotonicity_and_additivity() {
        let c = c5();
        let cv = CoverVector::new(vec![1; 5], 3);
        assert!(is_b_cover(&c, &CoverVector::new(vec![2, 1, 1, 1, 1], 3)).unwrap());
        let sum = CoverVector::new(vec![2; 5], 6);
        assert!(is_b_cover(&c, &cv).unwrap() && is_b_cover(&c, &sum).unwrap());
    }

    #[test]
    fn bridge_to_parallelization() {
        // cover_value(C, a) = α₀(C^a) over a small box
        let c = c5();
        for m in 0u32..243 {
            let mut a = [0u32; 5];
            let mut t = m;
            for x in a.iter_mut() {
                *x = t % 3;
                t /= 3;
            }
            let cv = cover_value(&c, &a).unwrap();
            let alpha = if a.iter().all(|&x| x == 0) {
                0
            } else {
                c.parallelization(&a).unwrap().covering_number() as u64
            };
            assert_eq!(cv, alpha, "a = {a:?}");
        }
    }

    #[test]
    fn indecomposable_iff_parallelization_indecomposable() {
        // (a,b) indecomposable ⟺ C^a indecomposable and b = α₀(C^a)
        let c = Clutter::new(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap();
        for m in 0u32..27 {
            let mut a = [0u32; 3];
            let mut t = m;
            for x in a.iter_mut() {
                *x = t % 3;
                t /= 3;
            }
            if a.iter().all(|&x| x == 0) {
                continue;
            }
            let alpha = c.parallelization(&a).unwrap().covering_number() as u64;
            let indec = c.parallelization(&a).unwrap().is_decomposable().unwrap().is_none();
            for b in 0..=alpha {
                let got = is_indecomposable_cover(&c, &CoverVector::new(a.to_vec(), b)).unwrap();
                assert_eq!(got, indec && b == alpha, "a = {a:?}, b = {b}");
            }
        }
    }
}
