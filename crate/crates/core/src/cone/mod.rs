//! The lattice cone attached to a clutter and its Hilbert basis.
//!
//! The cone lives in ℤ^{n+1}: a point (a, b) belongs to it when a ≥ 0,
//! b ≥ 0 and ⟨a, u⟩ ≥ b for the characteristic vector u of every minimal
//! vertex cover. Its Hilbert basis is the unique minimal set of lattice
//! points generating all lattice points of the cone under addition;
//! equivalently, the lattice points that are not sums of two nonzero
//! lattice points of the cone.

mod dd;
mod hilbert;
mod lattice;

use alloc::vec;
use alloc::vec::Vec;

use crate::clutter::{bits, Clutter, VertexId};
use crate::covers::CoverVector;
use crate::error::{Error, Result};

pub use hilbert::{hilbert_basis, hilbert_basis_with_budget};

/// Halfspace description of the cone of a clutter: the n+1 coordinate
/// halfspaces plus one halfspace ⟨a, u⟩ ≥ b per minimal vertex cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimisCone {
    n: usize,
    covers: Vec<u64>,
}

/// Step bounds for the Hilbert basis computation. `completion_steps` caps
/// the candidate vectors admitted to the reduction phase;
/// `enumeration_nodes` caps the raw lattice enumeration underneath (total
/// parallelepiped volume scanned for candidates).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WorkBudget {
    pub completion_steps: u64,
    pub enumeration_nodes: u64,
}

impl Default for WorkBudget {
    fn default() -> Self {
        WorkBudget { completion_steps: 1_000_000, enumeration_nodes: 1_000_000_000 }
    }
}

/// The minimal generating set of the lattice points of a [`SimisCone`],
/// canonically ordered lexicographically by (b, a).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertBasis {
    pub elements: Vec<CoverVector>,
}

impl HilbertBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, a: &[u32], b: u64) -> bool {
        self.elements.iter().any(|cv| cv.a == a && cv.b == b)
    }
}

/// The cone of `c`, built from its blocker. A discrete clutter yields the
/// full nonnegative orthant (no cover constraints).
pub fn simis_cone(c: &Clutter) -> SimisCone {
    SimisCone { n: c.vertex_count(), covers: c.blocker().edge_masks().to_vec() }
}

impl SimisCone {
    pub fn dimension(&self) -> usize {
        self.n + 1
    }

    pub fn constraint_count(&self) -> usize {
        self.n + 1 + self.covers.len()
    }

    pub fn is_orthant(&self) -> bool {
        self.covers.is_empty()
    }

    /// All facet normals in construction order: the n+1 unit vectors, then
    /// one (u, −1) per minimal cover. No redundancy removal is attempted.
    pub fn normals(&self) -> Vec<Vec<i64>> {
        let d = self.n + 1;
        let mut out = Vec::with_capacity(d + self.covers.len());
        for j in 0..d {
            let mut v = vec![0i64; d];
            v[j] = 1;
            out.push(v);
        }
        for &m in &self.covers {
            let mut v = vec![0i64; d];
            for j in bits(m) {
                v[j] = 1;
            }
            v[self.n] = -1;
            out.push(v);
        }
        out
    }

    /// Membership of a nonnegative lattice point (a₁..aₙ, b).
    pub fn contains_point(&self, point: &[u64]) -> Result<bool> {
        if point.len() != self.n + 1 {
            return Err(Error::DimensionMismatch { expected: self.n + 1, got: point.len() });
        }
        let b = point[self.n];
        Ok(self
            .covers
            .iter()
            .all(|&m| bits(m).map(|j| point[j]).sum::<u64>() >= b))
    }
}

const BRUTEFORCE_BUDGET: u64 = 10_000_000;

/// Oracle: all lattice points of the cone inside the box `0 ≤ p ≤ bound`
/// that are not sums of two nonzero cone lattice points. Sound for every
/// basis element fitting strictly inside the box (decompositions of a box
/// point stay in the box). `bound` has length n+1, b-bound last.
pub fn hilbert_basis_bruteforce(cone: &SimisCone, bound: &[u64]) -> Result<Vec<CoverVector>> {
    let d = cone.n + 1;
    if bound.len() != d {
        return Err(Error::DimensionMismatch { expected: d, got: bound.len() });
    }
    let mut count: u64 = 1;
    for &x in bound {
        count = count.saturating_mul(x + 1);
    }
    if count > BRUTEFORCE_BUDGET {
        return Err(Error::InstanceTooLarge {
            what: "brute-force box volume",
            limit: BRUTEFORCE_BUDGET,
            got: count,
        });
    }
    let mut points: Vec<Vec<u64>> = Vec::new();
    let mut p = vec![0u64; d];
    loop {
        if p.iter().any(|&x| x > 0) && cone.contains_point(&p)? {
            points.push(p.clone());
        }
        let mut k = 0;
        while k < d {
            if p[k] < bound[k] {
                p[k] += 1;
                break;
            }
            p[k] = 0;
            k += 1;
        }
        if k == d {
            break;
        }
    }
    let inside: alloc::collections::BTreeSet<&Vec<u64>> = points.iter().collect();
    let mut out: Vec<CoverVector> = Vec::new();
    for p in &points {
        let mut reducible = false;
        'outer: for q in &points {
            if q == p {
                continue;
            }
            let mut rest = vec![0u64; d];
            for j in 0..d {
                match p[j].checked_sub(q[j]) {
                    Some(x) => rest[j] = x,
                    None => continue 'outer,
                }
            }
            if rest.iter().any(|&x| x > 0) && inside.contains(&rest) {
                reducible = true;
                break;
            }
        }
        if !reducible {
            let a: Vec<u32> = p[..cone.n].iter().map(|&x| x as u32).collect();
            out.push(CoverVector::new(a, p[cone.n]));
        }
    }
    out.sort_by(|p, q| p.b.cmp(&q.b).then_with(|| p.a.cmp(&q.a)));
    Ok(out)
}

/// All (a, α₀(Cᵃ)) with Cᵃ an indecomposable parallelization: exactly the
/// Hilbert basis read as (a-part, b-part) pairs.
pub fn indecomposable_parallelizations(
    c: &Clutter,
    budget: &WorkBudget,
) -> Result<Vec<CoverVector>> {
    Ok(hilbert_basis_with_budget(&simis_cone(c), budget)?.elements)
}

/// Vertex subsets inducing indecomposable subclutters, with their covering
/// numbers: the basis elements with 0/1 a-part, read as supports.
pub fn indecomposable_induced_subclutters(
    c: &Clutter,
    budget: &WorkBudget,
) -> Result<Vec<(Vec<VertexId>, u64)>> {
    let hb = hilbert_basis_with_budget(&simis_cone(c), budget)?;
    Ok(hb
        .elements
        .iter()
        .filter(|cv| cv.a.iter().all(|&x| x <= 1) && cv.a.contains(&1))
        .map(|cv| {
            let supp = cv
                .a
                .iter()
                .enumerate()
                .filter(|(_, &x)| x == 1)
                .map(|(i, _)| c.vertices()[i])
                .collect();
            (supp, cv.b)
        })
        .collect())
}

/// Is the whole clutter indecomposable, decided on the cone side:
/// (1,…,1, α₀) must be a basis element.
pub fn is_indecomposable_via_cone(c: &Clutter, budget: &WorkBudget) -> Result<bool> {
    let hb = hilbert_basis_with_budget(&simis_cone(c), budget)?;
    let ones = vec![1u32; c.vertex_count()];
    Ok(hb.contains(&ones, c.covering_number() as u64))
}

#[cfg(test)]
mod tests {
    use super::dd::extreme_rays;
    use super::*;

    fn edge() -> Clutter {
        Clutter::new(2, &[vec![0, 1]]).unwrap()
    }

    fn triangle() -> Clutter {
        Clutter::new(3, &[vec![0, 1], vec![1, 2], vec![0, 2]]).unwrap()
    }

    fn c5() -> Clutter {
        Clutter::new(5, &[vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 0]]).unwrap()
    }

    fn cv(a: &[u32], b: u64) -> CoverVector {
        CoverVector::new(a.to_vec(), b)
    }

    #[test]
    fn cone_of_single_edge() {
        let k = simis_cone(&edge());
        assert_eq!(k.dimension(), 3);
        let normals = k.normals();
        assert_eq!(normals.len(), 5);
        assert!(normals.contains(&vec![1, 0, -1]));
        assert!(normals.contains(&vec![0, 1, -1]));
    }

    #[test]
    fn cone_of_c5_has_eleven_normals() {
        assert_eq!(simis_cone(&c5()).normals().len(), 11);
    }

    #[test]
    fn cone_of_triangle_has_seven_normals() {
        assert_eq!(simis_cone(&triangle()).normals().len(), 7);
    }

    #[test]
    fn membership() {
        let k = simis_cone(&edge());
        assert!(k.contains_point(&[1, 1, 1]).unwrap());
        assert!(!k.contains_point(&[1, 0, 1]).unwrap());
        assert!(k.contains_point(&[5, 0, 0]).unwrap());
    }

    #[test]
    fn extreme_rays_of_single_edge() {
        let mut rays = extreme_rays(&simis_cone(&edge())).unwrap();
        rays.sort();
        assert_eq!(rays, vec![vec![0, 1, 0], vec![1, 0, 0], vec![1, 1, 1]]);
    }

    #[test]
    fn extreme_rays_of_triangle() {
        let mut rays = extreme_rays(&simis_cone(&triangle())).unwrap();
        rays.sort();
        assert_eq!(
            rays,
            vec![
                vec![0, 0, 1, 0],
                vec![0, 1, 0, 0],
                vec![0, 1, 1, 1],
                vec![1, 0, 0, 0],
                vec![1, 0, 1, 1],
                vec![1, 1, 0, 1],
                vec![1, 1, 1, 2],
            ]
        );
    }

    #[test]
    fn rays_are_cone_points() {
        for c in [edge(), triangle(), c5()] {
            let k = simis_cone(&c);
            let rays = extreme_rays(&k).unwrap();
            for r in &rays {
                let p: Vec<u64> = r.iter().map(|&x| x as u64).collect();
                assert!(k.contains_point(&p).unwrap());
            }
        }
    }

    #[test]
    fn basis_of_single_edge() {
        let hb = hilbert_basis(&simis_cone(&edge())).unwrap();
        assert_eq!(hb.elements, vec![cv(&[0, 1], 0), cv(&[1, 0], 0), cv(&[1, 1], 1)]);
    }

    #[test]
    fn basis_of_c5() {
        let hb = hilbert_basis(&simis_cone(&c5())).unwrap();
        assert_eq!(hb.len(), 11);
        assert_eq!(hb.elements.iter().filter(|e| e.b == 0).count(), 5);
        let deg1: Vec<_> = hb.elements.iter().filter(|e| e.b == 1).collect();
        assert_eq!(deg1.len(), 5);
        assert!(deg1.iter().all(|e| e.a.iter().sum::<u32>() == 2));
        assert!(hb.contains(&[1, 1, 1, 1, 1], 3));
    }

    #[test]
    fn basis_of_orthant() {
        let d = Clutter::new(2, &[]).unwrap();
        let hb = hilbert_basis(&simis_cone(&d)).unwrap();
        assert_eq!(hb.elements, vec![cv(&[0, 1], 0), cv(&[1, 0], 0), cv(&[0, 0], 1)]);
    }

    #[test]
    fn basis_with_singleton_edge() {
        let c = Clutter::new(2, &[vec![0]]).unwrap();
        let hb = hilbert_basis(&simis_cone(&c)).unwrap();
        assert_eq!(hb.elements, vec![cv(&[0, 1], 0), cv(&[1, 0], 0), cv(&[1, 0], 1)]);
    }

    #[test]
    fn bruteforce_matches_on_small_clutters() {
        for c in [edge(), triangle(), c5()] {
            let k = simis_cone(&c);
            let hb = hilbert_basis(&k).unwrap();
            let n = c.vertex_count();
            let mut bound = vec![3u64; n];
            bound.push(2 * n as u64);
            let brute = hilbert_basis_bruteforce(&k, &bound).unwrap();
            let inside: Vec<_> = hb
                .elements
                .iter()
                .filter(|e| {
                    e.a.iter().zip(&bound).all(|(&x, &u)| (x as u64) < u) && e.b < bound[n]
                })
                .cloned()
                .collect();
            let brute_inside: Vec<_> = brute
                .iter()
                .filter(|e| {
                    e.a.iter().zip(&bound).all(|(&x, &u)| (x as u64) < u) && e.b < bound[n]
                })
                .cloned()
                .collect();
            assert_eq!(inside, brute_inside);
        }
    }

    #[test]
    fn generation_inside_a_box() {
        // every cone lattice point in a box is a sum of basis elements
        let c = triangle();
        let k = simis_cone(&c);
        let hb = hilbert_basis(&k).unwrap();
        let mut p = [0u64; 4];
        loop {
            if k.contains_point(&p).unwrap() {
                assert!(generated(&hb.elements, &p), "not generated: {p:?}");
            }
            let mut i = 0;
            while i < 4 {
                if p[i] < 3 {
                    p[i] += 1;
                    break;
                }
                p[i] = 0;
                i += 1;
            }
            if i == 4 {
                break;
            }
        }
    }

    #[allow(clippy::needless_range_loop)]
    fn generated(els: &[CoverVector], p: &[u64; 4]) -> bool {
        if p.iter().all(|&x| x == 0) {
            return true;
        }
        for e in els {
            let mut rest = *p;
            let mut ok = true;
            for j in 0..3 {
                match rest[j].checked_sub(e.a[j] as u64) {
                    Some(x) => rest[j] = x,
                    None => {
                        ok = false;
                        break;
                    }
                }
            }
            if !ok || rest[3] < e.b {
                continue;
            }
            rest[3] -= e.b;
            if generated(els, &rest) {
                return true;
            }
        }
        false
    }

    #[test]
    fn minimality_of_triangle_basis() {
        // dropping any element breaks generation of that element itself
        let hb = hilbert_basis(&simis_cone(&triangle())).unwrap();
        for skip in 0..hb.len() {
            let rest: Vec<CoverVector> = hb
                .elements
                .iter()
                .enumerate()
                .filter(|(i, _)| *i != skip)
                .map(|(_, e)| e.clone())
                .collect();
            let e = &hb.elements[skip];
            let p = [e.a[0] as u64, e.a[1] as u64, e.a[2] as u64, e.b];
            assert!(!generated(&rest, &p));
        }
    }

    #[test]
    fn budget_trips_loudly() {
        let tiny = WorkBudget { completion_steps: 2, enumeration_nodes: u64::MAX };
        let err = hilbert_basis_with_budget(&simis_cone(&c5()), &tiny).unwrap_err();
        assert!(matches!(err, Error::WorkBudgetExceeded { .. }));
    }

    #[test]
    fn parallelization_wrapper_on_edge() {
        let got = indecomposable_parallelizations(&edge(), &WorkBudget::default()).unwrap();
        assert_eq!(got.len(), 3);
    }

    #[test]
    fn induced_subclutter_wrapper_on_edge() {
        let got = indecomposable_induced_subclutters(&edge(), &WorkBudget::default()).unwrap();
        assert_eq!(got.len(), 3);
        let sizes: Vec<usize> = got.iter().map(|(s, _)| s.len()).collect();
        assert_eq!(sizes.iter().filter(|&&s| s == 1).count(), 2);
        assert_eq!(sizes.iter().filter(|&&s| s == 2).count(), 1);
    }

    #[test]
    fn cone_route_agrees_with_partition_search() {
        let budget = WorkBudget::default();
        for c in [edge(), triangle(), c5()] {
            let via_cone = is_indecomposable_via_cone(&c, &budget).unwrap();
            let via_partition = c.is_decomposable().unwrap().is_none();
            assert_eq!(via_cone, via_partition);
        }
        let split = Clutter::new(4, &[vec![0, 1], vec![2, 3]]).unwrap();
        assert!(!is_indecomposable_via_cone(&split, &WorkBudget::default()).unwrap());
    }

    #[test]
    fn basis_agrees_with_cover_oracle_on_triangle() {
        use crate::covers::enumerate_indecomposable_covers;
        let hb = hilbert_basis(&simis_cone(&triangle())).unwrap();
        let oracle = enumerate_indecomposable_covers(&triangle(), &[3, 3, 3], 6).unwrap();
        let from_basis: Vec<CoverVector> = hb
            .elements
            .iter()
            .filter(|e| e.a.iter().all(|&x| x <= 3) && e.b <= 6)
            .cloned()
            .collect();
        assert_eq!(from_basis, oracle);
    }
}
