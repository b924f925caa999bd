//! Hilbert basis computation. Pipeline: extreme rays (double description),
//! a placing triangulation into simplicial subcones, lattice points of each
//! half-open ray parallelepiped (via the quotient group ℤ^d / ray-lattice,
//! of order |det|), then a global reduction pass. Soundness: every basis
//! element is either a primitive ray generator or lies in some simplex's
//! half-open parallelepiped, so the candidate set always covers the basis.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::dd::extreme_rays;
use super::lattice::{adjugate, cross, det, echelon_insert, Mat};
use super::{HilbertBasis, SimisCone, WorkBudget};
use crate::clutter::bits;
use crate::covers::CoverVector;
use crate::error::{Error, Result};

/// Compute the Hilbert basis with the default [`WorkBudget`].
pub fn hilbert_basis(cone: &SimisCone) -> Result<HilbertBasis> {
    hilbert_basis_with_budget(cone, &WorkBudget::default())
}

fn dot128(a: &[i128], b: &[i128]) -> Result<i128> {
    let mut acc = 0i128;
    for (&x, &y) in a.iter().zip(b) {
        acc = x
            .checked_mul(y)
            .and_then(|p| acc.checked_add(p))
            .ok_or(Error::ArithmeticOverflow)?;
    }
    Ok(acc)
}

fn to128(r: &[i64]) -> Vec<i128> {
    r.iter().map(|&x| x as i128).collect()
}

/// Placing triangulation of the cone spanned by `rays` into full-dimensional
/// simplicial subcones (index sets into `rays`). Rays are inserted in order;
/// each new ray is joined to every visible boundary facet.
fn triangulate(rays: &[Vec<i64>]) -> Result<Vec<Vec<usize>>> {
    let d = rays[0].len();
    let mut ech = Vec::new();
    let mut init: Vec<usize> = Vec::new();
    let mut rest: Vec<usize> = Vec::new();
    for (i, r) in rays.iter().enumerate() {
        if init.len() < d && echelon_insert(&mut ech, to128(r))? {
            init.push(i);
        } else {
            rest.push(i);
        }
    }
    assert_eq!(init.len(), d, "cone must be full-dimensional");
    let mut simplices: Vec<Vec<usize>> = vec![init];
    let mut normal_cache: BTreeMap<Vec<usize>, Vec<i128>> = BTreeMap::new();
    for &ri in &rest {
        let r128 = to128(&rays[ri]);
        // facets seen once are on the boundary of the cone built so far
        let mut facets: BTreeMap<Vec<usize>, (u32, usize)> = BTreeMap::new();
        for (si, s) in simplices.iter().enumerate() {
            for skip in 0..d {
                let mut f = s.clone();
                f.remove(skip);
                facets.entry(f).or_insert((0, si)).0 += 1;
            }
        }
        let mut fresh: Vec<Vec<usize>> = Vec::new();
        for (f, &(count, si)) in &facets {
            if count != 1 {
                continue;
            }
            let nrm = if let Some(x) = normal_cache.get(f) {
                x.clone()
            } else {
                let vs: Vec<Vec<i128>> = f.iter().map(|&i| to128(&rays[i])).collect();
                let x = cross(&vs)?;
                normal_cache.insert(f.clone(), x.clone());
                x
            };
            let other = *simplices[si].iter().find(|i| !f.contains(i)).unwrap();
            let inner = dot128(&nrm, &to128(&rays[other]))?;
            debug_assert!(inner != 0);
            let val = dot128(&nrm, &r128)?;
            // visible: strictly on the side away from the existing simplex
            if val != 0 && (inner > 0) != (val > 0) {
                let mut s = f.clone();
                s.push(ri);
                s.sort_unstable();
                fresh.push(s);
            }
        }
        simplices.extend(fresh);
    }
    Ok(simplices)
}

/// Nonzero lattice points of the half-open parallelepiped spanned by the
/// simplex rays: the nonzero classes of ℤ^d modulo the ray lattice, each
/// lifted to its representative with fractional coordinates in [0, 1).
fn par_points(
    rays: &[Vec<i64>],
    simplex: &[usize],
    nodes: &mut u64,
    budget: &WorkBudget,
) -> Result<Vec<Vec<u64>>> {
    let d = simplex.len();
    // columns are the simplex rays
    let m: Mat = (0..d)
        .map(|i| simplex.iter().map(|&s| rays[s][i] as i128).collect())
        .collect();
    let mut dt = det(m.clone())?;
    debug_assert!(dt != 0);
    let mut adj = adjugate(&m)?;
    if dt < 0 {
        dt = -dt;
        for row in adj.iter_mut() {
            for x in row.iter_mut() {
                *x = -*x;
            }
        }
    }
    *nodes = nodes.saturating_add(u64::try_from(dt).map_err(|_| Error::ArithmeticOverflow)?);
    if *nodes > budget.enumeration_nodes {
        return Err(Error::WorkBudgetExceeded {
            steps: *nodes,
            detail: format!(
                "total parallelepiped volume exceeded {} lattice points",
                budget.enumeration_nodes
            ),
        });
    }
    if dt == 1 {
        return Ok(Vec::new());
    }
    // the group ℤ^d / ray-lattice embeds in (ℤ/det)^d via the adjugate;
    // close the adjugate columns under addition to list all residues
    let gens: Vec<Vec<i128>> = (0..d)
        .map(|j| (0..d).map(|i| adj[i][j].rem_euclid(dt)).collect())
        .collect();
    let zero = vec![0i128; d];
    let mut seen: BTreeSet<Vec<i128>> = BTreeSet::new();
    seen.insert(zero.clone());
    let mut stack = vec![zero];
    while let Some(y) = stack.pop() {
        for g in &gens {
            let z: Vec<i128> = y.iter().zip(g).map(|(&a, &b)| (a + b) % dt).collect();
            if seen.insert(z.clone()) {
                stack.push(z);
            }
        }
    }
    debug_assert_eq!(seen.len() as i128, dt);
    let mut out = Vec::new();
    for y in seen {
        if y.iter().all(|&x| x == 0) {
            continue;
        }
        let mut p = vec![0u64; d];
        for (i, row) in m.iter().enumerate() {
            let s = dot128(row, &y)?;
            debug_assert_eq!(s % dt, 0);
            p[i] = u64::try_from(s / dt).map_err(|_| Error::ArithmeticOverflow)?;
        }
        out.push(p);
    }
    Ok(out)
}

struct Candidate {
    deg: u64,
    p: Vec<u64>,
    dots: Vec<u64>,
}

/// Compute the Hilbert basis with an explicit budget. The result is exact
/// and canonical (lexicographic by (b, a)); the budget only controls when
/// to give up loudly.
pub fn hilbert_basis_with_budget(cone: &SimisCone, budget: &WorkBudget) -> Result<HilbertBasis> {
    let n = cone.n;
    if cone.is_orthant() {
        // full orthant: the n+1 unit vectors
        let mut elements = Vec::with_capacity(n + 1);
        for i in 0..n {
            let mut a = vec![0u32; n];
            a[i] = 1;
            elements.push(CoverVector::new(a, 0));
        }
        elements.push(CoverVector::new(vec![0u32; n], 1));
        elements.sort_by(|p, q| p.b.cmp(&q.b).then_with(|| p.a.cmp(&q.a)));
        return Ok(HilbertBasis { elements });
    }
    let rays = extreme_rays(cone)?;
    let mut cand: BTreeSet<Vec<u64>> = rays
        .iter()
        .map(|r| r.iter().map(|&x| x as u64).collect())
        .collect();
    let mut nodes: u64 = 0;
    for simplex in triangulate(&rays)? {
        cand.extend(par_points(&rays, &simplex, &mut nodes, budget)?);
    }
    if cand.len() as u64 > budget.completion_steps {
        return Err(Error::WorkBudgetExceeded {
            steps: cand.len() as u64,
            detail: format!(
                "candidate set has {} points, budget allows {}",
                cand.len(),
                budget.completion_steps
            ),
        });
    }
    let covers = &cone.covers;
    let mut cands: Vec<Candidate> = cand
        .into_iter()
        .map(|p| Candidate {
            deg: p.iter().sum(),
            dots: covers
                .iter()
                .map(|&mask| bits(mask).map(|j| p[j]).sum())
                .collect(),
            p,
        })
        .collect();
    cands.sort_by(|x, y| x.deg.cmp(&y.deg).then_with(|| x.p.cmp(&y.p)));
    let mut irr: Vec<Candidate> = Vec::new();
    'next: for c in cands {
        // c is reducible iff c - h lies in the cone for some irreducible h
        // of strictly smaller degree (irr is sorted by degree)
        for h in &irr {
            if h.deg >= c.deg {
                break;
            }
            if h.p.iter().zip(&c.p).any(|(&x, &y)| x > y) {
                continue;
            }
            let db = c.p[n] - h.p[n];
            if h.dots.iter().zip(&c.dots).all(|(&x, &y)| y - x >= db) {
                continue 'next;
            }
        }
        irr.push(c);
    }
    let mut elements: Vec<CoverVector> = Vec::with_capacity(irr.len());
    for c in irr {
        let a: Vec<u32> = c.p[..n]
            .iter()
            .map(|&x| u32::try_from(x).map_err(|_| Error::ArithmeticOverflow))
            .collect::<Result<_>>()?;
        elements.push(CoverVector::new(a, c.p[n]));
    }
    elements.sort_by(|p, q| p.b.cmp(&q.b).then_with(|| p.a.cmp(&q.a)));
    Ok(HilbertBasis { elements })
}
