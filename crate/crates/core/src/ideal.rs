//! Monomial-ideal arithmetic for edge ideals: ordinary powers, symbolic
//! powers (by intersecting powers of the minimal-cover primes, with an
//! inequality-based second route for cross-checking), equality tests, and
//! the minimal generators of the symbolic Rees algebra.

use alloc::vec;
use alloc::vec::Vec;

use crate::clutter::{bits, Clutter};
use crate::cone::{hilbert_basis_with_budget, simis_cone, WorkBudget};
use crate::covers::CoverVector;
use crate::error::{Error, Result};

/// A monomial x^a, stored as its exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial { exponents }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exponents.iter().zip(&other.exponents).all(|(&a, &b)| a <= b)
    }

    pub fn total_degree(&self) -> u64 {
        self.exponents.iter().map(|&x| x as u64).sum()
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a + b)
                .collect(),
        )
    }

    fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        )
    }
}

/// A monomial ideal given by its unique minimal generating set, kept sorted.
/// The zero ideal has no generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    n: usize,
    gens: Vec<Monomial>,
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_unstable();
    gens.dedup();
    let keep: Vec<bool> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| !gens.iter().enumerate().any(|(j, h)| j != i && h.divides(g)))
        .collect();
    gens.into_iter()
        .zip(keep)
        .filter(|(_, k)| *k)
        .map(|(g, _)| g)
        .collect()
}

impl MonomialIdeal {
    /// Build from an arbitrary generating set; redundant generators are
    /// dropped so the invariant (no generator divides another) holds.
    pub fn new(n: usize, gens: Vec<Monomial>) -> Result<MonomialIdeal> {
        for g in &gens {
            if g.exponents.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: g.exponents.len() });
            }
        }
        Ok(MonomialIdeal { n, gens: minimalize(gens) })
    }

    pub fn zero(n: usize) -> MonomialIdeal {
        MonomialIdeal { n, gens: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn ambient_dimension(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.gens
    }
}

/// The edge ideal: one square-free generator per edge; the zero ideal for a
/// discrete clutter.
pub fn edge_ideal(c: &Clutter) -> MonomialIdeal {
    let n = c.vertex_count();
    let gens = c
        .edge_masks()
        .iter()
        .map(|&e| {
            let mut x = vec![0u32; n];
            for j in bits(e) {
                x[j] = 1;
            }
            Monomial::new(x)
        })
        .collect();
    MonomialIdeal { n, gens: minimalize(gens) }
}

fn product(i: &MonomialIdeal, j: &MonomialIdeal) -> MonomialIdeal {
    let mut gens = Vec::with_capacity(i.gens.len() * j.gens.len());
    for g in &i.gens {
        for h in &j.gens {
            gens.push(g.times(h));
        }
    }
    MonomialIdeal { n: i.n, gens: minimalize(gens) }
}

/// Minimal generators of the ordinary power I^i.
pub fn power(ideal: &MonomialIdeal, i: u32) -> MonomialIdeal {
    assert!(i >= 1, "power exponent must be positive");
    let mut out = ideal.clone();
    for _ in 1..i {
        out = product(&out, ideal);
    }
    out
}

/// Intersection of two monomial ideals: pairwise lcms, minimalized.
pub fn intersect(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<MonomialIdeal> {
    if i.n != j.n {
        return Err(Error::DimensionMismatch { expected: i.n, got: j.n });
    }
    let mut gens = Vec::with_capacity(i.gens.len() * j.gens.len());
    for g in &i.gens {
        for h in &j.gens {
            gens.push(g.lcm(h));
        }
    }
    Ok(MonomialIdeal { n: i.n, gens: minimalize(gens) })
}

/// The b-th power of the prime generated by the given variables: all
/// monomials of total degree b in those variables.
pub fn prime_power(cover: &[usize], b: u32, n: usize) -> MonomialIdeal {
    assert!(!cover.is_empty(), "prime ideal needs at least one variable");
    let mut gens = Vec::new();
    let mut x = vec![0u32; n];
    fn place(cover: &[usize], k: usize, left: u32, x: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if k + 1 == cover.len() {
            x[cover[k]] = left;
            out.push(Monomial::new(x.clone()));
            x[cover[k]] = 0;
            return;
        }
        for v in 0..=left {
            x[cover[k]] = v;
            place(cover, k + 1, left - v, x, out);
        }
        x[cover[k]] = 0;
    }
    place(cover, 0, b, &mut x, &mut gens);
    MonomialIdeal { n, gens: minimalize(gens) }
}

/// The b-th symbolic power of the edge ideal, as the intersection of the
/// b-th powers of the minimal-cover primes.
pub fn symbolic_power(c: &Clutter, b: u32) -> MonomialIdeal {
    assert!(b >= 1, "symbolic power exponent must be positive");
    assert!(!c.is_discrete(), "symbolic powers need at least one edge");
    let n = c.vertex_count();
    let mut out: Option<MonomialIdeal> = None;
    for &m in c.blocker().edge_masks() {
        let cover: Vec<usize> = bits(m).collect();
        let pk = prime_power(&cover, b, n);
        out = Some(match out {
            None => pk,
            Some(acc) => intersect(&acc, &pk).expect("same ambient dimension"),
        });
    }
    out.expect("a clutter with an edge has a minimal cover")
}

/// Second route to the symbolic power: minimal monomials x^a whose support
/// weight on every minimal cover is at least b. Used to cross-check
/// [`symbolic_power`].
pub fn symbolic_power_by_bounds(c: &Clutter, b: u32) -> MonomialIdeal {
    assert!(b >= 1 && !c.is_discrete());
    let n = c.vertex_count();
    let covers = c.blocker().edge_masks().to_vec();
    // a minimal qualifying monomial has every exponent ≤ b
    let mut gens = Vec::new();
    let mut a = vec![0u32; n];
    loop {
        let ok = covers
            .iter()
            .all(|&m| bits(m).map(|j| a[j] as u64).sum::<u64>() >= b as u64);
        if ok {
            gens.push(Monomial::new(a.clone()));
        }
        let mut k = 0;
        while k < n {
            if a[k] < b {
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
    MonomialIdeal { n, gens: minimalize(gens) }
}

/// Equality as ideals: identical minimal generating sets.
pub fn ideals_equal(i: &MonomialIdeal, j: &MonomialIdeal) -> Result<bool> {
    if i.n != j.n {
        return Err(Error::DimensionMismatch { expected: i.n, got: j.n });
    }
    Ok(i.gens == j.gens)
}

/// A minimal algebra generator x^a t^b of the symbolic Rees algebra.
pub type ReesGenerator = CoverVector;

/// All minimal algebra generators of the symbolic Rees algebra with
/// t-degree at most `b_max`: the Hilbert basis elements filtered by b.
pub fn symbolic_rees_generators(c: &Clutter, b_max: u64) -> Result<Vec<ReesGenerator>> {
    let hb = hilbert_basis_with_budget(&simis_cone(c), &WorkBudget::default())?;
    Ok(hb.elements.into_iter().filter(|e| e.b <= b_max).collect())
}

/// Exact max-flow-min-cut test: ordinary and symbolic powers of the edge
/// ideal agree for every exponent iff every Hilbert basis element with
/// positive t-degree is an edge, i.e. has b = 1.
pub fn mfmc_exact(c: &Clutter, budget: &WorkBudget) -> Result<bool> {
    let hb = hilbert_basis_with_budget(&simis_cone(c), budget)?;
    Ok(hb.elements.iter().all(|e| e.b <= 1))
}
