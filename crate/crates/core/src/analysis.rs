//! Cross-module consistency checks and graph classification: odd holes and
//! antiholes, cliques, perfection via the Berge characterization, the
//! indecomposability/Hilbert-basis consistency check, and report assembly.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::clutter::{bits, Clutter, VertexId};
use crate::cone::{hilbert_basis_with_budget, simis_cone, HilbertBasis, WorkBudget};
use crate::covers::CoverVector;
use crate::error::{Error, Result};

/// Subset searches scan all 2^n vertex subsets; beyond this they refuse.
pub const MAX_SUBSET_SEARCH_VERTICES: usize = 24;

/// Bound on the scanned box volume in [`check_main_theorem`].
const MAIN_THEOREM_BUDGET: u64 = 1_000_000;

/// True iff every edge has exactly two vertices. The discrete clutter is a
/// graph by convention (vacuously 2-uniform).
pub fn is_graph(c: &Clutter) -> bool {
    c.edge_masks().iter().all(|&e| e.count_ones() == 2)
}

fn require_graph(c: &Clutter) -> Result<()> {
    if is_graph(c) {
        Ok(())
    } else {
        Err(Error::NotAGraph)
    }
}

fn require_small(c: &Clutter) -> Result<()> {
    let n = c.vertex_count();
    if n > MAX_SUBSET_SEARCH_VERTICES {
        return Err(Error::InstanceTooLarge {
            what: "vertices in subset search",
            limit: MAX_SUBSET_SEARCH_VERTICES as u64,
            got: n as u64,
        });
    }
    Ok(())
}

fn adjacency(c: &Clutter) -> Vec<u64> {
    let n = c.vertex_count();
    let mut adj = vec![0u64; n];
    for &e in c.edge_masks() {
        let vs: Vec<usize> = bits(e).collect();
        adj[vs[0]] |= 1 << vs[1];
        adj[vs[1]] |= 1 << vs[0];
    }
    adj
}

fn mask_vertices(c: &Clutter, mask: u64) -> Vec<VertexId> {
    bits(mask).map(|i| c.vertices()[i]).collect()
}

/// Is the graph on `mask` with neighborhoods `adj` (restricted to `mask`)
/// a single chordless cycle? Equivalent to: 2-regular and connected.
fn induces_cycle(mask: u64, adj: &[u64]) -> bool {
    for v in bits(mask) {
        if (adj[v] & mask).count_ones() != 2 {
            return false;
        }
    }
    let start = mask.trailing_zeros() as usize;
    let mut seen = 1u64 << start;
    loop {
        let mut next = seen;
        for v in bits(seen) {
            next |= adj[v] & mask;
        }
        if next == seen {
            return seen == mask;
        }
        seen = next;
    }
}

fn odd_cycle_subsets(c: &Clutter, complement: bool) -> Result<Vec<Vec<VertexId>>> {
    require_graph(c)?;
    require_small(c)?;
    let n = c.vertex_count();
    let mut adj = adjacency(c);
    if complement {
        let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        for (v, a) in adj.iter_mut().enumerate() {
            *a = all & !*a & !(1 << v);
        }
    }
    let mut found: Vec<u64> = Vec::new();
    for mask in 0..1u64 << n {
        let k = mask.count_ones();
        if k >= 5 && k % 2 == 1 && induces_cycle(mask, &adj) {
            found.push(mask);
        }
    }
    found.sort_by_key(|&m| (m.count_ones(), m));
    Ok(found.into_iter().map(|m| mask_vertices(c, m)).collect())
}

/// All vertex subsets inducing a chordless odd cycle of length ≥ 5, ordered
/// by size then lexicographically.
pub fn find_odd_holes(c: &Clutter) -> Result<Vec<Vec<VertexId>>> {
    odd_cycle_subsets(c, false)
}

/// All vertex subsets whose induced complement is a chordless odd cycle of
/// length ≥ 5. A 5-element antihole is also a 5-hole (the pentagon is
/// self-complementary); both searchers report it, and [`classify`] lists it
/// once under holes with a flag.
pub fn find_odd_antiholes(c: &Clutter) -> Result<Vec<Vec<VertexId>>> {
    odd_cycle_subsets(c, true)
}

/// No odd holes and no odd antiholes; equals perfection by the strong
/// perfect graph theorem.
pub fn is_berge(c: &Clutter) -> Result<bool> {
    Ok(find_odd_holes(c)?.is_empty() && find_odd_antiholes(c)?.is_empty())
}

/// Proper 2-colorability, graphs only.
pub fn is_bipartite(c: &Clutter) -> Result<bool> {
    require_graph(c)?;
    let n = c.vertex_count();
    let adj = adjacency(c);
    let mut color = vec![-1i8; n];
    for s in 0..n {
        if color[s] >= 0 {
            continue;
        }
        color[s] = 0;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for w in bits(adj[v]) {
                if color[w] < 0 {
                    color[w] = 1 - color[v];
                    stack.push(w);
                } else if color[w] == color[v] {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// All nonempty cliques, singletons included, ordered by size then
/// lexicographically.
pub fn cliques(c: &Clutter) -> Result<Vec<Vec<VertexId>>> {
    require_graph(c)?;
    require_small(c)?;
    let n = c.vertex_count();
    let adj = adjacency(c);
    let mut found: Vec<u64> = Vec::new();
    // grow cliques by their largest vertex; cand holds common neighbors > v
    fn grow(cur: u64, cand: u64, adj: &[u64], found: &mut Vec<u64>) {
        found.push(cur);
        for v in bits(cand) {
            let higher = !((1u64 << v << 1).wrapping_sub(1));
            grow(cur | 1 << v, cand & adj[v] & higher, adj, found);
        }
    }
    for v in 0..n {
        let higher = !((1u64 << v << 1).wrapping_sub(1));
        grow(1 << v, adj[v] & higher, &adj, &mut found);
    }
    found.sort_by_key(|&m| (m.count_ones(), m));
    Ok(found.into_iter().map(|m| mask_vertices(c, m)).collect())
}

/// For a Berge graph the Hilbert basis must be exactly
/// {(indicator of Q, |Q| − 1) : Q a nonempty clique}. Returns whether it
/// is; `false` means an internal inconsistency between the cone pipeline
/// and the clique search, not a mathematical discovery.
pub fn check_perfect_generators(c: &Clutter, budget: &WorkBudget) -> Result<bool> {
    require_graph(c)?;
    if !is_berge(c)? {
        return Err(Error::NotBerge);
    }
    let hb = hilbert_basis_with_budget(&simis_cone(c), budget)?;
    let n = c.vertex_count();
    let mut expected: Vec<CoverVector> = Vec::new();
    for q in cliques(c)? {
        let mut a = vec![0u32; n];
        for v in &q {
            a[c.index_of(*v)?] = 1;
        }
        expected.push(CoverVector::new(a, q.len() as u64 - 1));
    }
    if c.is_discrete() {
        // edgeless graph: zero edge ideal, the cone is the full orthant and
        // carries the extra generator (0, …, 0; 1)
        expected.push(CoverVector::new(vec![0u32; n], 1));
    }
    expected.sort_by(|p, q| p.b.cmp(&q.b).then_with(|| p.a.cmp(&q.a)));
    Ok(expected == hb.elements)
}

/// Cross-validate the two characterizations of indecomposable covers on
/// every 0 ≠ a ≤ bound: membership of (a, α₀(C^a)) in the Hilbert basis
/// (cone pipeline) must coincide with indecomposability of C^a (partition
/// search), and every basis element with a ≤ bound and b ≥ 1 must have
/// b = α₀(C^a). The b = 0 elements are exempt: they are exactly the unit
/// vectors, present for every cone, and when {i} is itself an edge the
/// unit eᵢ has α₀(C^{eᵢ}) = 1 ≠ 0 — the characterization concerns the
/// positive-degree generators. The two sides share no code.
pub fn check_main_theorem(c: &Clutter, bound: &[u32]) -> Result<bool> {
    let n = c.vertex_count();
    if bound.len() != n {
        return Err(Error::DimensionMismatch { expected: n, got: bound.len() });
    }
    let mut volume: u64 = 1;
    for &x in bound {
        volume = volume.saturating_mul(x as u64 + 1);
    }
    if volume > MAIN_THEOREM_BUDGET {
        return Err(Error::InstanceTooLarge {
            what: "box volume in main-theorem check",
            limit: MAIN_THEOREM_BUDGET,
            got: volume,
        });
    }
    let hb = hilbert_basis_with_budget(&simis_cone(c), &WorkBudget::default())?;
    let mut a = vec![0u32; n];
    loop {
        let mut k = 0;
        while k < n {
            if a[k] < bound[k] {
                a[k] += 1;
                break;
            }
            a[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
        let ca = c.parallelization(&a)?;
        let alpha0 = ca.covering_number() as u64;
        let indecomposable = ca.is_decomposable()?.is_none();
        if hb.contains(&a, alpha0) != indecomposable {
            return Ok(false);
        }
    }
    for e in &hb.elements {
        if e.b == 0 || e.a.iter().all(|&x| x == 0) {
            continue;
        }
        if e.a.iter().zip(bound).any(|(&x, &u)| x > u) {
            continue;
        }
        let alpha0 = c.parallelization(&e.a)?.covering_number() as u64;
        if e.b != alpha0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Size, 0/1 count, and maximum b of a Hilbert basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSummary {
    pub total: usize,
    pub zero_one: usize,
    pub max_b: u64,
}

impl HilbertSummary {
    fn of(hb: &HilbertBasis) -> Self {
        HilbertSummary {
            total: hb.len(),
            zero_one: hb.elements.iter().filter(|e| e.a.iter().all(|&x| x <= 1)).count(),
            max_b: hb.elements.iter().map(|e| e.b).max().unwrap_or(0),
        }
    }
}

/// Perfection diagnostics for a graph. A pentagon is both a hole and an
/// antihole; it appears in `odd_holes` only, counted by
/// `self_complementary`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PerfectDiagnosis {
    pub odd_holes: Vec<Vec<VertexId>>,
    pub odd_antiholes: Vec<Vec<VertexId>>,
    pub self_complementary: usize,
    pub berge: bool,
    /// Some only when Berge; `false` flags an internal inconsistency.
    pub clique_generators_ok: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub id: String,
    pub is_graph: bool,
    pub alpha0: usize,
    pub beta0: usize,
    pub beta1: usize,
    pub konig: bool,
    pub connected: bool,
    pub decomposable: Option<(Vec<VertexId>, Vec<VertexId>)>,
    pub mfmc_exact: bool,
    pub bipartite: Option<bool>,
    pub perfect_diagnosis: Option<PerfectDiagnosis>,
    pub hilbert_summary: HilbertSummary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ClassifyOptions {
    pub budget: WorkBudget,
}

/// Assemble the full report. Deterministic; graph-only fields are None for
/// non-graphs.
pub fn classify(c: &Clutter, id: &str, opts: &ClassifyOptions) -> Result<ClassificationReport> {
    let hb = hilbert_basis_with_budget(&simis_cone(c), &opts.budget)?;
    let graph = is_graph(c);
    let perfect_diagnosis = if graph {
        let odd_holes = find_odd_holes(c)?;
        let all_antiholes = find_odd_antiholes(c)?;
        let self_complementary =
            all_antiholes.iter().filter(|s| s.len() == 5).count();
        let odd_antiholes: Vec<Vec<VertexId>> =
            all_antiholes.into_iter().filter(|s| s.len() > 5).collect();
        let berge = odd_holes.is_empty() && odd_antiholes.is_empty() && self_complementary == 0;
        let clique_generators_ok = if berge {
            Some(check_perfect_generators(c, &opts.budget)?)
        } else {
            None
        };
        Some(PerfectDiagnosis {
            odd_holes,
            odd_antiholes,
            self_complementary,
            berge,
            clique_generators_ok,
        })
    } else {
        None
    };
    Ok(ClassificationReport {
        id: String::from(id),
        is_graph: graph,
        alpha0: c.covering_number(),
        beta0: c.stability_number(),
        beta1: c.matching_number(),
        konig: c.has_konig(),
        connected: c.is_connected(),
        decomposable: c.is_decomposable()?,
        // the symbolic Rees algebra is generated in t-degree ≤ 1 exactly
        // when the clutter has the max-flow min-cut property
        mfmc_exact: hb.elements.iter().all(|e| e.b <= 1),
        bipartite: if graph { Some(is_bipartite(c)?) } else { None },
        perfect_diagnosis,
        hilbert_summary: HilbertSummary::of(&hb),
    })
}
