//! Clutters (antichain hypergraphs) and their exact combinatorics:
//! induced subclutters, deletion/duplication/parallelization, the blocker,
//! covering/matching/stability numbers, criticality and decomposability.
//!
//! Vertices are stored in a fixed order and edges are bitmasks over vertex
//! positions, so a clutter is limited to [`MAX_VERTICES`] vertices.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Hard limit imposed by the `u64` edge representation.
pub const MAX_VERTICES: usize = 64;

/// Partition-search limit for [`Clutter::is_decomposable`].
pub const MAX_DECOMPOSITION_VERTICES: usize = 24;

/// A vertex of a clutter. `base` is the 1-based index of the originating
/// vertex; `copy` distinguishes duplicates (`copy == 1` is the original,
/// copies `>= 2` were created by duplication).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId {
    pub base: u32,
    pub copy: u32,
}

impl VertexId {
    /// The original (copy 1) vertex with the given 1-based base index.
    pub const fn new(base: u32) -> Self {
        VertexId { base, copy: 1 }
    }
}

impl core::fmt::Display for VertexId {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        if self.copy == 1 {
            write!(f, "x{}", self.base)
        } else {
            write!(f, "x{}^{}", self.base, self.copy)
        }
    }
}

/// A finite clutter: an ordered vertex set together with an antichain of
/// nonempty edges. Isolated vertices are allowed. Immutable after
/// construction; every operation returns a new clutter.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Clutter {
    names: Vec<VertexId>,
    edges: Vec<u64>,
}

pub(crate) fn bits(mask: u64) -> impl Iterator<Item = usize> {
    let mut m = mask;
    core::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

/// Insert `mask` into a family kept minimal under inclusion.
fn push_minimal(family: &mut Vec<u64>, mask: u64) {
    for &f in family.iter() {
        if f & mask == f {
            return; // an existing member is contained in mask
        }
    }
    family.retain(|&f| f & mask != mask);
    family.push(mask);
}

impl Clutter {
    /// Build a clutter on `vertex_count` original vertices `x1..xn` from
    /// 0-based vertex index sets. Duplicate edges are removed; nested edges
    /// are rejected (use [`Clutter::minimalized`] to minimalize explicitly).
    pub fn new(vertex_count: usize, edges: &[Vec<usize>]) -> Result<Clutter> {
        let names: Vec<VertexId> = (1..=vertex_count as u32).map(VertexId::new).collect();
        let masks = Self::masks_from_indices(vertex_count, edges)?;
        let mut dedup: Vec<u64> = Vec::new();
        for m in masks {
            if !dedup.contains(&m) {
                dedup.push(m);
            }
        }
        for i in 0..dedup.len() {
            for j in 0..dedup.len() {
                if i != j && dedup[i] & dedup[j] == dedup[i] {
                    return Err(Error::AntichainViolation { contained: i, container: j });
                }
            }
        }
        Self::from_parts(names, dedup)
    }

    /// Like [`Clutter::new`] but silently removes non-minimal edges.
    pub fn minimalized(vertex_count: usize, edges: &[Vec<usize>]) -> Result<Clutter> {
        let names: Vec<VertexId> = (1..=vertex_count as u32).map(VertexId::new).collect();
        let masks = Self::masks_from_indices(vertex_count, edges)?;
        let mut family = Vec::new();
        for m in masks {
            push_minimal(&mut family, m);
        }
        Self::from_parts(names, family)
    }

    fn masks_from_indices(vertex_count: usize, edges: &[Vec<usize>]) -> Result<Vec<u64>> {
        if vertex_count == 0 {
            return Err(Error::EmptyVertexSet);
        }
        if vertex_count > MAX_VERTICES {
            return Err(Error::InstanceTooLarge {
                what: "vertex count",
                limit: MAX_VERTICES as u64,
                got: vertex_count as u64,
            });
        }
        let mut masks = Vec::with_capacity(edges.len());
        for (i, e) in edges.iter().enumerate() {
            if e.is_empty() {
                return Err(Error::EmptyEdge { index: i });
            }
            let mut m = 0u64;
            for &v in e {
                if v >= vertex_count {
                    return Err(Error::VertexOutOfRange { vertex: v, count: vertex_count });
                }
                m |= 1 << v;
            }
            masks.push(m);
        }
        Ok(masks)
    }

    /// Internal constructor; `names` must be sorted and unique, edges must be
    /// a valid antichain of nonempty masks over `names` positions.
    pub(crate) fn from_parts(names: Vec<VertexId>, mut edges: Vec<u64>) -> Result<Clutter> {
        if names.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        debug_assert!(names.windows(2).all(|w| w[0] < w[1]));
        debug_assert!(edges.iter().all(|&e| e != 0));
        edges.sort_unstable();
        edges.dedup();
        Ok(Clutter { names, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.names
    }

    /// Edges as bitmasks over vertex positions, in canonical order.
    pub fn edge_masks(&self) -> &[u64] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_discrete(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn edge_vertices(&self, edge: usize) -> Vec<VertexId> {
        bits(self.edges[edge]).map(|i| self.names[i]).collect()
    }

    pub fn edge_lists(&self) -> Vec<Vec<VertexId>> {
        (0..self.edges.len()).map(|i| self.edge_vertices(i)).collect()
    }

    pub fn index_of(&self, v: VertexId) -> Result<usize> {
        self.names
            .binary_search(&v)
            .map_err(|_| Error::UnknownVertex { base: v.base, copy: v.copy })
    }

    fn full_mask(&self) -> u64 {
        if self.names.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.names.len()) - 1
        }
    }

    /// The maximal subclutter with vertex set `s`: keeps exactly the edges
    /// contained in `s`; vertices of `s` in no such edge stay isolated.
    pub fn induced_subclutter(&self, s: &[VertexId]) -> Result<Clutter> {
        let mut mask = 0u64;
        for &v in s {
            mask |= 1 << self.index_of(v)?;
        }
        if mask == 0 {
            return Err(Error::EmptyVertexSet);
        }
        Ok(self.induced_by_mask(mask))
    }

    /// Mask variant of [`Clutter::induced_subclutter`]; `mask` must be a
    /// nonempty subset of the vertex positions.
    pub fn induced_by_mask(&self, mask: u64) -> Clutter {
        assert!(mask != 0 && mask & !self.full_mask() == 0);
        let keep: Vec<usize> = bits(mask).collect();
        let names: Vec<VertexId> = keep.iter().map(|&i| self.names[i]).collect();
        let mut pos = [usize::MAX; MAX_VERTICES];
        for (new, &old) in keep.iter().enumerate() {
            pos[old] = new;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&e| e & !mask == 0)
            .map(|&e| bits(e).fold(0u64, |m, i| m | 1 << pos[i]))
            .collect();
        Clutter::from_parts(names, edges).expect("induced subclutter is valid")
    }

    /// Delete a vertex together with every edge containing it.
    pub fn delete_vertex(&self, v: VertexId) -> Result<Clutter> {
        let idx = self.index_of(v)?;
        if self.names.len() == 1 {
            return Err(Error::EmptyVertexSet);
        }
        let keep = self.full_mask() & !(1 << idx);
        Ok(self.induced_by_mask(keep))
    }

    /// Remove the edge at `edge` while keeping all vertices.
    pub fn delete_edge(&self, edge: usize) -> Clutter {
        let mut edges = self.edges.clone();
        edges.remove(edge);
        Clutter::from_parts(self.names.clone(), edges).expect("spanning subclutter is valid")
    }

    /// Duplicate vertex `v`: add a fresh copy `v'` and, for every edge `e`
    /// containing `v`, the edge `(e \ {v}) ∪ {v'}`. The result is again an
    /// antichain.
    pub fn duplicate_vertex(&self, v: VertexId) -> Result<Clutter> {
        let idx = self.index_of(v)?;
        if self.names.len() + 1 > MAX_VERTICES {
            return Err(Error::InstanceTooLarge {
                what: "vertex count",
                limit: MAX_VERTICES as u64,
                got: self.names.len() as u64 + 1,
            });
        }
        let next_copy = self
            .names
            .iter()
            .filter(|u| u.base == v.base)
            .map(|u| u.copy)
            .max()
            .unwrap()
            + 1;
        let fresh = VertexId { base: v.base, copy: next_copy };
        let mut names = self.names.clone();
        let insert_at = names.binary_search(&fresh).unwrap_err();
        names.insert(insert_at, fresh);
        // remap edge masks over the enlarged vertex list
        let remap = |e: u64| -> u64 {
            let low = e & ((1u64 << insert_at) - 1);
            let high = e >> insert_at;
            low | (high << (insert_at + 1))
        };
        let old_bit = {
            let moved = if idx >= insert_at { idx + 1 } else { idx };
            1u64 << moved
        };
        let mut edges: Vec<u64> = self.edges.iter().map(|&e| remap(e)).collect();
        let mut extra: Vec<u64> = edges
            .iter()
            .filter(|&&e| e & old_bit != 0)
            .map(|&e| (e & !old_bit) | (1 << insert_at))
            .collect();
        edges.append(&mut extra);
        let c = Clutter::from_parts(names, edges)?;
        debug_assert!(c.is_antichain());
        Ok(c)
    }

    pub(crate) fn is_antichain(&self) -> bool {
        for (i, &a) in self.edges.iter().enumerate() {
            for (j, &b) in self.edges.iter().enumerate() {
                if i != j && a & b == a {
                    return false;
                }
            }
        }
        true
    }

    /// The parallelization `C^a`: vertex `i` is deleted when `a[i] == 0` and
    /// duplicated `a[i] - 1` times otherwise. Edges are all ways of replacing
    /// each vertex of an edge supported on `a` by one of its copies. The
    /// result does not depend on the order of deletions and duplications.
    pub fn parallelization(&self, a: &[u32]) -> Result<Clutter> {
        let n = self.names.len();
        if a.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: a.len() });
        }
        let total: u64 = a.iter().map(|&x| x as u64).sum();
        if total == 0 {
            return Err(Error::EmptyVertexSet);
        }
        if total > MAX_VERTICES as u64 {
            return Err(Error::InstanceTooLarge {
                what: "parallelization vertex count",
                limit: MAX_VERTICES as u64,
                got: total,
            });
        }
        // fresh copy counters start above the copies already present
        let mut max_of = alloc::collections::BTreeMap::new();
        for (i, v) in self.names.iter().enumerate() {
            if a[i] >= 1 {
                let e = max_of.entry(v.base).or_insert(0u32);
                *e = (*e).max(v.copy);
            }
        }
        let mut names: Vec<VertexId> = Vec::new();
        // copies[i] lists the result names for source vertex i
        let mut copies: Vec<Vec<VertexId>> = vec![Vec::new(); n];
        for (i, v) in self.names.iter().enumerate() {
            if a[i] >= 1 {
                copies[i].push(*v);
                names.push(*v);
            }
        }
        for (i, v) in self.names.iter().enumerate() {
            for _ in 1..a[i].max(1) {
                let counter = max_of.get_mut(&v.base).unwrap();
                *counter += 1;
                let fresh = VertexId { base: v.base, copy: *counter };
                copies[i].push(fresh);
                names.push(fresh);
            }
        }
        names.sort_unstable();
        let pos = |v: VertexId| names.binary_search(&v).unwrap();
        let mut edges: Vec<u64> = Vec::new();
        for &e in &self.edges {
            let members: Vec<usize> = bits(e).collect();
            if members.iter().any(|&i| a[i] == 0) {
                continue;
            }
            // cartesian product over the copies of each member
            let mut stack: Vec<u64> = vec![0];
            for &i in &members {
                let mut next = Vec::with_capacity(stack.len() * copies[i].len());
                for &partial in &stack {
                    for &c in &copies[i] {
                        next.push(partial | 1 << pos(c));
                    }
                }
                stack = next;
            }
            edges.extend(stack);
        }
        let c = Clutter::from_parts(names, edges)?;
        debug_assert!(c.is_antichain());
        Ok(c)
    }

    /// The blocker Υ(C): the clutter of all minimal vertex covers, on the
    /// same vertex set, computed by an edge-by-edge transversal product with
    /// on-the-fly minimalization. A discrete clutter has an edgeless blocker.
    pub fn blocker(&self) -> Clutter {
        if self.edges.is_empty() {
            return Clutter::from_parts(self.names.clone(), Vec::new()).unwrap();
        }
        let mut covers: Vec<u64> = vec![0];
        for &e in &self.edges {
            let mut next: Vec<u64> = Vec::new();
            for &c in &covers {
                if c & e != 0 {
                    push_minimal(&mut next, c);
                } else {
                    for v in bits(e) {
                        push_minimal(&mut next, c | 1 << v);
                    }
                }
            }
            covers = next;
        }
        Clutter::from_parts(self.names.clone(), covers).unwrap()
    }

    /// The vertex covering number α₀: minimum edge size of the blocker,
    /// 0 for discrete clutters.
    pub fn covering_number(&self) -> usize {
        self.blocker()
            .edges
            .iter()
            .map(|e| e.count_ones() as usize)
            .min()
            .unwrap_or(0)
    }

    /// The stability number β₀ = n − α₀.
    pub fn stability_number(&self) -> usize {
        self.vertex_count() - self.covering_number()
    }

    /// The matching number β₁: maximum number of pairwise disjoint edges.
    pub fn matching_number(&self) -> usize {
        fn go(edges: &[u64], used: u64, count: usize, best: &mut usize) {
            if count > *best {
                *best = count;
            }
            for (i, &e) in edges.iter().enumerate() {
                if e & used == 0 {
                    if count + edges.len() - i <= *best {
                        return;
                    }
                    go(&edges[i + 1..], used | e, count + 1, best);
                }
            }
        }
        let mut best = 0;
        go(&self.edges, 0, 0, &mut best);
        best
    }

    /// König property: β₁ = α₀. Discrete clutters qualify (0 = 0).
    pub fn has_konig(&self) -> bool {
        self.matching_number() == self.covering_number()
    }

    /// A clutter is connected when no proper nonempty vertex subset splits
    /// all edges. A single vertex is connected; two or more vertices with no
    /// edges are not.
    pub fn is_connected(&self) -> bool {
        let n = self.names.len();
        if n == 1 {
            return true;
        }
        if self.edges.is_empty() {
            return false;
        }
        let mut comp: u64 = 1; // grow from vertex 0
        loop {
            let before = comp;
            for &e in &self.edges {
                if e & comp != 0 {
                    comp |= e;
                }
            }
            if comp == before {
                break;
            }
        }
        comp == self.full_mask()
    }

    /// α₀ drops when any single vertex is deleted.
    pub fn is_vertex_critical(&self) -> bool {
        let alpha = self.covering_number();
        if self.names.len() == 1 {
            // deleting the only vertex is not defined; a lone vertex has α₀ = 0
            // and cannot lose it, except via an edge {x} whose deletion empties
            // the clutter. Treat α₀ > 0 as critical.
            return alpha > 0;
        }
        self.names
            .iter()
            .all(|&v| self.delete_vertex(v).unwrap().covering_number() < alpha)
    }

    /// α₀ drops when any single edge is removed (vertices kept).
    pub fn is_edge_critical(&self) -> bool {
        let alpha = self.covering_number();
        (0..self.edges.len()).all(|i| self.delete_edge(i).covering_number() < alpha)
    }

    /// α₀ of every induced subclutter, indexed by vertex mask. Only used for
    /// the partition searches; agrees with the blocker route by Eq. checks in
    /// the test suite.
    pub(crate) fn alpha0_table(&self) -> Result<Vec<u8>> {
        let n = self.names.len();
        if n > MAX_DECOMPOSITION_VERTICES {
            return Err(Error::InstanceTooLarge {
                what: "vertices in partition search",
                limit: MAX_DECOMPOSITION_VERTICES as u64,
                got: n as u64,
            });
        }
        let size = 1usize << n;
        let mut t = vec![0u8; size];
        for s in 1..size {
            let sm = s as u64;
            let mut val = 0u8;
            for &e in &self.edges {
                if e & !sm == 0 {
                    let mut best = u8::MAX;
                    for v in bits(e) {
                        best = best.min(t[s & !(1usize << v)]);
                    }
                    val = best + 1;
                    break;
                }
            }
            t[s] = val;
        }
        Ok(t)
    }

    /// Search for a partition (X₁, X₂) with α₀(C) = α₀(C[X₁]) + α₀(C[X₂]).
    /// Returns the lexicographically first witness, or `None` when the
    /// clutter is indecomposable. Exhaustive over 2^(n−1) − 1 partitions.
    pub fn is_decomposable(&self) -> Result<Option<(Vec<VertexId>, Vec<VertexId>)>> {
        let n = self.names.len();
        if n == 1 {
            return Ok(None);
        }
        let t = self.alpha0_table()?;
        let full = (1usize << n) - 1;
        let alpha = t[full];
        let mut m = 1usize; // partitions with vertex 0 in X₁
        while m < full {
            if t[m] + t[full & !m] == alpha {
                let x1 = bits(m as u64).map(|i| self.names[i]).collect();
                let x2 = bits((full & !m) as u64).map(|i| self.names[i]).collect();
                return Ok(Some((x1, x2)));
            }
            m += 2; // next mask containing vertex 0
        }
        Ok(None)
    }

    /// Add a fresh vertex `v` and the edges `S ∪ {v}` for each given subset
    /// `S` of the current vertices. The enlarged edge set must remain an
    /// antichain.
    pub fn cone_vertex_extension(&self, new_edges: &[Vec<VertexId>]) -> Result<Clutter> {
        let n = self.names.len();
        if n + 1 > MAX_VERTICES {
            return Err(Error::InstanceTooLarge {
                what: "vertex count",
                limit: MAX_VERTICES as u64,
                got: n as u64 + 1,
            });
        }
        let fresh = VertexId::new(self.names.iter().map(|v| v.base).max().unwrap() + 1);
        let mut names = self.names.clone();
        names.push(fresh);
        let new_bit = 1u64 << n;
        let mut edges = self.edges.clone();
        for s in new_edges {
            let mut m = new_bit;
            for &v in s {
                m |= 1 << self.index_of(v)?;
            }
            edges.push(m);
        }
        for i in 0..edges.len() {
            for j in 0..edges.len() {
                if i != j && edges[i] & edges[j] == edges[i] {
                    return Err(Error::AntichainViolation { contained: i, container: j });
                }
            }
        }
        Clutter::from_parts(names, edges)
    }

    /// Renumber the copies of each base vertex as 1, 2, ... in their current
    /// order. Lets differently-built parallelizations be compared up to the
    /// canonical naming.
    pub fn relabel_copies(&self) -> Clutter {
        let mut names = self.names.clone();
        let mut last_base = None;
        let mut counter = 0u32;
        for v in names.iter_mut() {
            if last_base != Some(v.base) {
                last_base = Some(v.base);
                counter = 0;
            }
            counter += 1;
            v.copy = counter;
        }
        Clutter::from_parts(names, self.edges.clone()).unwrap()
    }
}
