//! Exhaustive instance generators for small vertex counts: every clutter
//! (antichain of nonempty edges) on n labelled vertices, and every simple
//! graph on n vertices up to isomorphism. Test fuel for the cross-module
//! consistency suites.

use alloc::vec;
use alloc::vec::Vec;

use crate::clutter::Clutter;
use crate::error::{Error, Result};

/// Largest n for which [`all_clutters`] is tractable (2^(2^n − 1) families).
pub const MAX_ENUM_CLUTTER_VERTICES: usize = 4;

/// Every clutter on n labelled vertices, including the discrete one,
/// in a deterministic order. Counts for n = 1..4: 2, 5, 19, 167.
pub fn all_clutters(n: usize) -> Result<Vec<Clutter>> {
    if n == 0 {
        return Err(Error::EmptyVertexSet);
    }
    if n > MAX_ENUM_CLUTTER_VERTICES {
        return Err(Error::InstanceTooLarge {
            what: "vertices in clutter enumeration",
            limit: MAX_ENUM_CLUTTER_VERTICES as u64,
            got: n as u64,
        });
    }
    let subsets: Vec<u64> = (1..1u64 << n).collect();
    let mut out = Vec::new();
    for family in 0..1u64 << subsets.len() {
        let edges: Vec<u64> = subsets
            .iter()
            .enumerate()
            .filter(|(i, _)| family >> i & 1 == 1)
            .map(|(_, &s)| s)
            .collect();
        let antichain = edges
            .iter()
            .all(|&e| edges.iter().all(|&f| e == f || e & f != e));
        if !antichain {
            continue;
        }
        let lists: Vec<Vec<usize>> = edges
            .iter()
            .map(|&e| (0..n).filter(|&j| e >> j & 1 == 1).collect())
            .collect();
        out.push(Clutter::new(n, &lists)?);
    }
    Ok(out)
}

/// Largest n for which [`graphs_up_to_iso`] is tractable.
pub const MAX_ENUM_GRAPH_VERTICES: usize = 7;

fn edge_slots(n: usize) -> Vec<(usize, usize)> {
    let mut slots = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            slots.push((i, j));
        }
    }
    slots
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        for i in 0..k {
            heap(k - 1, p, out);
            if k.is_multiple_of(2) {
                p.swap(i, k - 1);
            } else {
                p.swap(0, k - 1);
            }
        }
    }
    heap(n, &mut p, &mut out);
    out
}

/// Every simple graph on n vertices up to isomorphism (as clutters whose
/// edges are the graph edges; isolated vertices kept). A graph is emitted
/// iff its edge bitmask is the minimum over all vertex relabellings.
/// Counts for n = 1..7: 1, 2, 4, 11, 34, 156, 1044.
pub fn graphs_up_to_iso(n: usize) -> Result<Vec<Clutter>> {
    if n == 0 {
        return Err(Error::EmptyVertexSet);
    }
    if n > MAX_ENUM_GRAPH_VERTICES {
        return Err(Error::InstanceTooLarge {
            what: "vertices in graph enumeration",
            limit: MAX_ENUM_GRAPH_VERTICES as u64,
            got: n as u64,
        });
    }
    let slots = edge_slots(n);
    let m = slots.len();
    let mut slot_index = vec![vec![0usize; n]; n];
    for (k, &(i, j)) in slots.iter().enumerate() {
        slot_index[i][j] = k;
        slot_index[j][i] = k;
    }
    // slot_maps[p][k] = image slot of k under permutation p
    let perms = permutations(n);
    let slot_maps: Vec<Vec<usize>> = perms
        .iter()
        .map(|p| slots.iter().map(|&(i, j)| slot_index[p[i]][p[j]]).collect())
        .collect();
    let mut out = Vec::new();
    'mask: for mask in 0u32..1 << m {
        for map in &slot_maps {
            // compare σ(mask) with mask bit by bit, most significant first
            let mut image = 0u32;
            for (k, &mk) in map.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    image |= 1 << mk;
                }
            }
            if image < mask {
                continue 'mask;
            }
        }
        let edges: Vec<Vec<usize>> = slots
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &(i, j))| vec![i, j])
            .collect();
        out.push(Clutter::new(n, &edges)?);
    }
    Ok(out)
}
