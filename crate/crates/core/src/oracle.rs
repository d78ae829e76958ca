//! Exhaustive search for partitionable cycle decompositions of small
//! hypercubes, independent of the constructions.
//!
//! Cycles are bitmasks over the edges of `Q_n`, so the search is limited to
//! cubes with at most 64 edges (`n <= 4`).

use std::collections::BTreeSet;

use crate::decomposition::{CycleSeq, PartitionedDecomposition};
use crate::error::{invalid, Error, Result};
use crate::hypercube::{hypercube_edges, HypercubeDim, VertexLabel};

pub const MAX_EDGES: u64 = 64;

#[derive(Debug, Clone)]
struct Candidate {
    vertices: Vec<VertexLabel>,
    edges: u64,
    cover: u64,
}

/// Searches for a partitionable decomposition of `Q_n` into `2^i`-cycles.
///
/// Returns `Ok(None)` when the search space is exhausted without a
/// solution and `UnsupportedInstance` when `Q_n` has more than 64 edges.
pub fn brute_force_decompose(n: u32, i: u32) -> Result<Option<PartitionedDecomposition>> {
    let dim = HypercubeDim::new(n)?;
    if dim.num_edges() > MAX_EDGES {
        return Err(Error::UnsupportedInstance(format!(
            "{dim} has {} edges, the oracle handles at most {MAX_EDGES}",
            dim.num_edges()
        )));
    }
    if i < 2 || i > n {
        return invalid(format!("i = {i} must satisfy 2 <= i <= n = {n}"));
    }
    let len = 1usize << i;
    let cands = enumerate_cycles(dim, len);
    let edge_count = dim.num_edges() as usize;
    let mut by_edge: Vec<Vec<usize>> = vec![Vec::new(); edge_count];
    for (k, c) in cands.iter().enumerate() {
        for e in 0..edge_count {
            if c.edges >> e & 1 == 1 {
                by_edge[e].push(k);
            }
        }
    }
    let full = if edge_count == 64 { u64::MAX } else { (1u64 << edge_count) - 1 };
    let mut s = CoverSearch { cands: &cands, by_edge: &by_edge, full, all_vertices: (1u64 << dim.num_vertices()) - 1, chosen: Vec::new() };
    let Some((chosen, sets)) = s.cover(0) else { return Ok(None) };
    let cycles = chosen.iter().map(|&k| CycleSeq::new(cands[k].vertices.clone())).collect();
    Ok(Some(PartitionedDecomposition::new(dim, len, cycles, sets)?))
}

/// All cycles of length `len`, each listed once: the walk starts at its
/// smallest vertex and its second vertex is smaller than its last.
fn enumerate_cycles(dim: HypercubeDim, len: usize) -> Vec<Candidate> {
    let n = dim.get();
    let index = edge_index(dim);
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(len);
    fn extend(
        n: u32,
        len: usize,
        index: &dyn Fn(VertexLabel, VertexLabel) -> usize,
        path: &mut Vec<VertexLabel>,
        out: &mut Vec<Candidate>,
    ) {
        let start = path[0];
        let last = *path.last().expect("non-empty");
        if path.len() == len {
            if (last ^ start).count_ones() == 1 && path[1] < last {
                let mut edges = 0u64;
                let mut cover = 0u64;
                for k in 0..len {
                    edges |= 1 << index(path[k], path[(k + 1) % len]);
                    cover |= 1 << path[k];
                }
                out.push(Candidate { vertices: path.clone(), edges, cover });
            }
            return;
        }
        for b in 0..n {
            let v = last ^ (1 << b);
            if v > start && !path.contains(&v) {
                path.push(v);
                extend(n, len, index, path, out);
                path.pop();
            }
        }
    }
    for s in 0..dim.num_vertices() {
        path.clear();
        path.push(s);
        extend(n, len, &index, &mut path, &mut out);
    }
    out
}

fn edge_index(dim: HypercubeDim) -> impl Fn(VertexLabel, VertexLabel) -> usize {
    let edges = hypercube_edges(dim);
    move |u, v| {
        let key = (u.min(v), u.max(v));
        edges.binary_search_by_key(&key, |e| e.endpoints()).expect("hypercube edge")
    }
}

struct CoverSearch<'a> {
    cands: &'a [Candidate],
    by_edge: &'a [Vec<usize>],
    full: u64,
    all_vertices: u64,
    chosen: Vec<usize>,
}

impl CoverSearch<'_> {
    /// Exact cover of the edges; each complete cover is then tested for a
    /// grouping into vertex-partitioning sets.
    fn cover(&mut self, used: u64) -> Option<(Vec<usize>, Vec<usize>)> {
        if used == self.full {
            let sets = self.group()?;
            return Some((self.chosen.clone(), sets));
        }
        let e = (!used).trailing_zeros() as usize;
        for &k in &self.by_edge[e] {
            let c = &self.cands[k];
            if c.edges & used == 0 {
                self.chosen.push(k);
                if let Some(found) = self.cover(used | c.edges) {
                    return Some(found);
                }
                self.chosen.pop();
            }
        }
        None
    }

    fn group(&self) -> Option<Vec<usize>> {
        let covers: Vec<u64> = self.chosen.iter().map(|&k| self.cands[k].cover).collect();
        let mut set_of = vec![usize::MAX; covers.len()];
        let mut masks: Vec<u64> = Vec::new();
        if assign(&covers, 0, &mut set_of, &mut masks, self.all_vertices) {
            Some(set_of)
        } else {
            None
        }
    }
}

/// Places cycle `k` into an existing set it does not overlap, or opens a new
/// set; succeeds when every set covers all vertices.
fn assign(covers: &[u64], k: usize, set_of: &mut [usize], masks: &mut Vec<u64>, all: u64) -> bool {
    if k == covers.len() {
        return masks.iter().all(|&m| m == all);
    }
    for s in 0..masks.len() {
        if masks[s] & covers[k] == 0 {
            masks[s] |= covers[k];
            set_of[k] = s;
            if assign(covers, k + 1, set_of, masks, all) {
                return true;
            }
            masks[s] &= !covers[k];
        }
    }
    masks.push(covers[k]);
    set_of[k] = masks.len() - 1;
    if assign(covers, k + 1, set_of, masks, all) {
        return true;
    }
    masks.pop();
    false
}

/// Whether `d` is an exact cover of `E(Q_n)` by cycles of its declared
/// length whose partition sets each cover every vertex exactly once.
pub fn is_exact_cover(d: &PartitionedDecomposition) -> bool {
    let n = d.host();
    let len = d.cycle_length();
    let mut seen_edges = BTreeSet::new();
    for c in d.cycles() {
        let vs = c.vertices();
        if vs.len() != len || vs.iter().collect::<BTreeSet<_>>().len() != len || vs.iter().any(|&v| !n.contains(v)) {
            return false;
        }
        for (u, v) in c.steps() {
            if (u ^ v).count_ones() != 1 || !seen_edges.insert((u.min(v), u.max(v))) {
                return false;
            }
        }
    }
    if seen_edges.len() as u64 != n.num_edges() {
        return false;
    }
    if d.set_of().len() != d.num_cycles() {
        return false;
    }
    d.sets().values().all(|set| {
        let mut vs = BTreeSet::new();
        set.iter().all(|c| c.vertices().iter().all(|&v| vs.insert(v))) && vs.len() as u64 == n.num_vertices()
    }) && d.sets().len() == d.num_sets()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::certificates::q4_certificate;

    #[test]
    fn q2_square() {
        let d = brute_force_decompose(2, 2).unwrap().unwrap();
        assert_eq!(d.num_cycles(), 1);
        assert!(is_exact_cover(&d));
    }

    #[test]
    fn cycle_counts_in_q3_q4() {
        let q3 = HypercubeDim::new(3).unwrap();
        assert_eq!(enumerate_cycles(q3, 4).len(), 6);
        assert_eq!(enumerate_cycles(q3, 8).len(), 6);
        let q4 = HypercubeDim::new(4).unwrap();
        assert_eq!(enumerate_cycles(q4, 4).len(), 24);
        assert_eq!(enumerate_cycles(q4, 16).len(), 1344);
    }

    #[test]
    fn odd_cube_has_no_decomposition() {
        assert!(brute_force_decompose(3, 2).unwrap().is_none());
    }

    #[test]
    fn size_cap() {
        assert!(matches!(brute_force_decompose(5, 2), Err(Error::UnsupportedInstance(_))));
    }

    #[test]
    fn predicate_rejects_corruption() {
        let d = q4_certificate();
        assert!(is_exact_cover(&d));
        let (h, l, mut cycles, sets) = d.clone().into_parts();
        cycles.pop();
        assert!(!is_exact_cover(&PartitionedDecomposition::new(h, l, cycles, sets[..3].to_vec()).unwrap()));
        let (h, l, cycles, _) = d.into_parts();
        assert!(!is_exact_cover(&PartitionedDecomposition::new(h, l, cycles, vec![0, 1, 0, 1]).unwrap()));
    }
}
