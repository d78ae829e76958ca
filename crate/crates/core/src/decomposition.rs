//! Cycles and partitioned cycle decompositions of a hypercube.

use std::collections::BTreeMap;

use crate::error::{invalid, Result};
use crate::hypercube::{Edge, HypercubeDim, VertexLabel};

/// A closed walk given by its vertices; the first vertex is not repeated.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleSeq {
    vertices: Vec<VertexLabel>,
}

impl CycleSeq {
    /// Wraps a vertex sequence without checking it; use the `verify` module
    /// to validate.
    pub fn new(vertices: Vec<VertexLabel>) -> Self {
        CycleSeq { vertices }
    }

    pub fn vertices(&self) -> &[VertexLabel] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<VertexLabel> {
        self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Consecutive pairs, including the closing pair (last, first).
    pub fn steps(&self) -> impl Iterator<Item = (VertexLabel, VertexLabel)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |k| (self.vertices[k], self.vertices[(k + 1) % n]))
    }

    /// Edges of the cycle. Assumes consecutive vertices are adjacent.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.steps().map(|(u, v)| Edge::new_unchecked(u, v))
    }

    /// The rotation/reflection that starts at the smallest vertex and
    /// continues towards its smaller neighbour.
    pub fn canonical(&self) -> CycleSeq {
        let n = self.vertices.len();
        if n < 3 {
            return self.clone();
        }
        let (start, _) = self
            .vertices
            .iter()
            .enumerate()
            .min_by_key(|&(_, v)| *v)
            .expect("non-empty");
        let next = self.vertices[(start + 1) % n];
        let prev = self.vertices[(start + n - 1) % n];
        let vertices = if next <= prev {
            (0..n).map(|k| self.vertices[(start + k) % n]).collect()
        } else {
            (0..n).map(|k| self.vertices[(start + n - k) % n]).collect()
        };
        CycleSeq { vertices }
    }

    /// Equality up to rotation and reversal.
    pub fn same_cycle(&self, other: &CycleSeq) -> bool {
        self.len() == other.len() && self.canonical() == other.canonical()
    }
}

impl From<Vec<VertexLabel>> for CycleSeq {
    fn from(vertices: Vec<VertexLabel>) -> Self {
        CycleSeq { vertices }
    }
}

/// Cycles of a common length in `Q_n`, each tagged with a partition-set id.
///
/// Construction functions return values that satisfy the full certificate
/// invariant; the type itself does not enforce it so that corrupted or
/// partial certificates can still be loaded and checked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionedDecomposition {
    host: HypercubeDim,
    cycle_length: usize,
    cycles: Vec<CycleSeq>,
    set_of: Vec<usize>,
}

impl PartitionedDecomposition {
    pub fn new(
        host: HypercubeDim,
        cycle_length: usize,
        cycles: Vec<CycleSeq>,
        set_of: Vec<usize>,
    ) -> Result<Self> {
        if cycles.len() != set_of.len() {
            return invalid(format!(
                "{} cycles but {} partition-set ids",
                cycles.len(),
                set_of.len()
            ));
        }
        Ok(PartitionedDecomposition { host, cycle_length, cycles, set_of })
    }

    /// Builds a decomposition from groups: every cycle of `sets[k]` gets id `k`.
    pub fn from_sets(host: HypercubeDim, cycle_length: usize, sets: Vec<Vec<CycleSeq>>) -> Self {
        let mut cycles = Vec::new();
        let mut set_of = Vec::new();
        for (k, set) in sets.into_iter().enumerate() {
            set_of.extend(std::iter::repeat_n(k, set.len()));
            cycles.extend(set);
        }
        PartitionedDecomposition { host, cycle_length, cycles, set_of }
    }

    pub fn host(&self) -> HypercubeDim {
        self.host
    }

    pub fn cycle_length(&self) -> usize {
        self.cycle_length
    }

    pub fn cycles(&self) -> &[CycleSeq] {
        &self.cycles
    }

    pub fn set_of(&self) -> &[usize] {
        &self.set_of
    }

    pub fn num_cycles(&self) -> usize {
        self.cycles.len()
    }

    /// One more than the largest set id in use.
    pub fn num_sets(&self) -> usize {
        self.set_of.iter().max().map_or(0, |m| m + 1)
    }

    /// Cycles grouped by set id, in id order.
    pub fn sets(&self) -> BTreeMap<usize, Vec<&CycleSeq>> {
        let mut out: BTreeMap<usize, Vec<&CycleSeq>> = BTreeMap::new();
        for (c, &s) in self.cycles.iter().zip(&self.set_of) {
            out.entry(s).or_default().push(c);
        }
        out
    }

    /// Cycles of one partition set, in construction order.
    pub fn set(&self, id: usize) -> Vec<&CycleSeq> {
        self.cycles
            .iter()
            .zip(&self.set_of)
            .filter(|&(_, &s)| s == id)
            .map(|(c, _)| c)
            .collect()
    }

    pub fn into_parts(self) -> (HypercubeDim, usize, Vec<CycleSeq>, Vec<usize>) {
        (self.host, self.cycle_length, self.cycles, self.set_of)
    }

    /// Same decomposition with every cycle in canonical rotation.
    pub fn canonicalized(&self) -> Self {
        PartitionedDecomposition {
            cycles: self.cycles.iter().map(CycleSeq::canonical).collect(),
            ..self.clone()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_rotation_and_reflection() {
        let c = CycleSeq::new(vec![3, 1, 0, 2]);
        assert_eq!(c.canonical().vertices(), &[0, 1, 3, 2]);
        let r = CycleSeq::new(vec![2, 0, 1, 3]);
        assert!(c.same_cycle(&r));
        assert!(!c.same_cycle(&CycleSeq::new(vec![0, 1, 2, 3])));
    }

    #[test]
    fn set_bookkeeping() {
        let host = HypercubeDim::new(2).unwrap();
        let d = PartitionedDecomposition::from_sets(
            host,
            4,
            vec![vec![CycleSeq::new(vec![0, 1, 3, 2])]],
        );
        assert_eq!(d.num_sets(), 1);
        assert_eq!(d.set(0).len(), 1);
        assert!(PartitionedDecomposition::new(host, 4, vec![], vec![0]).is_err());
    }
}
