//! Hypercube and product-graph model.
//!
//! A vertex of `Q_n` is an `n`-bit integer. Binary strings written with the
//! leftmost character as coordinate 1 map that character to bit 0, so the
//! string `1110` is the value `0b0111 = 7`.

use std::fmt;

use crate::error::{invalid, Result};

/// Largest dimension accepted anywhere in the crate.
pub const MAX_DIM: u32 = 30;

/// A vertex label of `Q_n`.
pub type VertexLabel = u64;

/// Dimension of a hypercube.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HypercubeDim(u32);

impl HypercubeDim {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 || n > MAX_DIM {
            return invalid(format!("hypercube dimension must be in 1..={MAX_DIM}, got {n}"));
        }
        Ok(HypercubeDim(n))
    }

    /// Like [`HypercubeDim::new`] but additionally requires `n` even.
    pub fn even(n: u32) -> Result<Self> {
        let d = Self::new(n)?;
        if n % 2 != 0 {
            return invalid(format!("hypercube dimension must be even, got {n}"));
        }
        Ok(d)
    }

    pub fn get(self) -> u32 {
        self.0
    }

    pub fn num_vertices(self) -> u64 {
        1u64 << self.0
    }

    pub fn num_edges(self) -> u64 {
        u64::from(self.0) << (self.0 - 1)
    }

    pub fn contains(self, v: VertexLabel) -> bool {
        v < self.num_vertices()
    }

    fn check(self, v: VertexLabel) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            invalid(format!("label {v} out of range for Q_{}", self.0))
        }
    }
}

impl fmt::Display for HypercubeDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q_{}", self.0)
    }
}

/// An undirected hypercube edge, stored with the smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    lo: VertexLabel,
    hi: VertexLabel,
}

impl Edge {
    /// Builds the edge `uv`; `u` and `v` must differ in exactly one bit.
    pub fn new(u: VertexLabel, v: VertexLabel) -> Result<Self> {
        if (u ^ v).count_ones() != 1 {
            return invalid(format!("{u} and {v} are not hypercube neighbours"));
        }
        Ok(Self::new_unchecked(u, v))
    }

    pub(crate) fn new_unchecked(u: VertexLabel, v: VertexLabel) -> Self {
        if u < v {
            Edge { lo: u, hi: v }
        } else {
            Edge { lo: v, hi: u }
        }
    }

    pub fn endpoints(self) -> (VertexLabel, VertexLabel) {
        (self.lo, self.hi)
    }

    /// Index of the coordinate (bit) the edge changes.
    pub fn direction(self) -> u32 {
        (self.lo ^ self.hi).trailing_zeros()
    }

    /// Dense index in `0..n * 2^n`: the lower endpoint times `n` plus the
    /// direction. Only half of the slots are ever used.
    pub fn slot(self, n: u32) -> usize {
        self.lo as usize * n as usize + self.direction() as usize
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.lo, self.hi)
    }
}

pub fn are_adjacent(u: VertexLabel, v: VertexLabel, n: HypercubeDim) -> Result<bool> {
    n.check(u)?;
    n.check(v)?;
    Ok((u ^ v).count_ones() == 1)
}

/// All `n * 2^(n-1)` edges of `Q_n`, ordered by lower endpoint then direction.
pub fn hypercube_edges(n: HypercubeDim) -> Vec<Edge> {
    let dim = n.get();
    let mut out = Vec::with_capacity(n.num_edges() as usize);
    for v in 0..n.num_vertices() {
        for bit in 0..dim {
            if v & (1 << bit) == 0 {
                out.push(Edge { lo: v, hi: v | (1 << bit) });
            }
        }
    }
    out
}

/// Position on the 4-cycle `Q_2`, visited in the order `00, 01, 11, 10`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct C4Index(u8);

impl C4Index {
    pub fn new(j: u8) -> Result<Self> {
        if j > 3 {
            return invalid(format!("C4 index must be in 0..=3, got {j}"));
        }
        Ok(C4Index(j))
    }

    /// Reduces any integer mod 4.
    pub fn wrapping(j: usize) -> Self {
        C4Index((j % 4) as u8)
    }

    pub fn get(self) -> u8 {
        self.0
    }

    pub fn next(self) -> Self {
        C4Index((self.0 + 1) % 4)
    }
}

/// The 2-bit label of a `C_4` position (`00, 01, 11, 10` as strings, i.e.
/// values `0, 2, 3, 1`).
pub fn gray2(j: C4Index) -> VertexLabel {
    const LABELS: [VertexLabel; 4] = [0b00, 0b10, 0b11, 0b01];
    LABELS[j.0 as usize]
}

/// The `C_4` order as a cycle of `Q_2`.
pub fn c4_cycle() -> [VertexLabel; 4] {
    [0, 1, 2, 3].map(|j| gray2(C4Index(j)))
}

/// Concatenation of labels of a product `Q_a □ Q_b`: the left factor occupies
/// the low `a` bits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ProductEmbedding {
    left_bits: u32,
    right_bits: u32,
}

impl ProductEmbedding {
    pub fn new(left_bits: u32, right_bits: u32) -> Result<Self> {
        if left_bits == 0 || right_bits == 0 || left_bits + right_bits > MAX_DIM {
            return invalid(format!(
                "product embedding needs positive widths with sum <= {MAX_DIM}, got {left_bits}+{right_bits}"
            ));
        }
        Ok(ProductEmbedding { left_bits, right_bits })
    }

    pub fn left_bits(self) -> u32 {
        self.left_bits
    }

    pub fn right_bits(self) -> u32 {
        self.right_bits
    }

    pub fn host(self) -> HypercubeDim {
        HypercubeDim(self.left_bits + self.right_bits)
    }

    pub fn embed(self, u: VertexLabel, v: VertexLabel) -> Result<VertexLabel> {
        if u >> self.left_bits != 0 || v >> self.right_bits != 0 {
            return invalid(format!(
                "({u}, {v}) out of range for a {}+{} bit product",
                self.left_bits, self.right_bits
            ));
        }
        Ok(self.map(u, v))
    }

    /// Unchecked concatenation for hot loops whose inputs are already known
    /// to be in range.
    #[inline]
    pub fn map(self, u: VertexLabel, v: VertexLabel) -> VertexLabel {
        u | (v << self.left_bits)
    }

    /// Inverse of [`ProductEmbedding::map`].
    pub fn split(self, w: VertexLabel) -> (VertexLabel, VertexLabel) {
        (w & ((1 << self.left_bits) - 1), w >> self.left_bits)
    }
}

pub fn embed_product(e: ProductEmbedding, u: VertexLabel, v: VertexLabel) -> Result<VertexLabel> {
    e.embed(u, v)
}

/// Parses a binary string whose leftmost character is coordinate 1 (bit 0).
pub fn label_from_coords(s: &str) -> Result<VertexLabel> {
    if s.is_empty() || s.len() > MAX_DIM as usize {
        return invalid(format!("bad coordinate string {s:?}"));
    }
    s.bytes().enumerate().try_fold(0, |acc, (k, b)| match b {
        b'0' => Ok(acc),
        b'1' => Ok(acc | (1 << k)),
        _ => invalid(format!("bad coordinate string {s:?}")),
    })
}

/// Inverse of [`label_from_coords`] for a label of `Q_n`.
pub fn coords_string(v: VertexLabel, n: HypercubeDim) -> String {
    (0..n.get()).map(|k| if v >> k & 1 == 1 { '1' } else { '0' }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dim(n: u32) -> HypercubeDim {
        HypercubeDim::new(n).unwrap()
    }

    #[test]
    fn adjacency_examples() {
        assert!(are_adjacent(0b0000, 0b0001, dim(4)).unwrap());
        assert!(!are_adjacent(0b0000, 0b0011, dim(4)).unwrap());
        let white = label_from_coords("1110").unwrap();
        assert_eq!(white, 7);
        assert!(are_adjacent(white, label_from_coords("1111").unwrap(), dim(4)).unwrap());
        assert!(are_adjacent(16, 0, dim(4)).is_err());
    }

    #[test]
    fn edge_counts() {
        assert_eq!(hypercube_edges(dim(2)).len(), 4);
        assert_eq!(hypercube_edges(dim(4)).len(), 32);
        assert_eq!(hypercube_edges(dim(6)).len(), 192);
        for n in 1..=14 {
            let d = dim(n);
            let edges = hypercube_edges(d);
            assert_eq!(edges.len() as u64, d.num_edges());
            assert!(edges.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn gray2_order() {
        let c = c4_cycle();
        assert_eq!(coords_string(c[0], dim(2)), "00");
        assert_eq!(coords_string(c[1], dim(2)), "01");
        assert_eq!(coords_string(c[2], dim(2)), "11");
        assert_eq!(coords_string(c[3], dim(2)), "10");
        for j in 0..4u8 {
            let a = gray2(C4Index::new(j).unwrap());
            let b = gray2(C4Index::new(j).unwrap().next());
            assert!(are_adjacent(a, b, dim(2)).unwrap());
        }
        assert!(C4Index::new(4).is_err());
    }

    #[test]
    fn embedding_examples() {
        let e = ProductEmbedding::new(4, 2).unwrap();
        assert_eq!(e.embed(0, 0).unwrap(), 0);
        let u = label_from_coords("0011").unwrap();
        let v = label_from_coords("10").unwrap();
        assert_eq!(e.embed(u, v).unwrap(), 28);
        assert_eq!(label_from_coords("001110").unwrap(), 28);
        assert!(e.embed(16, 0).is_err());
        assert!(e.embed(0, 4).is_err());
        assert_eq!(e.split(28), (u, v));
    }

    #[test]
    fn embedding_is_bijective_for_2_2() {
        let e = ProductEmbedding::new(2, 2).unwrap();
        let mut seen = [false; 16];
        for u in 0..4 {
            for v in 0..4 {
                let w = e.embed(u, v).unwrap() as usize;
                assert!(!seen[w]);
                seen[w] = true;
            }
        }
        assert!(seen.iter().all(|&s| s));
    }

    #[test]
    fn product_edges_map_onto_hypercube_edges() {
        // Q_a □ Q_b built from factor adjacency lands exactly on E(Q_{a+b}).
        for (a, b) in [(1, 1), (2, 2), (4, 2), (2, 3)] {
            let e = ProductEmbedding::new(a, b).unwrap();
            let mut product = Vec::new();
            for edge in hypercube_edges(dim(a)) {
                let (u, w) = edge.endpoints();
                for v in 0..1u64 << b {
                    let ed = Edge::new(e.map(u, v), e.map(w, v)).unwrap();
                    assert!(ed.direction() < a, "horizontal edges change low bits");
                    product.push(ed);
                }
            }
            for edge in hypercube_edges(dim(b)) {
                let (v, w) = edge.endpoints();
                for u in 0..1u64 << a {
                    let ed = Edge::new(e.map(u, v), e.map(u, w)).unwrap();
                    assert!(ed.direction() >= a, "vertical edges change high bits");
                    product.push(ed);
                }
            }
            product.sort();
            assert_eq!(product, hypercube_edges(e.host()));
        }
    }

    #[test]
    fn dimension_bounds() {
        assert!(HypercubeDim::new(0).is_err());
        assert!(HypercubeDim::even(3).is_err());
        assert!(HypercubeDim::even(4).is_ok());
    }
}
