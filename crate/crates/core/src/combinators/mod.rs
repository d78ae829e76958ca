//! Product constructions that build decompositions of `G □ H` from
//! decompositions of the factors.
//!
//! All combinators work on hypercube labels through a [`ProductEmbedding`]:
//! the left factor `G = Q_a` takes the low bits and the right factor
//! `H = Q_b` the high bits.

mod three_cycle;

pub use three_cycle::{as_product, as_product_with, HamPair, Layered, SearchConfig, StartMode};

use std::collections::BTreeMap;

use crate::decomposition::{CycleSeq, PartitionedDecomposition};
use crate::error::{invalid, Result};
use crate::hypercube::{gray2, C4Index, Edge, HypercubeDim, ProductEmbedding, VertexLabel};
use crate::torus::{kotzig_torus, lemma_8ell};
use crate::verify::{check_cycle, check_vertex_partition_in};

/// A subgraph of `Q_n` given by its edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningPart {
    host: HypercubeDim,
    edges: Vec<Edge>,
    spanning: bool,
}

impl SpanningPart {
    /// Edges are sorted and deduplicated.
    pub fn new(host: HypercubeDim, mut edges: Vec<Edge>) -> Result<Self> {
        if let Some(e) = edges.iter().find(|e| !host.contains(e.endpoints().1)) {
            return invalid(format!("edge {e} is outside {host}"));
        }
        edges.sort_unstable();
        edges.dedup();
        let mut seen = vec![false; host.num_vertices() as usize];
        for e in &edges {
            let (u, v) = e.endpoints();
            seen[u as usize] = true;
            seen[v as usize] = true;
        }
        let spanning = seen.iter().all(|&s| s);
        Ok(SpanningPart { host, edges, spanning })
    }

    /// The union of the edges of `cycles`.
    pub fn from_cycles<'a>(host: HypercubeDim, cycles: impl IntoIterator<Item = &'a CycleSeq>) -> Result<Self> {
        let mut edges = Vec::new();
        for c in cycles {
            for (u, v) in c.steps() {
                edges.push(Edge::new(u, v)?);
            }
        }
        Self::new(host, edges)
    }

    pub fn host(&self) -> HypercubeDim {
        self.host
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn is_spanning(&self) -> bool {
        self.spanning
    }
}

fn check_factor(part: &SpanningPart, bits: u32, side: &str) -> Result<()> {
    if part.host.get() != bits {
        return invalid(format!("{side} part lives in {} but the embedding expects Q_{bits}", part.host));
    }
    if !part.spanning {
        return invalid(format!("{side} part is not spanning"));
    }
    Ok(())
}

/// Edges of `G_i □ H_i` for each `i`. When the `G_i` decompose `G` and the
/// `H_i` decompose `H`, the results decompose `G □ H`.
pub fn aot_product(parts_g: &[SpanningPart], parts_h: &[SpanningPart], e: ProductEmbedding) -> Result<Vec<SpanningPart>> {
    if parts_g.len() != parts_h.len() {
        return invalid(format!("{} parts of G but {} parts of H", parts_g.len(), parts_h.len()));
    }
    let gv = 1u64 << e.left_bits();
    let hv = 1u64 << e.right_bits();
    parts_g
        .iter()
        .zip(parts_h)
        .map(|(g, h)| {
            check_factor(g, e.left_bits(), "G")?;
            check_factor(h, e.right_bits(), "H")?;
            let mut edges = Vec::with_capacity(g.edges.len() * hv as usize + h.edges.len() * gv as usize);
            for ge in &g.edges {
                let (u, w) = ge.endpoints();
                edges.extend((0..hv).map(|v| Edge::new_unchecked(e.map(u, v), e.map(w, v))));
            }
            for he in &h.edges {
                let (v, w) = he.endpoints();
                edges.extend((0..gv).map(|u| Edge::new_unchecked(e.map(u, v), e.map(u, w))));
            }
            SpanningPart::new(e.host(), edges)
        })
        .collect()
}

/// For a family of cycles partitioning `V(G)`, the edge sets `E(C □ H)`, one
/// per cycle. Horizontal edges go to the cycle that owns them; vertical edges
/// at `(u, v)` go to the cycle through `u`.
pub fn one_set_product(family: &[CycleSeq], h: &SpanningPart, e: ProductEmbedding) -> Result<Vec<Vec<Edge>>> {
    let g = HypercubeDim::new(e.left_bits())?;
    if h.host.get() != e.right_bits() {
        return invalid(format!("H lives in {} but the embedding expects Q_{}", h.host, e.right_bits()));
    }
    let slices: Vec<&[VertexLabel]> = family.iter().map(CycleSeq::vertices).collect();
    let report = check_vertex_partition_in(&g, &slices, &vec![0; family.len()]);
    if !report.ok() || family.is_empty() {
        return invalid(format!("family does not partition V({g}):\n{report}"));
    }
    for c in family {
        let r = check_cycle(c, g);
        if !r.ok() {
            return invalid(format!("family member is not a cycle of {g}:\n{r}"));
        }
    }
    let hv = 1u64 << e.right_bits();
    Ok(family
        .iter()
        .map(|c| {
            let mut out: Vec<Edge> = c
                .edges()
                .flat_map(|ge| {
                    let (u, w) = ge.endpoints();
                    (0..hv).map(move |v| Edge::new_unchecked(e.map(u, v), e.map(w, v)))
                })
                .collect();
            for &u in c.vertices() {
                for he in &h.edges {
                    let (v, w) = he.endpoints();
                    out.push(Edge::new_unchecked(e.map(u, v), e.map(u, w)));
                }
            }
            out.sort_unstable();
            out
        })
        .collect())
}

/// Joins decompositions of the parts of a decomposition of `G` into one
/// decomposition of `G`. Set ids of `inner[j]` are shifted past those of
/// `inner[0..j]`.
pub fn compose_partitionable(outer: &[SpanningPart], inner: Vec<PartitionedDecomposition>) -> Result<PartitionedDecomposition> {
    if outer.len() != inner.len() || outer.is_empty() {
        return invalid(format!("{} parts but {} inner decompositions", outer.len(), inner.len()));
    }
    let host = outer[0].host;
    let len = inner[0].cycle_length();
    let mut cycles = Vec::new();
    let mut set_of = Vec::new();
    let mut offset = 0;
    for (j, (part, d)) in outer.iter().zip(inner).enumerate() {
        if part.host != host || d.host() != host {
            return invalid(format!("part {j} is not in {host}"));
        }
        if !part.spanning {
            return invalid(format!("part {j} is not spanning"));
        }
        if d.cycle_length() != len {
            return invalid(format!("part {j} uses cycle length {}, expected {len}", d.cycle_length()));
        }
        let mut covered: Vec<Edge> = d.cycles().iter().flat_map(CycleSeq::edges).collect();
        covered.sort_unstable();
        if covered != part.edges {
            return invalid(format!("inner decomposition {j} does not decompose its part"));
        }
        let k = d.num_sets();
        let (_, _, cs, ss) = d.into_parts();
        cycles.extend(cs);
        set_of.extend(ss.into_iter().map(|s| s + offset));
        offset += k;
    }
    PartitionedDecomposition::new(host, len, cycles, set_of)
}

/// Partition sets of `d` in id order. Ids must be exactly `0..k`.
fn contiguous_sets(d: &PartitionedDecomposition) -> Result<Vec<Vec<&CycleSeq>>> {
    let sets: BTreeMap<usize, Vec<&CycleSeq>> = d.sets();
    if sets.keys().copied().ne(0..sets.len()) {
        return invalid("partition-set ids must be 0..k without gaps");
    }
    Ok(sets.into_values().collect())
}

/// Decomposes `G □ H` into cycles of length `l * |V(H)|` from a partitionable
/// decomposition of `G` with `m` sets of `l`-cycles and a decomposition of
/// `H` into `m + n'` Hamiltonian cycles with `0 <= n' <= m`.
///
/// The `i`-th part of `H` is `h[i]`, joined with `h[m + i]` when `i < n'`.
/// For each cycle `C` of set `i`, `C □ h[i]` is a torus split into two
/// Hamiltonian cycles, and `C □ (h[i] ∪ h[m + i])` is split into three by
/// [`as_product`]. Each colour across the cycles of one set forms a new
/// partition set, so the result has `2m + n'` sets.
pub fn hh_product(g: &PartitionedDecomposition, h: &[CycleSeq], e: ProductEmbedding) -> Result<PartitionedDecomposition> {
    if g.host().get() != e.left_bits() {
        return invalid(format!("G decomposition lives in {} but the embedding expects Q_{}", g.host(), e.left_bits()));
    }
    let hd = HypercubeDim::new(e.right_bits())?;
    let sets = contiguous_sets(g)?;
    let m = sets.len();
    if m == 0 || h.len() < m || h.len() > 2 * m {
        return invalid(format!("need between {m} and {} Hamiltonian cycles of H, got {}", 2 * m, h.len()));
    }
    let hv = hd.num_vertices() as usize;
    for (k, c) in h.iter().enumerate() {
        let r = check_cycle(c, hd);
        if !r.ok() || c.len() != hv {
            return invalid(format!("H cycle {k} is not a Hamiltonian cycle of {hd}:\n{r}"));
        }
    }
    let extra = h.len() - m;
    let ell = g.cycle_length();
    let mut outer = Vec::with_capacity(m);
    let mut inner = Vec::with_capacity(m);
    for (i, set) in sets.iter().enumerate() {
        let h_part: Vec<&CycleSeq> = if i < extra { vec![&h[i], &h[m + i]] } else { vec![&h[i]] };
        let gp = SpanningPart::from_cycles(g.host(), set.iter().copied())?;
        let hp = SpanningPart::from_cycles(hd, h_part.iter().copied())?;
        outer.extend(aot_product(&[gp], &[hp], e)?);
        let d = if i < extra {
            let pair = HamPair::new(&h[i], &h[m + i])?;
            let split = as_product(&pair, ell)?;
            let mut out: Vec<Vec<CycleSeq>> = (0..3).map(|_| Vec::with_capacity(set.len())).collect();
            for c in set {
                let cv = c.vertices();
                for (k, cyc) in split.iter().enumerate() {
                    out[k].push(CycleSeq::new(cyc.iter().map(|&(u, z)| e.map(cv[z], u)).collect()));
                }
            }
            out
        } else {
            let torus = kotzig_torus(ell, hv)?;
            let hv_labels = h[i].vertices();
            let mut out: Vec<Vec<CycleSeq>> = (0..2).map(|_| Vec::with_capacity(set.len())).collect();
            for c in set {
                let mapped = torus.map_to_labels(c.vertices(), hv_labels, e);
                for (cyc, &s) in mapped.into_iter().zip(&torus.set_of) {
                    out[s].push(cyc);
                }
            }
            out
        };
        inner.push(PartitionedDecomposition::from_sets(e.host(), ell * hv, d));
    }
    compose_partitionable(&outer, inner)
}

/// Decomposes `G □ C_4` into cycles of length `4l` from a partitionable
/// decomposition of `G` into `4l`-cycles with `k` sets.
///
/// Sets `0..k-1` are copied onto each of the four levels. Every cycle `C` of
/// the last set, together with all vertical edges at its vertices, forms a
/// torus `C □ C_4` that is split into `4l`-cycles in two partition sets; the
/// result has `k + 1` sets.
pub fn cart_times_c4(g: &PartitionedDecomposition) -> Result<PartitionedDecomposition> {
    let len = g.cycle_length();
    if len < 4 || len % 4 != 0 {
        return invalid(format!("cycle length {len} is not a positive multiple of 4"));
    }
    let ell = len / 4;
    let e = ProductEmbedding::new(g.host().get(), 2)?;
    let sets = contiguous_sets(g)?;
    let k = sets.len();
    if k == 0 {
        return invalid("decomposition has no cycles");
    }
    if let Some(c) = g.cycles().iter().find(|c| c.len() != len) {
        return invalid(format!("cycle of length {} in a decomposition declared as {len}", c.len()));
    }
    let levels: Vec<VertexLabel> = (0..4).map(|j| gray2(C4Index::wrapping(j))).collect();
    let mut out: Vec<Vec<CycleSeq>> = Vec::with_capacity(k + 1);
    for set in &sets[..k - 1] {
        let mut copies = Vec::with_capacity(4 * set.len());
        for c in set {
            for &lv in &levels {
                copies.push(CycleSeq::new(c.vertices().iter().map(|&u| e.map(u, lv)).collect()));
            }
        }
        out.push(copies);
    }
    let torus = lemma_8ell(ell, ell)?;
    let (mut red, mut blue) = (Vec::new(), Vec::new());
    for c in &sets[k - 1] {
        for (cyc, &s) in torus.map_to_labels(c.vertices(), &levels, e).into_iter().zip(&torus.set_of) {
            if s == 0 {
                red.push(cyc);
            } else {
                blue.push(cyc);
            }
        }
    }
    out.push(red);
    out.push(blue);
    Ok(PartitionedDecomposition::from_sets(e.host(), len, out))
}
