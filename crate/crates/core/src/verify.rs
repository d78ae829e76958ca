//! Certificate checking.
//!
//! Everything here consumes only finished cycles and the host description.
//! No construction state is consulted, so these checks are the acceptance
//! authority for every builder in the crate.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;

use crate::decomposition::{CycleSeq, PartitionedDecomposition};
use crate::hypercube::{HypercubeDim, VertexLabel};
use crate::torus::TorusCoord;

/// Kind of failed check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    /// A vertex outside the host.
    Range,
    /// Cycle too short, odd, or not the declared length.
    Length,
    /// A vertex repeated inside one cycle.
    Distinctness,
    /// Consecutive vertices that are not adjacent in the host.
    Adjacency,
    /// An edge used by more than one cycle (or twice by one).
    Disjointness,
    /// A host edge used by no cycle.
    Coverage,
    /// A vertex covered twice within one partition set.
    VertexOverlap,
    /// A vertex missed by a partition set.
    VertexUndercoverage,
    /// Partition-set ids that skip a value or a per-cycle id list of the
    /// wrong length.
    SetIndex,
    /// Header fields disagree with the cycles or with caller expectations.
    Expectation,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Check::Range => "range",
            Check::Length => "length",
            Check::Distinctness => "distinctness",
            Check::Adjacency => "adjacency",
            Check::Disjointness => "disjointness",
            Check::Coverage => "coverage",
            Check::VertexOverlap => "vertex-overlap",
            Check::VertexUndercoverage => "vertex-undercoverage",
            Check::SetIndex => "set-index",
            Check::Expectation => "expectation",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Failure {
    pub check: Check,
    pub detail: String,
}

/// Outcome of one or more checks. Checks never stop at the first problem.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct VerificationReport {
    failures: Vec<Failure>,
}

/// Per-check cap on itemised failures; the rest are summarised.
const MAX_ITEMS: usize = 16;

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failures(&self) -> &[Failure] {
        &self.failures
    }

    pub fn has(&self, check: Check) -> bool {
        self.failures.iter().any(|f| f.check == check)
    }

    pub fn push(&mut self, check: Check, detail: impl Into<String>) {
        self.failures.push(Failure { check, detail: detail.into() });
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.failures.extend(other.failures);
    }

    fn push_capped(&mut self, check: Check, items: Vec<String>, what: &str) {
        let total = items.len();
        for item in items.into_iter().take(MAX_ITEMS) {
            self.push(check, item);
        }
        if total > MAX_ITEMS {
            self.push(check, format!("... {} more {what}", total - MAX_ITEMS));
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.ok() {
            return writeln!(f, "ok");
        }
        for fail in &self.failures {
            writeln!(f, "FAIL [{}] {}", fail.check, fail.detail)?;
        }
        Ok(())
    }
}

/// A finite simple graph with dense vertex and edge indices.
pub trait HostGraph {
    type Vertex: Copy + fmt::Debug;

    fn num_vertices(&self) -> usize;
    fn vertex_index(&self, v: Self::Vertex) -> Option<usize>;
    /// Upper bound on edge slot indices.
    fn num_edge_slots(&self) -> usize;
    /// Slot of the edge `uv`, or `None` if the host has no such edge.
    fn edge_slot(&self, u: Self::Vertex, v: Self::Vertex) -> Option<usize>;
    fn num_edges(&self) -> usize;
    /// Describes an unused slot for reports.
    fn describe_slot(&self, slot: usize) -> String;
    /// Whether `slot` is a real edge (hosts may leave gaps).
    fn is_edge_slot(&self, slot: usize) -> bool;
}

impl HostGraph for HypercubeDim {
    type Vertex = VertexLabel;

    fn num_vertices(&self) -> usize {
        HypercubeDim::num_vertices(*self) as usize
    }

    fn vertex_index(&self, v: VertexLabel) -> Option<usize> {
        self.contains(v).then_some(v as usize)
    }

    fn num_edge_slots(&self) -> usize {
        self.get() as usize * HypercubeDim::num_vertices(*self) as usize
    }

    fn edge_slot(&self, u: VertexLabel, v: VertexLabel) -> Option<usize> {
        let x = u ^ v;
        if !self.contains(u) || !self.contains(v) || x.count_ones() != 1 {
            return None;
        }
        Some(u.min(v) as usize * self.get() as usize + x.trailing_zeros() as usize)
    }

    fn num_edges(&self) -> usize {
        HypercubeDim::num_edges(*self) as usize
    }

    fn describe_slot(&self, slot: usize) -> String {
        let n = self.get() as usize;
        let lo = (slot / n) as u64;
        format!("{{{}, {}}}", lo, lo | 1 << (slot % n))
    }

    fn is_edge_slot(&self, slot: usize) -> bool {
        let n = self.get() as usize;
        (slot / n) as u64 & (1 << (slot % n)) == 0
    }
}

/// The torus `C_width □ C_height` on [`TorusCoord`] vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TorusHost {
    pub width: usize,
    pub height: usize,
}

impl TorusHost {
    /// Both cycle lengths must be at least 3.
    pub fn new(width: usize, height: usize) -> Option<Self> {
        (width >= 3 && height >= 3).then_some(TorusHost { width, height })
    }

    fn idx(&self, v: TorusCoord) -> usize {
        v.y * self.width + v.x
    }
}

impl HostGraph for TorusHost {
    type Vertex = TorusCoord;

    fn num_vertices(&self) -> usize {
        self.width * self.height
    }

    fn vertex_index(&self, v: TorusCoord) -> Option<usize> {
        (v.x < self.width && v.y < self.height).then(|| self.idx(v))
    }

    fn num_edge_slots(&self) -> usize {
        2 * self.num_vertices()
    }

    fn edge_slot(&self, u: TorusCoord, v: TorusCoord) -> Option<usize> {
        self.vertex_index(u)?;
        self.vertex_index(v)?;
        let (w, h) = (self.width, self.height);
        if u.y == v.y {
            if (u.x + 1) % w == v.x {
                return Some(2 * self.idx(u));
            }
            if (v.x + 1) % w == u.x {
                return Some(2 * self.idx(v));
            }
        } else if u.x == v.x {
            if (u.y + 1) % h == v.y {
                return Some(2 * self.idx(u) + 1);
            }
            if (v.y + 1) % h == u.y {
                return Some(2 * self.idx(v) + 1);
            }
        }
        None
    }

    fn num_edges(&self) -> usize {
        2 * self.num_vertices()
    }

    fn describe_slot(&self, slot: usize) -> String {
        let i = slot / 2;
        let (x, y) = (i % self.width, i / self.width);
        if slot % 2 == 0 {
            format!("({x},{y})-({},{y})", (x + 1) % self.width)
        } else {
            format!("({x},{y})-({x},{})", (y + 1) % self.height)
        }
    }

    fn is_edge_slot(&self, _slot: usize) -> bool {
        true
    }
}

/// A graph given by an explicit edge list.
#[derive(Debug, Clone)]
pub struct ExplicitGraph<V> {
    vertices: HashMap<V, usize>,
    edges: HashMap<(usize, usize), usize>,
    names: Vec<(V, V)>,
}

impl<V: Copy + Eq + Hash + Ord + fmt::Debug> ExplicitGraph<V> {
    /// Loops and repeated edges are dropped.
    pub fn from_edges(edges: impl IntoIterator<Item = (V, V)>) -> Self {
        let mut g = ExplicitGraph { vertices: HashMap::new(), edges: HashMap::new(), names: Vec::new() };
        for (u, v) in edges {
            if u == v {
                continue;
            }
            let next = g.vertices.len();
            let iu = *g.vertices.entry(u).or_insert(next);
            let next = g.vertices.len();
            let iv = *g.vertices.entry(v).or_insert(next);
            let key = (iu.min(iv), iu.max(iv));
            if !g.edges.contains_key(&key) {
                g.edges.insert(key, g.names.len());
                g.names.push((u.min(v), u.max(v)));
            }
        }
        g
    }
}

impl<V: Copy + Eq + Hash + fmt::Debug> HostGraph for ExplicitGraph<V> {
    type Vertex = V;

    fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    fn vertex_index(&self, v: V) -> Option<usize> {
        self.vertices.get(&v).copied()
    }

    fn num_edge_slots(&self) -> usize {
        self.names.len()
    }

    fn edge_slot(&self, u: V, v: V) -> Option<usize> {
        let (iu, iv) = (self.vertex_index(u)?, self.vertex_index(v)?);
        self.edges.get(&(iu.min(iv), iu.max(iv))).copied()
    }

    fn num_edges(&self) -> usize {
        self.names.len()
    }

    fn describe_slot(&self, slot: usize) -> String {
        let (u, v) = self.names[slot];
        format!("{u:?}-{v:?}")
    }

    fn is_edge_slot(&self, _slot: usize) -> bool {
        true
    }
}

/// Checks that `cycle` is a cycle of `host` with at least `min_len` distinct
/// vertices.
pub fn check_cycle_in<G: HostGraph>(host: &G, cycle: &[G::Vertex], min_len: usize) -> VerificationReport {
    let mut report = VerificationReport::default();
    let n = cycle.len();
    if n < min_len {
        report.push(Check::Length, format!("cycle has {n} vertices, need at least {min_len}"));
        return report;
    }
    let mut seen = vec![false; host.num_vertices()];
    let mut dup = Vec::new();
    let mut range = Vec::new();
    for &v in cycle {
        match host.vertex_index(v) {
            None => range.push(format!("vertex {v:?} not in host")),
            Some(i) if seen[i] => dup.push(format!("vertex {v:?} repeated")),
            Some(i) => seen[i] = true,
        }
    }
    report.push_capped(Check::Range, range, "out-of-range vertices");
    report.push_capped(Check::Distinctness, dup, "repeated vertices");
    let bad: Vec<String> = (0..n)
        .map(|k| (cycle[k], cycle[(k + 1) % n]))
        .filter(|&(u, v)| host.edge_slot(u, v).is_none())
        .map(|(u, v)| format!("{u:?} and {v:?} are not adjacent"))
        .collect();
    report.push_capped(Check::Adjacency, bad, "non-adjacent steps");
    report
}

/// Checks that the cycles are valid and their edge sets partition `E(host)`.
pub fn check_edge_partition_in<G: HostGraph>(
    host: &G,
    cycles: &[&[G::Vertex]],
    min_len: usize,
) -> VerificationReport {
    let mut report = VerificationReport::default();
    let mut uses = vec![0u32; host.num_edge_slots()];
    let mut dup = Vec::new();
    for (id, cycle) in cycles.iter().enumerate() {
        let mut r = check_cycle_in(host, cycle, min_len);
        for f in &mut r.failures {
            f.detail = format!("cycle {id}: {}", f.detail);
        }
        report.merge(r);
        let n = cycle.len();
        for k in 0..n {
            if let Some(slot) = host.edge_slot(cycle[k], cycle[(k + 1) % n]) {
                uses[slot] += 1;
                if uses[slot] == 2 {
                    dup.push(format!("edge {} used more than once (cycle {id})", host.describe_slot(slot)));
                }
            }
        }
    }
    report.push_capped(Check::Disjointness, dup, "repeated edges");
    let missing: Vec<usize> = (0..uses.len()).filter(|&s| uses[s] == 0 && host.is_edge_slot(s)).collect();
    if !missing.is_empty() {
        report.push(Check::Coverage, format!("{} host edges not covered", missing.len()));
        let items = missing.iter().map(|&s| format!("edge {} not covered", host.describe_slot(s))).collect();
        report.push_capped(Check::Coverage, items, "uncovered edges");
    }
    report
}

/// Checks that within each set id the cycles' vertex sets partition
/// `V(host)`. Set ids must be `0..k` with no gaps.
pub fn check_vertex_partition_in<G: HostGraph>(
    host: &G,
    cycles: &[&[G::Vertex]],
    set_of: &[usize],
) -> VerificationReport {
    let mut report = VerificationReport::default();
    if cycles.len() != set_of.len() {
        report.push(Check::SetIndex, format!("{} cycles but {} set ids", cycles.len(), set_of.len()));
        return report;
    }
    let k = set_of.iter().max().map_or(0, |m| m + 1);
    let mut members = vec![Vec::new(); k];
    for (c, &s) in set_of.iter().enumerate() {
        members[s].push(c);
    }
    for (s, m) in members.iter().enumerate() {
        if m.is_empty() {
            report.push(Check::SetIndex, format!("partition set {s} is empty"));
        }
    }
    for (s, m) in members.iter().enumerate().filter(|(_, m)| !m.is_empty()) {
        let mut count = vec![0u32; host.num_vertices()];
        for &c in m {
            for &v in cycles[c] {
                if let Some(i) = host.vertex_index(v) {
                    count[i] += 1;
                }
            }
        }
        let over = count.iter().filter(|&&c| c > 1).count();
        let under = count.iter().filter(|&&c| c == 0).count();
        if over > 0 {
            report.push(Check::VertexOverlap, format!("partition set {s}: {over} vertices covered more than once"));
        }
        if under > 0 {
            report.push(Check::VertexUndercoverage, format!("partition set {s}: {under} vertices not covered"));
        }
    }
    report
}

fn cycle_slices(d: &PartitionedDecomposition) -> Vec<&[VertexLabel]> {
    d.cycles().iter().map(CycleSeq::vertices).collect()
}

/// Distinct vertices, even length at least 4, cyclic adjacency in `Q_n`.
pub fn check_cycle(c: &CycleSeq, n: HypercubeDim) -> VerificationReport {
    let mut report = check_cycle_in(&n, c.vertices(), 4);
    if c.len() % 2 == 1 {
        report.push(Check::Length, format!("cycle has odd length {}", c.len()));
    }
    report
}

/// All cycles valid, all of the declared power-of-two length, and their edges
/// partition `E(Q_n)` exactly.
pub fn check_decomposition(d: &PartitionedDecomposition) -> VerificationReport {
    let mut report = VerificationReport::default();
    let len = d.cycle_length();
    if len < 4 || !len.is_power_of_two() {
        report.push(Check::Length, format!("declared cycle length {len} is not a power of two >= 4"));
    }
    let wrong: Vec<String> = d
        .cycles()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() != len)
        .map(|(id, c)| format!("cycle {id} has length {}, expected {len}", c.len()))
        .collect();
    report.push_capped(Check::Length, wrong, "cycles of the wrong length");
    report.merge(check_edge_partition_in(&d.host(), &cycle_slices(d), 4));
    report
}

/// Within each partition set, cycle vertex sets are pairwise disjoint and
/// cover all `2^n` vertices.
pub fn check_partitionable(d: &PartitionedDecomposition) -> VerificationReport {
    check_vertex_partition_in(&d.host(), &cycle_slices(d), d.set_of())
}

/// The three checks together.
pub fn check_certificate(d: &PartitionedDecomposition) -> VerificationReport {
    let mut report = check_decomposition(d);
    report.merge(check_partitionable(d));
    report
}

/// Checks a decomposition of the torus `C_width □ C_height` whose cycles are
/// tagged with set ids.
pub fn check_torus_decomposition(
    width: usize,
    height: usize,
    cycles: &[Vec<TorusCoord>],
    set_of: &[usize],
) -> VerificationReport {
    let Some(host) = TorusHost::new(width, height) else {
        let mut r = VerificationReport::default();
        r.push(Check::Range, format!("torus {width}x{height} needs both sides >= 3"));
        return r;
    };
    let slices: Vec<&[TorusCoord]> = cycles.iter().map(Vec::as_slice).collect();
    let mut report = check_edge_partition_in(&host, &slices, 3);
    report.merge(check_vertex_partition_in(&host, &slices, set_of));
    report
}
