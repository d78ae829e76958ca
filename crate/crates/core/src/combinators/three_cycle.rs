//! Hamiltonian decomposition of `G □ C_c` for a 4-regular `G` given as the
//! union of two edge-disjoint Hamiltonian cycles.
//!
//! The product is 6-regular. The search keeps a proper 3-edge-colouring in
//! which every colour class is 2-factor (a disjoint union of cycles) and
//! repeatedly exchanges colours on a 4-cycle `a b d e` whose sides alternate
//! between two colours `P` and `Q`. Exchanging swaps which colour owns
//! `ab, de` and `bd, ea`, so both classes remain 2-factors; the number of
//! cycles in each class changes by -1, 0 or +1 depending on where the
//! removed edges sit. Moves that lower the total count are taken first,
//! otherwise a random count-neutral move is made. The search stops once all
//! three classes are single cycles.
//!
//! Every returned decomposition is re-checked against the product graph.

use std::collections::{BTreeSet, HashMap};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::decomposition::CycleSeq;
use crate::error::{invalid, Error, Result};
use crate::hypercube::VertexLabel;
use crate::torus::kotzig_torus;
use crate::verify::{check_edge_partition_in, ExplicitGraph};

/// Two edge-disjoint Hamiltonian cycles on a common vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamPair {
    first: Vec<VertexLabel>,
    second: Vec<VertexLabel>,
}

impl HamPair {
    pub fn new(first: &CycleSeq, second: &CycleSeq) -> Result<Self> {
        let n = first.len();
        if n < 5 || second.len() != n {
            return invalid(format!(
                "Hamiltonian pair needs two cycles of equal length >= 5, got {} and {}",
                first.len(),
                second.len()
            ));
        }
        let a: BTreeSet<_> = first.vertices().iter().copied().collect();
        let b: BTreeSet<_> = second.vertices().iter().copied().collect();
        if a.len() != n || b.len() != n {
            return invalid("Hamiltonian pair cycles must not repeat vertices");
        }
        if a != b {
            return invalid("Hamiltonian pair cycles must share their vertex set");
        }
        let key = |(u, v): (VertexLabel, VertexLabel)| (u.min(v), u.max(v));
        let ea: BTreeSet<_> = first.steps().map(key).collect();
        if let Some(e) = second.steps().map(key).find(|e| ea.contains(e)) {
            return invalid(format!("Hamiltonian pair cycles share edge {{{}, {}}}", e.0, e.1));
        }
        Ok(HamPair { first: first.vertices().to_vec(), second: second.vertices().to_vec() })
    }

    pub fn first(&self) -> &[VertexLabel] {
        &self.first
    }

    pub fn second(&self) -> &[VertexLabel] {
        &self.second
    }

    pub fn num_vertices(&self) -> usize {
        self.first.len()
    }
}

/// A vertex of `G □ C_c`: a vertex of `G` and a level `0..c`.
pub type Layered = (VertexLabel, usize);

/// How the three colour classes are seeded before the search starts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StartMode {
    /// First cycle `□ C_c` as a two-cycle torus decomposition, second cycle
    /// copied on every level.
    Torus,
    /// First cycle on every level, second cycle on every level, all vertical
    /// edges as the third class.
    Levels,
}

/// Search limits for [`as_product_with`].
#[derive(Debug, Clone, Copy)]
pub struct SearchConfig {
    pub seeds: u64,
    /// Maximum exchanges per seed, as a multiple of the vertex count.
    pub steps_per_vertex: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { seeds: 8, steps_per_vertex: 4 }
    }
}

/// Three edge-disjoint Hamiltonian cycles of `(H_1 ∪ H_2) □ C_c`, each of
/// length `c * N`.
pub fn as_product(pair: &HamPair, c: usize) -> Result<[Vec<Layered>; 3]> {
    as_product_with(pair, c, SearchConfig::default())
}

pub fn as_product_with(pair: &HamPair, c: usize, cfg: SearchConfig) -> Result<[Vec<Layered>; 3]> {
    if c < 3 {
        return invalid(format!("cycle length c = {c} must be at least 3"));
    }
    let product = Product::new(pair, c);
    let mut modes = Vec::new();
    if let Ok(torus) = kotzig_torus(pair.num_vertices(), c) {
        modes.push((StartMode::Torus, Some(torus)));
    }
    modes.push((StartMode::Levels, None));
    for (mode, torus) in &modes {
        for seed in 0..cfg.seeds {
            let colors = product.start(*mode, torus.as_ref());
            let mut s = Search::new(&product, colors);
            if s.run(seed, cfg.steps_per_vertex * product.num_vertices()) {
                let cycles = s.extract();
                if product.verify(&cycles) {
                    return Ok(cycles);
                }
            }
        }
    }
    Err(Error::UnsupportedInstance(format!(
        "no Hamiltonian decomposition found for a {}-vertex pair times C_{c}",
        pair.num_vertices()
    )))
}

/// Square `a b d e` with edge ids for `ab, bd, de, ea`.
#[derive(Debug, Clone, Copy)]
struct Quad {
    v: [usize; 4],
    e: [usize; 4],
}

struct Product<'a> {
    pair: &'a HamPair,
    n: usize,
    c: usize,
    /// Base-graph edges as position pairs: first cycle, then second.
    base: Vec<(usize, usize)>,
    /// Per product edge: its two endpoints.
    ends: Vec<(usize, usize)>,
    quads: Vec<Quad>,
}

impl<'a> Product<'a> {
    fn new(pair: &'a HamPair, c: usize) -> Self {
        let n = pair.num_vertices();
        let pos: HashMap<VertexLabel, usize> = pair.first.iter().enumerate().map(|(i, &u)| (u, i)).collect();
        let mut base = Vec::with_capacity(2 * n);
        for cyc in [&pair.first, &pair.second] {
            for i in 0..n {
                base.push((pos[&cyc[i]], pos[&cyc[(i + 1) % n]]));
            }
        }
        let mut p = Product { pair, n, c, base, ends: Vec::new(), quads: Vec::new() };
        for z in 0..c {
            for &(u, w) in &p.base {
                p.ends.push((p.vid(u, z), p.vid(w, z)));
            }
        }
        for z in 0..c {
            for u in 0..n {
                p.ends.push((p.vid(u, z), p.vid(u, (z + 1) % c)));
            }
        }
        p.quads = p.build_quads();
        p
    }

    fn num_vertices(&self) -> usize {
        self.n * self.c
    }

    fn vid(&self, u: usize, z: usize) -> usize {
        z * self.n + u
    }

    fn level_edge(&self, z: usize, b: usize) -> usize {
        z * 2 * self.n + b
    }

    fn vertical_edge(&self, u: usize, z: usize) -> usize {
        2 * self.n * self.c + z * self.n + u
    }

    fn build_quads(&self) -> Vec<Quad> {
        let (n, c) = (self.n, self.c);
        let mut quads = Vec::new();
        for (b, &(u, w)) in self.base.iter().enumerate() {
            for z in 0..c {
                let z1 = (z + 1) % c;
                quads.push(Quad {
                    v: [self.vid(u, z), self.vid(w, z), self.vid(w, z1), self.vid(u, z1)],
                    e: [self.level_edge(z, b), self.vertical_edge(w, z), self.level_edge(z1, b), self.vertical_edge(u, z)],
                });
            }
        }
        // 4-cycles inside the base graph, once per vertex set and diagonal.
        let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        for (b, &(u, w)) in self.base.iter().enumerate() {
            adj[u].push((w, b));
            adj[w].push((u, b));
        }
        let mut seen = BTreeSet::new();
        let mut base_quads = Vec::new();
        for a in 0..n {
            for &(b, ab) in &adj[a] {
                for &(d, bd) in &adj[b] {
                    if d == a {
                        continue;
                    }
                    for &(e, de) in &adj[d] {
                        if e == a || e == b {
                            continue;
                        }
                        let Some(&(_, ea)) = adj[e].iter().find(|&&(x, _)| x == a) else { continue };
                        let mut key = [ab, bd, de, ea];
                        key.sort_unstable();
                        if seen.insert(key) {
                            base_quads.push(([a, b, d, e], [ab, bd, de, ea]));
                        }
                    }
                }
            }
        }
        for z in 0..c {
            for (vs, es) in &base_quads {
                quads.push(Quad {
                    v: vs.map(|u| self.vid(u, z)),
                    e: es.map(|b| self.level_edge(z, b)),
                });
            }
        }
        quads
    }

    fn start(&self, mode: StartMode, torus: Option<&crate::torus::TorusDecomposition>) -> Vec<u8> {
        let n = self.n;
        let mut color = vec![0u8; self.ends.len()];
        match (mode, torus) {
            (StartMode::Torus, Some(t)) => {
                for z in 0..self.c {
                    for b in n..2 * n {
                        color[self.level_edge(z, b)] = 2;
                    }
                }
                for (k, cyc) in t.cycles.iter().enumerate() {
                    let len = cyc.len();
                    for i in 0..len {
                        let (p, q) = (cyc[i], cyc[(i + 1) % len]);
                        let id = if p.y == q.y {
                            // Horizontal: base edge `first[x] first[x+1]` has id x.
                            let x = if (p.x + 1) % n == q.x { p.x } else { q.x };
                            self.level_edge(p.y, x)
                        } else {
                            let z = if (p.y + 1) % self.c == q.y { p.y } else { q.y };
                            self.vertical_edge(p.x, z)
                        };
                        color[id] = t.set_of[k] as u8;
                    }
                }
            }
            _ => {
                for z in 0..self.c {
                    for b in n..2 * n {
                        color[self.level_edge(z, b)] = 1;
                    }
                    for u in 0..n {
                        color[self.vertical_edge(u, z)] = 2;
                    }
                }
            }
        }
        color
    }

    fn verify(&self, cycles: &[Vec<Layered>; 3]) -> bool {
        let labels = |i: usize| (self.pair.first[i % self.n], i / self.n);
        let g = ExplicitGraph::from_edges(self.ends.iter().map(|&(p, q)| (labels(p), labels(q))));
        let slices: Vec<&[Layered]> = cycles.iter().map(Vec::as_slice).collect();
        cycles.iter().all(|c| c.len() == self.num_vertices()) && check_edge_partition_in(&g, &slices, 3).ok()
    }
}

struct Search<'a> {
    p: &'a Product<'a>,
    color: Vec<u8>,
    /// Per colour and vertex: the two incident edges of that colour.
    inc: [Vec<[usize; 2]>; 3],
    cid: [Vec<u32>; 3],
    pos: [Vec<u32>; 3],
    lens: [Vec<u32>; 3],
}

impl<'a> Search<'a> {
    fn new(p: &'a Product<'a>, color: Vec<u8>) -> Self {
        let nv = p.num_vertices();
        let mut s = Search {
            p,
            color,
            inc: std::array::from_fn(|_| vec![[usize::MAX; 2]; nv]),
            cid: std::array::from_fn(|_| vec![0; nv]),
            pos: std::array::from_fn(|_| vec![0; nv]),
            lens: std::array::from_fn(|_| Vec::new()),
        };
        for (id, &(a, b)) in p.ends.iter().enumerate() {
            let k = s.color[id] as usize;
            s.attach(k, a, id);
            s.attach(k, b, id);
        }
        s
    }

    fn attach(&mut self, k: usize, v: usize, id: usize) {
        let slot = &mut self.inc[k][v];
        if slot[0] == usize::MAX {
            slot[0] = id;
        } else {
            debug_assert_eq!(slot[1], usize::MAX);
            slot[1] = id;
        }
    }

    fn detach(&mut self, k: usize, v: usize, id: usize) {
        let slot = &mut self.inc[k][v];
        if slot[0] == id {
            slot[0] = slot[1];
        }
        slot[1] = usize::MAX;
    }

    fn other(&self, id: usize, v: usize) -> usize {
        let (a, b) = self.p.ends[id];
        if a == v {
            b
        } else {
            a
        }
    }

    fn next_vertex(&self, k: usize, prev: usize, cur: usize) -> (usize, usize) {
        let [e0, e1] = self.inc[k][cur];
        let a = self.other(e0, cur);
        if a != prev {
            (a, e0)
        } else {
            (self.other(e1, cur), e1)
        }
    }

    fn refresh(&mut self) {
        let nv = self.p.num_vertices();
        for k in 0..3 {
            let mut seen = vec![false; nv];
            self.lens[k].clear();
            for s in 0..nv {
                if seen[s] {
                    continue;
                }
                let id = self.lens[k].len() as u32;
                let (mut prev, mut cur, mut i) = (usize::MAX, s, 0u32);
                loop {
                    seen[cur] = true;
                    self.cid[k][cur] = id;
                    self.pos[k][cur] = i;
                    i += 1;
                    let (next, _) = self.next_vertex(k, prev, cur);
                    prev = cur;
                    cur = next;
                    if cur == s {
                        break;
                    }
                }
                self.lens[k].push(i);
            }
        }
    }

    /// Change in the number of colour-`k` cycles when edges `pq` and `rs`
    /// are replaced by `pr` and `qs`.
    fn delta(&self, k: usize, (p, q): (usize, usize), (r, s): (usize, usize)) -> i32 {
        let (cid, pos) = (&self.cid[k], &self.pos[k]);
        if cid[p] != cid[r] {
            return -1;
        }
        let len = self.lens[k][cid[p] as usize] as i64;
        let step = |a: usize, b: usize| (pos[b] as i64 - pos[a] as i64).rem_euclid(len);
        if step(p, q) == step(r, s) {
            0
        } else {
            1
        }
    }

    fn counts(&self) -> [usize; 3] {
        std::array::from_fn(|k| self.lens[k].len())
    }

    fn run(&mut self, seed: u64, max_steps: usize) -> bool {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut better = Vec::new();
        let mut neutral = Vec::new();
        for _ in 0..=max_steps {
            self.refresh();
            if self.counts() == [1, 1, 1] {
                return true;
            }
            better.clear();
            neutral.clear();
            for (qi, q) in self.p.quads.iter().enumerate() {
                let c = q.e.map(|e| self.color[e]);
                if c[0] != c[2] || c[1] != c[3] || c[0] == c[1] {
                    continue;
                }
                let [a, b, d, e] = q.v;
                let (pc, qc) = (c[0] as usize, c[1] as usize);
                let t = self.delta(pc, (a, b), (e, d)) + self.delta(qc, (b, d), (a, e));
                if t < 0 {
                    better.push(qi);
                } else if t == 0 {
                    neutral.push(qi);
                }
            }
            let pool = if better.is_empty() { &neutral } else { &better };
            let Some(&qi) = pool.choose(&mut rng) else { return false };
            self.exchange(self.p.quads[qi]);
        }
        false
    }

    fn exchange(&mut self, q: Quad) {
        let [ab, bd, de, ea] = q.e;
        let (pc, qc) = (self.color[ab], self.color[bd]);
        for (ids, from, to) in [([ab, de], pc, qc), ([bd, ea], qc, pc)] {
            for id in ids {
                let (u, v) = self.p.ends[id];
                self.detach(from as usize, u, id);
                self.detach(from as usize, v, id);
            }
            for id in ids {
                self.color[id] = to;
            }
        }
        for id in q.e {
            let (u, v) = self.p.ends[id];
            let k = self.color[id] as usize;
            self.attach(k, u, id);
            self.attach(k, v, id);
        }
    }

    /// Each colour class as one cycle starting at vertex 0 and stepping to
    /// the smaller neighbour first.
    fn extract(&self) -> [Vec<Layered>; 3] {
        let n = self.p.n;
        let label = |i: usize| (self.p.pair.first[i % n], i / n);
        std::array::from_fn(|k| {
            let [e0, e1] = self.inc[k][0];
            let first = self.other(e0, 0).min(self.other(e1, 0));
            let mut out = vec![label(0)];
            let (mut prev, mut cur) = (0, first);
            while cur != 0 {
                out.push(label(cur));
                let (next, _) = self.next_vertex(k, prev, cur);
                prev = cur;
                cur = next;
            }
            out
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercube::C4Index;
    use crate::hypercube::gray2;

    fn q4_pair() -> HamPair {
        let t = kotzig_torus(4, 4).unwrap();
        let g = |i: usize| gray2(C4Index::wrapping(i));
        let cyc = |k: usize| CycleSeq::new(t.cycles[k].iter().map(|v| g(v.x) | g(v.y) << 2).collect());
        HamPair::new(&cyc(0), &cyc(1)).unwrap()
    }

    #[test]
    fn pair_validation() {
        let a = CycleSeq::new(vec![0, 1, 2, 3, 4]);
        let b = CycleSeq::new(vec![0, 2, 4, 1, 3]);
        assert!(HamPair::new(&a, &b).is_ok());
        assert!(HamPair::new(&a, &a).is_err());
        assert!(HamPair::new(&a, &CycleSeq::new(vec![0, 2, 4, 1, 5])).is_err());
        assert!(HamPair::new(&a, &CycleSeq::new(vec![0, 2, 4, 1])).is_err());
    }

    #[test]
    fn k5_times_c3() {
        let a = CycleSeq::new(vec![0, 1, 2, 3, 4]);
        let b = CycleSeq::new(vec![0, 2, 4, 1, 3]);
        let pair = HamPair::new(&a, &b).unwrap();
        let cycles = as_product(&pair, 3).unwrap();
        assert!(cycles.iter().all(|c| c.len() == 15));
    }

    #[test]
    fn q4_pair_times_c4_is_q6() {
        let pair = q4_pair();
        let cycles = as_product(&pair, 4).unwrap();
        let g = |z: usize| gray2(C4Index::wrapping(z));
        let d = crate::decomposition::PartitionedDecomposition::from_sets(
            crate::hypercube::HypercubeDim::new(6).unwrap(),
            64,
            cycles.iter().map(|c| vec![CycleSeq::new(c.iter().map(|&(u, z)| u | g(z) << 4).collect())]).collect(),
        );
        let r = crate::verify::check_certificate(&d);
        assert!(r.ok(), "{r}");
    }

    #[test]
    fn both_start_modes_converge() {
        let pair = q4_pair();
        let product = Product::new(&pair, 8);
        let torus = kotzig_torus(16, 8).unwrap();
        for (mode, t) in [(StartMode::Torus, Some(&torus)), (StartMode::Levels, None)] {
            let mut s = Search::new(&product, product.start(mode, t));
            s.refresh();
            for k in 0..3 {
                assert!(s.lens[k].iter().all(|&l| l >= 3));
            }
            assert!(s.run(0, 4 * product.num_vertices()), "{mode:?}");
            assert!(product.verify(&s.extract()));
        }
    }

    #[test]
    fn exchange_keeps_two_factors() {
        let pair = q4_pair();
        let product = Product::new(&pair, 4);
        let mut s = Search::new(&product, product.start(StartMode::Levels, None));
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let q = *product.quads.choose(&mut rng).unwrap();
            let c = q.e.map(|e| s.color[e]);
            if c[0] == c[2] && c[1] == c[3] && c[0] != c[1] {
                s.refresh();
                let before = s.counts();
                let [a, b, d, e] = q.v;
                let expect = s.delta(c[0] as usize, (a, b), (e, d)) + s.delta(c[1] as usize, (b, d), (a, e));
                s.exchange(q);
                s.refresh();
                let after = s.counts();
                let total = |x: [usize; 3]| x.iter().sum::<usize>() as i32;
                assert_eq!(total(after) - total(before), expect);
            }
            for k in 0..3 {
                assert!(s.inc[k].iter().all(|e| e[0] != usize::MAX && e[1] != usize::MAX));
            }
        }
    }
}
