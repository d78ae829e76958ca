//! Two-colourings of tori `C_width □ C_height` and the cycle combination
//! operation.
//!
//! Vertices are [`TorusCoord`]s. The horizontal edge at `(x, y)` joins
//! `(x, y)` and `(x + 1, y)`; the vertical edge at `(x, y)` joins `(x, y)` and
//! `(x, y + 1)`, both indices taken cyclically. A [`Square`] is the unit
//! 4-cycle whose lower-left corner is `(x, y)`.
//!
//! Every colouring kept here has exactly two red and two blue edges at each
//! vertex, so each colour class is a disjoint union of cycles covering all
//! vertices. Recolouring only ever merges cycles, so per-colour union-find
//! over vertices tracks the cycle partition exactly.

use std::fmt;

use crate::decomposition::CycleSeq;
use crate::error::{invalid, Error, Result};
use crate::hypercube::{ProductEmbedding, VertexLabel};
use crate::verify::{check_torus_decomposition, VerificationReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TorusCoord {
    pub x: usize,
    pub y: usize,
}

impl TorusCoord {
    pub fn new(x: usize, y: usize) -> Self {
        TorusCoord { x, y }
    }
}

impl fmt::Display for TorusCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    Red,
    Blue,
}

impl Color {
    pub fn other(self) -> Color {
        match self {
            Color::Red => Color::Blue,
            Color::Blue => Color::Red,
        }
    }
}

/// The unit 4-cycle with lower-left corner `(x, y)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Square {
    pub x: usize,
    pub y: usize,
}

/// One of the recolouring locations `S_1 .. S_{4l}` of `C_{4l} □ C_4`.
///
/// `S_1` is the square `(0,1), (0,2), (1,2), (1,1)` and `S_k` is `S_{k-1}`
/// shifted by `(+1, +1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RecolorSquare {
    k: usize,
    square: Square,
}

impl RecolorSquare {
    pub fn new(k: usize, ell: usize) -> Result<Self> {
        if ell == 0 || k == 0 || k > 4 * ell {
            return invalid(format!("recolor square S_{k} does not exist for l = {ell}"));
        }
        Ok(RecolorSquare { k, square: Square { x: (k - 1) % (4 * ell), y: k % 4 } })
    }

    pub fn index(&self) -> usize {
        self.k
    }

    pub fn square(&self) -> Square {
        self.square
    }

    /// The four corners in the order `(x,y), (x,y+1), (x+1,y+1), (x+1,y)`.
    pub fn corners(&self, ell: usize) -> [TorusCoord; 4] {
        let w = 4 * ell;
        let Square { x, y } = self.square;
        [
            TorusCoord::new(x, y),
            TorusCoord::new(x, (y + 1) % 4),
            TorusCoord::new((x + 1) % w, (y + 1) % 4),
            TorusCoord::new((x + 1) % w, y),
        ]
    }
}

/// Cell of the seed 4-cycle `R^k` (red) or `B^k` (blue) in `C_{4l} □ C_4`.
///
/// `R^0 = (0,0),(0,1),(1,1),(1,0)`, `R^1` sits at `(0,2)`, `B^0` at
/// `(4l-1, 1)`, `B^1` at `(1,1)`, and `C^k` is `C^{k-2}` shifted by `(+2,+2)`.
pub fn seed_square(color: Color, k: usize, ell: usize) -> Square {
    let w = 4 * ell;
    let (x, y) = match (color, k % 2) {
        (Color::Red, 0) => (k, k),
        (Color::Red, _) => (k - 1, k + 1),
        (Color::Blue, 0) => (k + w - 1, k + 1),
        (Color::Blue, _) => (k, k),
    };
    Square { x: x % w, y: y % 4 }
}

#[derive(Debug, Clone)]
struct Dsu {
    parent: Vec<usize>,
    components: usize,
}

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect(), components: n }
    }

    fn find(&mut self, mut v: usize) -> usize {
        while self.parent[v] != v {
            self.parent[v] = self.parent[self.parent[v]];
            v = self.parent[v];
        }
        v
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        self.components -= 1;
        true
    }
}

/// Red/blue colouring of the edges of `C_width □ C_height`.
#[derive(Debug, Clone)]
pub struct TorusColoring {
    width: usize,
    height: usize,
    horizontal: Vec<Color>,
    vertical: Vec<Color>,
    red: Dsu,
    blue: Dsu,
    applied: Vec<Square>,
}

impl TorusColoring {
    /// Builds a colouring from per-edge colours indexed by `y * width + x`.
    /// Every vertex must see exactly two edges of each colour.
    pub fn from_colors(width: usize, height: usize, horizontal: Vec<Color>, vertical: Vec<Color>) -> Result<Self> {
        if width < 3 || height < 3 {
            return invalid(format!("torus C_{width} □ C_{height} needs both cycles of length >= 3"));
        }
        let n = width * height;
        if horizontal.len() != n || vertical.len() != n {
            return invalid("edge colour arrays must have width * height entries");
        }
        let mut t = TorusColoring {
            width,
            height,
            horizontal,
            vertical,
            red: Dsu::new(n),
            blue: Dsu::new(n),
            applied: Vec::new(),
        };
        for y in 0..height {
            for x in 0..width {
                let v = TorusCoord::new(x, y);
                let reds = t.incident(v).iter().filter(|(_, c)| *c == Color::Red).count();
                if reds != 2 {
                    return invalid(format!("vertex {v} has {reds} red edges, expected 2"));
                }
            }
        }
        for y in 0..height {
            for x in 0..width {
                let i = t.idx(x, y);
                let right = t.idx((x + 1) % width, y);
                let up = t.idx(x, (y + 1) % height);
                match t.horizontal[i] {
                    Color::Red => t.red.union(i, right),
                    Color::Blue => t.blue.union(i, right),
                };
                match t.vertical[i] {
                    Color::Red => t.red.union(i, up),
                    Color::Blue => t.blue.union(i, up),
                };
            }
        }
        Ok(t)
    }

    /// Red and blue 4-cycles on alternate cells: cells with both corner
    /// coordinates even are red, cells with both odd are blue.
    pub fn blocks(width: usize, height: usize) -> Result<Self> {
        if width < 4 || height < 4 || width % 2 != 0 || height % 2 != 0 {
            return invalid(format!("block seed needs even sides >= 4, got {width}x{height}"));
        }
        let mut horizontal = Vec::with_capacity(width * height);
        let mut vertical = Vec::with_capacity(width * height);
        for y in 0..height {
            for x in 0..width {
                horizontal.push(if x % 2 == 0 { Color::Red } else { Color::Blue });
                vertical.push(if y % 2 == 0 { Color::Red } else { Color::Blue });
            }
        }
        Self::from_colors(width, height, horizontal, vertical)
    }

    /// Rows red, columns blue.
    pub fn rows_columns(width: usize, height: usize) -> Result<Self> {
        let n = width * height;
        Self::from_colors(width, height, vec![Color::Red; n], vec![Color::Blue; n])
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn height(&self) -> usize {
        self.height
    }

    fn idx(&self, x: usize, y: usize) -> usize {
        y * self.width + x
    }

    pub fn horizontal_color(&self, x: usize, y: usize) -> Color {
        self.horizontal[self.idx(x, y)]
    }

    pub fn vertical_color(&self, x: usize, y: usize) -> Color {
        self.vertical[self.idx(x, y)]
    }

    /// Colour of the edge `uv`, or `None` if `u` and `v` are not adjacent.
    pub fn edge_color(&self, u: TorusCoord, v: TorusCoord) -> Option<Color> {
        self.incident(u).into_iter().find(|(w, _)| *w == v).map(|(_, c)| c)
    }

    /// The four neighbours of `v` with the colour of the joining edge.
    fn incident(&self, v: TorusCoord) -> [(TorusCoord, Color); 4] {
        let (w, h) = (self.width, self.height);
        let (x, y) = (v.x, v.y);
        let left = (x + w - 1) % w;
        let down = (y + h - 1) % h;
        [
            (TorusCoord::new((x + 1) % w, y), self.horizontal[self.idx(x, y)]),
            (TorusCoord::new(left, y), self.horizontal[self.idx(left, y)]),
            (TorusCoord::new(x, (y + 1) % h), self.vertical[self.idx(x, y)]),
            (TorusCoord::new(x, down), self.vertical[self.idx(x, down)]),
        ]
    }

    pub fn red_cycle_count(&self) -> usize {
        self.red.components
    }

    pub fn blue_cycle_count(&self) -> usize {
        self.blue.components
    }

    pub fn cycle_count(&self, color: Color) -> usize {
        match color {
            Color::Red => self.red_cycle_count(),
            Color::Blue => self.blue_cycle_count(),
        }
    }

    /// Squares recoloured so far, in order.
    pub fn applied(&self) -> &[Square] {
        &self.applied
    }

    /// Whether `u` and `v` currently lie on the same cycle of `color`.
    pub fn same_cycle(&mut self, color: Color, u: TorusCoord, v: TorusCoord) -> bool {
        let (a, b) = (self.idx(u.x, u.y), self.idx(v.x, v.y));
        let dsu = match color {
            Color::Red => &mut self.red,
            Color::Blue => &mut self.blue,
        };
        dsu.find(a) == dsu.find(b)
    }

    /// Applies the cycle combination operation to `sq` in place.
    ///
    /// One pair of opposite sides must be red and lie on two different red
    /// cycles, and the other pair blue on two different blue cycles. On
    /// success all four sides swap colour, merging the two red cycles into
    /// one and the two blue cycles into one. On error nothing changes.
    pub fn try_combine(&mut self, sq: Square) -> Result<()> {
        let (w, h) = (self.width, self.height);
        if sq.x >= w || sq.y >= h {
            return invalid(format!("square at ({}, {}) outside C_{w} □ C_{h}", sq.x, sq.y));
        }
        let (x1, y1) = ((sq.x + 1) % w, (sq.y + 1) % h);
        let bottom = self.idx(sq.x, sq.y);
        let top = self.idx(sq.x, y1);
        let left = self.idx(sq.x, sq.y);
        let right = self.idx(x1, sq.y);
        let (cb, ct) = (self.horizontal[bottom], self.horizontal[top]);
        let (cl, cr) = (self.vertical[left], self.vertical[right]);
        if cb != ct || cl != cr || cb == cl {
            return Err(Error::InvalidRecolor(format!(
                "square at ({}, {}) does not have two opposite red sides and two opposite blue sides",
                sq.x, sq.y
            )));
        }
        // Representative endpoints: (x,y) and (x,y+1) for the horizontal
        // sides, (x,y) and (x+1,y) for the vertical sides.
        let (h_a, h_b) = (self.idx(sq.x, sq.y), self.idx(sq.x, y1));
        let (v_a, v_b) = (self.idx(sq.x, sq.y), self.idx(x1, sq.y));
        let (h_dsu, v_dsu) = match cb {
            Color::Red => (&mut self.red, &mut self.blue),
            Color::Blue => (&mut self.blue, &mut self.red),
        };
        if h_dsu.find(h_a) == h_dsu.find(h_b) {
            return Err(Error::InvalidRecolor(format!(
                "horizontal sides of square ({}, {}) lie on the same {:?} cycle",
                sq.x, sq.y, cb
            )));
        }
        if v_dsu.find(v_a) == v_dsu.find(v_b) {
            return Err(Error::InvalidRecolor(format!(
                "vertical sides of square ({}, {}) lie on the same {:?} cycle",
                sq.x, sq.y, cl
            )));
        }
        h_dsu.union(h_a, h_b);
        v_dsu.union(v_a, v_b);
        self.horizontal[bottom] = cl;
        self.horizontal[top] = cl;
        self.vertical[left] = cb;
        self.vertical[right] = cb;
        self.applied.push(sq);
        Ok(())
    }

    /// Value-returning form of [`TorusColoring::try_combine`].
    pub fn cycle_combine(mut self, sq: Square) -> Result<Self> {
        self.try_combine(sq)?;
        Ok(self)
    }

    /// The cycles of one colour. Walks start at the lexicographically
    /// smallest unvisited `(x, y)` and step first to the smaller neighbour.
    pub fn cycles(&self, color: Color) -> Vec<Vec<TorusCoord>> {
        let mut visited = vec![false; self.width * self.height];
        let mut out = Vec::new();
        for x in 0..self.width {
            for y in 0..self.height {
                if visited[self.idx(x, y)] {
                    continue;
                }
                let start = TorusCoord::new(x, y);
                let mut cycle = vec![start];
                visited[self.idx(x, y)] = true;
                let mut nbrs = self.neighbours(start, color);
                nbrs.sort();
                let (mut prev, mut cur) = (start, nbrs[0]);
                while cur != start {
                    visited[self.idx(cur.x, cur.y)] = true;
                    cycle.push(cur);
                    let [a, b] = self.neighbours(cur, color);
                    let next = if a == prev { b } else { a };
                    prev = cur;
                    cur = next;
                }
                out.push(cycle);
            }
        }
        out
    }

    fn neighbours(&self, v: TorusCoord, color: Color) -> [TorusCoord; 2] {
        let mut out = [v; 2];
        let mut k = 0;
        for (u, c) in self.incident(v) {
            if c == color {
                out[k] = u;
                k += 1;
            }
        }
        debug_assert_eq!(k, 2);
        out
    }

    /// Red cycles as partition set 0, blue cycles as partition set 1.
    pub fn decomposition(&self) -> TorusDecomposition {
        let red = self.cycles(Color::Red);
        let blue = self.cycles(Color::Blue);
        let mut set_of = vec![0; red.len()];
        set_of.extend(std::iter::repeat_n(1, blue.len()));
        let mut cycles = red;
        cycles.extend(blue);
        TorusDecomposition { width: self.width, height: self.height, cycles, set_of }
    }

    /// The same colouring on `C_height □ C_width` with coordinates swapped.
    pub fn transposed(&self) -> Result<Self> {
        let (w, h) = (self.width, self.height);
        let mut horizontal = Vec::with_capacity(w * h);
        let mut vertical = Vec::with_capacity(w * h);
        for y in 0..w {
            for x in 0..h {
                horizontal.push(self.vertical_color(y, x));
                vertical.push(self.horizontal_color(y, x));
            }
        }
        Self::from_colors(h, w, horizontal, vertical)
    }
}

/// The seed colouring of `C_{4l} □ C_4`: `8l` four-cycles, red cycles
/// `R^0 .. R^{4l-1}` and blue cycles `B^0 .. B^{4l-1}`.
pub fn seed_four_cycles(ell: usize) -> Result<TorusColoring> {
    if ell == 0 {
        return invalid("l must be at least 1");
    }
    TorusColoring::blocks(4 * ell, 4)
}

pub fn cycle_combine(state: TorusColoring, s: RecolorSquare) -> Result<TorusColoring> {
    state.cycle_combine(s.square())
}

/// Indices `i` in `1..=4l` with `n` not dividing `i`, ascending.
pub fn recolor_indices(ell: usize, n: usize) -> Result<Vec<usize>> {
    if ell == 0 || n == 0 || (4 * ell) % n != 0 {
        return invalid(format!("n = {n} must divide 4l = {}", 4 * ell));
    }
    Ok((1..=4 * ell).filter(|i| i % n != 0).collect())
}

/// The recoloured state behind [`lemma_8ell`].
pub fn lemma_8ell_coloring(ell: usize, n: usize) -> Result<TorusColoring> {
    let mut state = seed_four_cycles(ell)?;
    for k in recolor_indices(ell, n)? {
        state.try_combine(RecolorSquare::new(k, ell)?.square())?;
    }
    Ok(state)
}

/// Partitionable decomposition of `C_{4l} □ C_4` into `2 * 4l / n` cycles of
/// length `4n`; red cycles form set 0 and blue cycles set 1.
pub fn lemma_8ell(ell: usize, n: usize) -> Result<TorusDecomposition> {
    Ok(lemma_8ell_coloring(ell, n)?.decomposition())
}

/// Cycles on a torus, tagged with partition-set ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorusDecomposition {
    pub width: usize,
    pub height: usize,
    pub cycles: Vec<Vec<TorusCoord>>,
    pub set_of: Vec<usize>,
}

impl TorusDecomposition {
    pub fn check(&self) -> VerificationReport {
        check_torus_decomposition(self.width, self.height, &self.cycles, &self.set_of)
    }

    /// Maps `(x, y)` to `e.map(left[x], right[y])`, turning a decomposition
    /// of `C_width □ C_height` into cycles of a hypercube product whose
    /// factors contain the cycles `left` and `right`.
    pub fn map_to_labels(&self, left: &[VertexLabel], right: &[VertexLabel], e: ProductEmbedding) -> Vec<CycleSeq> {
        assert_eq!(left.len(), self.width, "left cycle length must equal torus width");
        assert_eq!(right.len(), self.height, "right cycle length must equal torus height");
        self.cycles
            .iter()
            .map(|c| CycleSeq::new(c.iter().map(|v| e.map(left[v.x], right[v.y])).collect()))
            .collect()
    }
}

/// Node-visit budget for the exhaustive fallback of [`kotzig_torus`].
const SEARCH_BUDGET: u64 = 20_000_000;
/// Largest torus (in vertices) the exhaustive fallback will attempt.
const SEARCH_MAX_VERTICES: usize = 64;

/// Decomposes `C_a □ C_b` into two edge-disjoint Hamiltonian cycles (red is
/// set 0, blue set 1).
///
/// Supported routes, tried in order:
/// * `a, b` even, `>= 4`, with `b/2` even dividing `a/2` (or the transpose):
///   block seed plus a staircase of cycle combinations;
/// * `a == b`: rows and columns merged along the diagonal;
/// * tori of at most 64 vertices: exhaustive search.
///
/// Every result is checked before it is returned. Anything else yields
/// [`Error::UnsupportedInstance`].
pub fn kotzig_torus(a: usize, b: usize) -> Result<TorusDecomposition> {
    if a < 3 || b < 3 {
        return invalid(format!("torus C_{a} □ C_{b} needs both cycles of length >= 3"));
    }
    let coloring = if staircase_applies(a, b) {
        staircase(a, b)?
    } else if staircase_applies(b, a) {
        staircase(b, a)?.transposed()?
    } else if a == b {
        diagonal(a)?
    } else if a * b <= SEARCH_MAX_VERTICES {
        exhaustive(a, b)?
    } else {
        return Err(Error::UnsupportedInstance(format!(
            "no Hamiltonian decomposition route for C_{a} □ C_{b}"
        )));
    };
    let d = coloring.decomposition();
    let report = d.check();
    if d.cycles.len() != 2 || !report.ok() {
        return Err(Error::UnsupportedInstance(format!(
            "construction for C_{a} □ C_{b} did not verify:\n{report}"
        )));
    }
    Ok(d)
}

fn staircase_applies(a: usize, b: usize) -> bool {
    a >= 4 && b >= 4 && a % 2 == 0 && b % 2 == 0 && (b / 2) % 2 == 0 && (a / 2) % (b / 2) == 0
}

/// Recolouring cells that join all seed cycles of [`TorusColoring::blocks`]
/// into one red and one blue cycle.
///
/// Seed cells form a `p x q` grid (`p = a/2`, `q = b/2`). The cell at
/// `(2i, 2j+1)` joins red seeds `(i,j)`, `(i,j+1)` and the cell at
/// `(2i+1, 2j)` joins red seeds `(i,j)`, `(i+1,j)`; the blue seeds they join
/// follow the same pattern shifted by one cell. Alternating the two kinds
/// walks a staircase through the seed diagonals `j - i = 2s` and `2s + 1`,
/// and one extra cell per gap links consecutive staircases. The chosen cells
/// form a spanning tree of the red seeds and of the blue seeds at once, so
/// every combination meets its precondition.
fn staircase_cells(a: usize, b: usize) -> Vec<Square> {
    let (p, q) = (a / 2, b / 2);
    let mut cells = Vec::with_capacity(p * q - 1);
    for s in 0..q / 2 {
        for t in 0..p {
            cells.push(Square { x: 2 * t, y: (2 * (t + 2 * s) + 1) % b });
            if t + 1 < p {
                cells.push(Square { x: 2 * t + 1, y: (2 * (t + 2 * s + 1)) % b });
            }
        }
    }
    for s in 0..(q / 2).saturating_sub(1) {
        cells.push(Square { x: 0, y: (2 * (2 * s + 1) + 1) % b });
    }
    cells
}

fn staircase(a: usize, b: usize) -> Result<TorusColoring> {
    let mut t = TorusColoring::blocks(a, b)?;
    for sq in staircase_cells(a, b) {
        t.try_combine(sq)?;
    }
    Ok(t)
}

fn diagonal(a: usize) -> Result<TorusColoring> {
    let mut t = TorusColoring::rows_columns(a, a)?;
    for k in 0..a - 1 {
        t.try_combine(Square { x: k, y: k })?;
    }
    Ok(t)
}

/// Depth-first search for a Hamiltonian cycle whose complement is also a
/// Hamiltonian cycle.
fn exhaustive(a: usize, b: usize) -> Result<TorusColoring> {
    struct Search {
        a: usize,
        b: usize,
        nbr: Vec<[usize; 4]>,
        // Edge id per (vertex, direction): 2*v for the edge to the right,
        // 2*v+1 for the edge upward.
        eid: Vec<[usize; 4]>,
        visited: Vec<bool>,
        red: Vec<bool>,
        budget: u64,
    }

    impl Search {
        fn complement_is_hamiltonian(&self) -> bool {
            let n = self.a * self.b;
            let blue = |v: usize| -> Vec<usize> {
                (0..4).filter(|&d| !self.red[self.eid[v][d]]).map(|d| self.nbr[v][d]).collect()
            };
            let (mut prev, mut cur, mut len) = (0, blue(0)[0], 1);
            while cur != 0 {
                let nb = blue(cur);
                let next = if nb[0] == prev { nb[1] } else { nb[0] };
                prev = cur;
                cur = next;
                len += 1;
                if len > n {
                    return false;
                }
            }
            len == n
        }

        fn dfs(&mut self, v: usize, depth: usize) -> Option<bool> {
            if self.budget == 0 {
                return None;
            }
            self.budget -= 1;
            let n = self.a * self.b;
            for d in 0..4 {
                let u = self.nbr[v][d];
                let e = self.eid[v][d];
                if depth == n {
                    if u == 0 && !self.red[e] {
                        self.red[e] = true;
                        if self.complement_is_hamiltonian() {
                            return Some(true);
                        }
                        self.red[e] = false;
                    }
                    continue;
                }
                if self.visited[u] {
                    continue;
                }
                self.visited[u] = true;
                self.red[e] = true;
                match self.dfs(u, depth + 1) {
                    Some(true) => return Some(true),
                    None => return None,
                    Some(false) => {}
                }
                self.red[e] = false;
                self.visited[u] = false;
            }
            Some(false)
        }
    }

    let n = a * b;
    let idx = |x: usize, y: usize| y * a + x;
    let mut nbr = vec![[0; 4]; n];
    let mut eid = vec![[0; 4]; n];
    for y in 0..b {
        for x in 0..a {
            let v = idx(x, y);
            let r = idx((x + 1) % a, y);
            let l = idx((x + a - 1) % a, y);
            let u = idx(x, (y + 1) % b);
            let dn = idx(x, (y + b - 1) % b);
            nbr[v] = [r, l, u, dn];
            eid[v] = [2 * v, 2 * l, 2 * v + 1, 2 * dn + 1];
        }
    }
    let mut s = Search { a, b, nbr, eid, visited: vec![false; n], red: vec![false; 2 * n], budget: SEARCH_BUDGET };
    s.visited[0] = true;
    match s.dfs(0, 1) {
        Some(true) => {}
        Some(false) => {
            return Err(Error::UnsupportedInstance(format!("C_{a} □ C_{b} has no Hamiltonian decomposition")))
        }
        None => {
            return Err(Error::UnsupportedInstance(format!("search budget exhausted for C_{a} □ C_{b}")))
        }
    }
    let pick = |e: usize| if s.red[e] { Color::Red } else { Color::Blue };
    let horizontal = (0..n).map(|v| pick(2 * v)).collect();
    let vertical = (0..n).map(|v| pick(2 * v + 1)).collect();
    TorusColoring::from_colors(a, b, horizontal, vertical)
}
