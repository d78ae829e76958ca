//! Top-level constructions for `Q_n`.

use crate::certificates::{q4_certificate, q6_certificate};
use crate::combinators::{cart_times_c4, hh_product};
use crate::decomposition::{CycleSeq, PartitionedDecomposition};
use crate::error::{invalid, Result};
use crate::hypercube::{c4_cycle, HypercubeDim, ProductEmbedding};
use crate::torus::kotzig_torus;

/// A request for a partitionable decomposition of `Q_n` into cycles of
/// length `2^i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DecompositionRequest {
    n: HypercubeDim,
    i: u32,
}

impl DecompositionRequest {
    /// `n` even and at least 2, `2 <= i <= n`.
    pub fn new(n: u32, i: u32) -> Result<Self> {
        let dim = HypercubeDim::even(n)?;
        if n < 2 {
            return invalid("n must be at least 2");
        }
        if i < 2 || i > n {
            return invalid(format!("i = {i} must satisfy 2 <= i <= n = {n}"));
        }
        Ok(DecompositionRequest { n: dim, i })
    }

    pub fn n(&self) -> u32 {
        self.n.get()
    }

    pub fn i(&self) -> u32 {
        self.i
    }

    pub fn cycle_length(&self) -> usize {
        1 << self.i
    }

    pub fn expected_cycles(&self) -> usize {
        self.n.num_edges() as usize >> self.i
    }

    pub fn expected_sets(&self) -> usize {
        self.n() as usize / 2
    }
}

/// `n / 2` edge-disjoint Hamiltonian cycles of `Q_n`, one per partition set.
///
/// `Q_2` is its own 4-cycle and `Q_4` is the torus `C_4 □ C_4`. Larger cubes
/// split as `Q_{2a} □ Q_{2b}` with `a = n / 4` rounded down, so that
/// `a <= b <= 2a`, and combine the two Hamiltonian decompositions.
pub fn ham_decompose(n: u32) -> Result<PartitionedDecomposition> {
    let dim = HypercubeDim::even(n)?;
    match n {
        0 => invalid("n must be at least 2"),
        2 => Ok(PartitionedDecomposition::from_sets(dim, 4, vec![vec![CycleSeq::new(c4_cycle().to_vec())]])),
        4 => {
            let c4 = c4_cycle();
            let cycles = kotzig_torus(4, 4)?.map_to_labels(&c4, &c4, ProductEmbedding::new(2, 2)?);
            Ok(PartitionedDecomposition::from_sets(dim, 16, cycles.into_iter().map(|c| vec![c]).collect()))
        }
        _ => {
            let a = n / 4;
            let b = n / 2 - a;
            let g = ham_decompose(2 * a)?;
            let h = ham_decompose(2 * b)?;
            hh_product(&g, h.cycles(), ProductEmbedding::new(2 * a, 2 * b)?)
        }
    }
}

/// Partitionable decomposition of `Q_n` into cycles of length `2^(n-1)`.
///
/// `Q_4` and `Q_6` use the fixed certificates. Otherwise `n = 4m + 2j` with
/// `j` in `{0, 1}` and `Q_n = Q_{2m} □ Q_{2m + 2j}`: the smaller factor is
/// decomposed recursively into `m` sets of two cycles and the larger into
/// `m + j` Hamiltonian cycles.
pub fn halfham_decompose(n: u32) -> Result<PartitionedDecomposition> {
    HypercubeDim::even(n)?;
    match n {
        0 | 2 => invalid(format!("n = {n} must be at least 4")),
        4 => Ok(q4_certificate()),
        6 => Ok(q6_certificate()),
        _ => {
            let m = n / 4;
            let j = (n / 2) % 2;
            let g = halfham_decompose(2 * m)?;
            let h = ham_decompose(2 * m + 2 * j)?;
            hh_product(&g, h.cycles(), ProductEmbedding::new(2 * m, 2 * m + 2 * j)?)
        }
    }
}

/// Partitionable decomposition of `Q_n` into cycles of length `2^i` with
/// `n / 2` partition sets.
///
/// The base is the smallest even dimension at least `i`: a Hamiltonian
/// decomposition when `i` is even, the half-length construction when `i` is
/// odd. Each further pair of dimensions is added by [`cart_times_c4`].
pub fn decompose(req: DecompositionRequest) -> Result<PartitionedDecomposition> {
    let (n, i) = (req.n(), req.i());
    if i % 2 == 1 && n == i + 1 {
        halfham_decompose(n)
    } else if i % 2 == 0 && n == i {
        ham_decompose(n)
    } else {
        cart_times_c4(&decompose(DecompositionRequest::new(n - 2, i)?)?)
    }
}
