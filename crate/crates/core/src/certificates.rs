//! Hard-coded base decompositions of `Q_4` (four 8-cycles) and `Q_6` (six
//! 32-cycles), kept in their listed vertex order.

use crate::decomposition::{CycleSeq, PartitionedDecomposition};
use crate::hypercube::{label_from_coords, HypercubeDim};

const Q4_R0: [&str; 8] = ["0000", "0100", "0101", "1101", "1100", "1000", "1001", "0001"];
const Q4_R1: [&str; 8] = ["0011", "0111", "0110", "1110", "1111", "1011", "1010", "0010"];
const Q4_B0: [&str; 8] = ["0000", "0010", "0110", "0100", "1100", "1110", "1010", "1000"];
const Q4_B1: [&str; 8] = ["0011", "0001", "0101", "0111", "1111", "1101", "1001", "1011"];

const Q6_C1: [&str; 32] = [
    "011000", "011010", "011110", "001110", "001010", "101010", "101110", "111110",
    "111010", "111011", "111111", "101111", "101011", "001011", "001111", "011111",
    "011011", "011001", "011101", "001101", "001001", "101001", "101101", "111101",
    "111001", "111000", "111100", "101100", "101000", "001000", "001100", "011100",
];
const Q6_C2: [&str; 32] = [
    "010100", "010110", "010010", "000010", "000110", "100110", "100010", "110010",
    "110110", "110111", "110011", "100011", "100111", "000111", "000011", "010011",
    "010111", "010101", "010001", "000001", "000101", "100101", "100001", "110001",
    "110101", "110100", "110000", "100000", "100100", "000100", "000000", "010000",
];
const Q6_B1: [&str; 32] = [
    "010110", "010111", "011111", "011101", "011100", "111100", "111101", "111111",
    "110111", "110101", "010101", "000101", "000111", "001111", "001101", "001100",
    "101100", "101101", "101111", "100111", "100101", "100100", "110100", "010100",
    "000100", "000110", "001110", "101110", "100110", "110110", "111110", "011110",
];
const Q6_B2: [&str; 32] = [
    "010110", "110110", "110100", "111100", "111110", "111111", "011111", "011110",
    "011100", "010100", "010101", "011101", "111101", "110101", "100101", "101101",
    "001101", "000101", "000100", "001100", "001110", "001111", "101111", "101110",
    "101100", "100100", "100110", "100111", "110111", "010111", "000111", "000110",
];
const Q6_Y1: [&str; 32] = [
    "011010", "011011", "010011", "010001", "010000", "110000", "110001", "110011",
    "111011", "111001", "011001", "001001", "001011", "000011", "000001", "000000",
    "100000", "100001", "100011", "101011", "101001", "101000", "111000", "011000",
    "001000", "001010", "000010", "100010", "101010", "111010", "110010", "010010",
];
const Q6_Y2: [&str; 32] = [
    "011010", "111010", "111000", "110000", "110010", "110011", "010011", "010010",
    "010000", "011000", "011001", "010001", "110001", "111001", "101001", "100001",
    "000001", "001001", "001000", "000000", "000010", "000011", "100011", "100010",
    "100000", "101000", "101010", "101011", "111011", "011011", "001011", "001010",
];

fn cycle(strings: &[&str]) -> CycleSeq {
    CycleSeq::new(
        strings
            .iter()
            .map(|s| label_from_coords(s).expect("static coordinate strings are well formed"))
            .collect(),
    )
}

/// `Q_4` as four 8-cycles `R0, R1, B0, B1` with partition sets
/// `{R0, R1}` and `{B0, B1}`.
pub fn q4_certificate() -> PartitionedDecomposition {
    PartitionedDecomposition::from_sets(
        HypercubeDim::new(4).expect("4 is a valid dimension"),
        8,
        vec![vec![cycle(&Q4_R0), cycle(&Q4_R1)], vec![cycle(&Q4_B0), cycle(&Q4_B1)]],
    )
}

/// `Q_6` as six 32-cycles, stored in the order `C1, C2, B1, B2, Y1, Y2` with
/// partition sets `{C1, C2}`, `{B1, Y1}`, `{B2, Y2}`.
pub fn q6_certificate() -> PartitionedDecomposition {
    let cycles = vec![
        cycle(&Q6_C1),
        cycle(&Q6_C2),
        cycle(&Q6_B1),
        cycle(&Q6_B2),
        cycle(&Q6_Y1),
        cycle(&Q6_Y2),
    ];
    PartitionedDecomposition::new(
        HypercubeDim::new(6).expect("6 is a valid dimension"),
        32,
        cycles,
        vec![0, 0, 1, 2, 1, 2],
    )
    .expect("six cycles, six ids")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypercube::Edge;
    use crate::verify::{check_certificate, check_cycle};
    use std::collections::HashSet;

    #[test]
    fn q4_listing() {
        let d = q4_certificate();
        assert_eq!(d.cycles()[0].vertices(), &[0, 2, 10, 11, 3, 1, 9, 8]);
        assert_eq!(d.num_cycles(), 4);
        assert_eq!(d.num_sets(), 2);
        let edges: HashSet<Edge> = d.cycles().iter().flat_map(|c| c.edges()).collect();
        assert_eq!(edges.len(), 32);
        for c in d.cycles() {
            assert!(check_cycle(c, d.host()).ok());
        }
        assert!(check_certificate(&d).ok());
    }

    #[test]
    fn q6_listing() {
        let d = q6_certificate();
        assert_eq!(&d.cycles()[0].vertices()[..3], &[6, 22, 30]);
        assert_eq!(d.num_cycles(), 6);
        assert!(d.cycles().iter().all(|c| c.len() == 32));
        assert_eq!(d.num_sets(), 3);
        let edges: HashSet<Edge> = d.cycles().iter().flat_map(|c| c.edges()).collect();
        assert_eq!(edges.len(), 192);
        let r = check_certificate(&d);
        assert!(r.ok(), "{r}");
    }

    #[test]
    fn q6_every_vertex_in_three_cycles_one_per_set() {
        let d = q6_certificate();
        for v in 0..64u64 {
            let sets: Vec<usize> = d
                .cycles()
                .iter()
                .zip(d.set_of())
                .filter(|(c, _)| c.vertices().contains(&v))
                .map(|(_, &s)| s)
                .collect();
            let mut sorted = sets.clone();
            sorted.sort();
            assert_eq!(sorted, vec![0, 1, 2], "vertex {v}");
        }
    }

    #[test]
    fn q6_b_and_y_pairs_avoid_c_cycles() {
        let d = q6_certificate();
        let edge_set = |i: usize| -> HashSet<Edge> { d.cycles()[i].edges().collect() };
        let c: HashSet<Edge> = edge_set(0).union(&edge_set(1)).copied().collect();
        let b: HashSet<Edge> = edge_set(2).union(&edge_set(3)).copied().collect();
        let y: HashSet<Edge> = edge_set(4).union(&edge_set(5)).copied().collect();
        assert!(b.is_disjoint(&c));
        assert!(y.is_disjoint(&c));
        assert!(b.is_disjoint(&y));
    }
}
