//! The product constructions on small cubes: edge partitions of products,
//! the C_4 extension, and the Hamiltonian-cycle products (two and three
//! colour cases).

use hypercube_cycles::certificates::q4_certificate;
use hypercube_cycles::combinators::{aot_product, as_product, cart_times_c4, hh_product, one_set_product, HamPair, SpanningPart};
use hypercube_cycles::drivers::ham_decompose;
use hypercube_cycles::hypercube::{c4_cycle, HypercubeDim};
use hypercube_cycles::verify::check_certificate;
use hypercube_cycles::{CycleSeq, PartitionedDecomposition, ProductEmbedding};

fn main() -> hypercube_cycles::Result<()> {
    let q2 = HypercubeDim::new(2)?;
    let q4 = HypercubeDim::new(4)?;
    let square = CycleSeq::new(c4_cycle().to_vec());
    let c4 = SpanningPart::from_cycles(q2, [&square])?;
    let ham4 = ham_decompose(4)?;

    let parts: Vec<SpanningPart> = ham4.cycles().iter().map(|c| SpanningPart::from_cycles(q4, [c])).collect::<Result<_, _>>()?;
    let q8 = aot_product(&parts, &parts, ProductEmbedding::new(4, 4)?)?;
    println!("Q8 as two tori: {} + {} edges", q8[0].edges().len(), q8[1].edges().len());

    let red: Vec<CycleSeq> = q4_certificate().set(0).into_iter().cloned().collect();
    let split = one_set_product(&red, &c4, ProductEmbedding::new(4, 2)?)?;
    println!("red 8-cycles of Q4 times C4: parts of {:?} edges", split.iter().map(Vec::len).collect::<Vec<_>>());

    let q6 = cart_times_c4(&q4_certificate())?;
    println!("Q4 certificate times C4: {} cycles of length {}, {} sets, {}", q6.num_cycles(), q6.cycle_length(), q6.num_sets(), verdict(&q6));

    let q8h = hh_product(&q4_certificate(), ham4.cycles(), ProductEmbedding::new(4, 4)?)?;
    println!("Q4 certificate with Q4 Hamiltonian cycles: {} cycles of length {}, {}", q8h.num_cycles(), q8h.cycle_length(), verdict(&q8h));

    let pair = HamPair::new(&ham4.cycles()[0], &ham4.cycles()[1])?;
    for c in [4, 8, 16] {
        let three = as_product(&pair, c)?;
        println!("Q4 pair times C{c}: three cycles of length {:?}", three.iter().map(Vec::len).collect::<Vec<_>>());
    }
    let g = PartitionedDecomposition::from_sets(q2, 4, vec![vec![square]]);
    let q6h = hh_product(&g, ham4.cycles(), ProductEmbedding::new(2, 4)?)?;
    println!("Q2 square with both Q4 cycles paired: {} Hamiltonian cycles of Q6, {}", q6h.num_cycles(), verdict(&q6h));
    Ok(())
}

fn verdict(d: &PartitionedDecomposition) -> &'static str {
    if check_certificate(d).ok() { "valid" } else { "INVALID" }
}
