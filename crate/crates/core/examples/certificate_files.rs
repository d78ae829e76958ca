//! Writes a certificate in each output format, reads the JSON back and
//! shows what the checker reports for a corrupted copy.

use hypercube_cycles::certfile::{from_json, to_dot, to_json, to_text, LabelStyle};
use hypercube_cycles::drivers::{decompose, DecompositionRequest};
use hypercube_cycles::verify::check_certificate;
use hypercube_cycles::PartitionedDecomposition;

fn main() -> hypercube_cycles::Result<()> {
    let d = decompose(DecompositionRequest::new(4, 3)?)?.canonicalized();
    let json = to_json(&d, LabelStyle::Binary)?;
    println!("{json}");
    print!("{}", to_text(&d, LabelStyle::Integer));
    let dot = to_dot(&d, LabelStyle::Binary);
    println!("dot: {} lines, {} edges", dot.lines().count(), dot.matches(" -- ").count());

    let back = from_json(&json)?;
    assert_eq!(back, d);

    let (host, len, mut cycles, sets) = back.into_parts();
    cycles[0] = cycles[0].vertices()[1..].to_vec().into();
    let broken = PartitionedDecomposition::new(host, len, cycles, sets)?;
    print!("corrupted copy:\n{}", check_certificate(&broken));
    Ok(())
}
