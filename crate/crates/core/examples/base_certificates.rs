//! Prints the fixed decompositions of Q4 and Q6 with binary labels and
//! checks them.

use hypercube_cycles::certificates::{q4_certificate, q6_certificate};
use hypercube_cycles::hypercube::coords_string;
use hypercube_cycles::verify::check_certificate;

fn main() {
    for d in [q4_certificate(), q6_certificate()] {
        let n = d.host();
        println!("{n}: {} cycles of length {}", d.num_cycles(), d.cycle_length());
        for (set, cycles) in d.sets() {
            println!("  set {set}");
            for c in cycles {
                let labels: Vec<String> = c.vertices().iter().map(|&v| coords_string(v, n)).collect();
                println!("    {}", labels.join(" "));
            }
        }
        print!("  check: {}", check_certificate(&d));
    }
}
