//! Hamiltonian decompositions of Q_n and the half-length decompositions.
//!
//! Usage: `hamiltonian_decomposition [max_n]` (default 14).

use std::time::Instant;

use hypercube_cycles::drivers::{halfham_decompose, ham_decompose};
use hypercube_cycles::verify::check_certificate;

fn main() {
    let max_n: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(14);
    for n in (2..=max_n).step_by(2) {
        let t = Instant::now();
        let d = ham_decompose(n).expect("Hamiltonian decomposition");
        let ok = check_certificate(&d).ok();
        println!("ham  Q_{n:<2}: {} cycles of length {:6} {} {:.1?}", d.num_cycles(), d.cycle_length(), if ok { "ok" } else { "FAIL" }, t.elapsed());
        if n >= 4 {
            let t = Instant::now();
            let h = halfham_decompose(n).expect("half-length decomposition");
            let ok = check_certificate(&h).ok();
            println!("half Q_{n:<2}: {} cycles of length {:6} {} {:.1?}", h.num_cycles(), h.cycle_length(), if ok { "ok" } else { "FAIL" }, t.elapsed());
        }
    }
}
