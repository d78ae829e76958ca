//! Exhaustive search on Q_2, Q_3 and Q_4, compared with the constructions.

use std::time::Instant;

use hypercube_cycles::drivers::{decompose, DecompositionRequest};
use hypercube_cycles::oracle::{brute_force_decompose, is_exact_cover};

fn main() {
    for n in 2..=4u32 {
        for i in 2..=n {
            let t = Instant::now();
            let found = brute_force_decompose(n, i).expect("within the oracle's size cap");
            let el = t.elapsed();
            match found {
                Some(d) => {
                    let built = decompose(DecompositionRequest::new(n, i).unwrap()).unwrap();
                    println!(
                        "Q_{n} into {:2}-cycles: found {} cycles in {} sets ({el:.1?}); construction agrees: {}",
                        1 << i,
                        d.num_cycles(),
                        d.num_sets(),
                        is_exact_cover(&built) && built.num_cycles() == d.num_cycles()
                    );
                }
                None => println!("Q_{n} into {:2}-cycles: none exists ({el:.1?})", 1 << i),
            }
        }
    }
    println!("Q_5: {}", brute_force_decompose(5, 2).unwrap_err());
}
