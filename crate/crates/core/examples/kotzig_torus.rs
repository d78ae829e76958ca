//! Splits tori C_a x C_b into two Hamiltonian cycles and reports which sizes
//! are handled.

use std::time::Instant;

use hypercube_cycles::torus::kotzig_torus;

fn main() {
    let sizes = [3, 4, 5, 6, 8, 12, 16, 32, 64];
    print!("{:>4}", "");
    for b in sizes {
        print!("{b:>5}");
    }
    println!();
    for a in sizes {
        print!("{a:>4}");
        for b in sizes {
            let mark = match kotzig_torus(a, b) {
                Ok(d) if d.check().ok() => "ok",
                Ok(_) => "BAD",
                Err(_) => "-",
            };
            print!("{mark:>5}");
        }
        println!();
    }
    let t = Instant::now();
    let d = kotzig_torus(64, 64).unwrap();
    println!("C_64 x C_64: cycles of length {} and {} in {:.1?}", d.cycles[0].len(), d.cycles[1].len(), t.elapsed());
}
