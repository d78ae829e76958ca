//! Walks through the recolouring of C_{4l} x C_4: start from 8l four-cycles
//! and merge along every square S_i with n not dividing i.
//!
//! Usage: `torus_recoloring [l] [n]` (defaults 2 and 8).

use hypercube_cycles::torus::{recolor_indices, seed_four_cycles, Color, RecolorSquare};

fn main() {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<usize>().expect("integer argument"));
    let ell = args.next().unwrap_or(2);
    let n = args.next().unwrap_or(8);
    let indices = match recolor_indices(ell, n) {
        Ok(ix) => ix,
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(2);
        }
    };
    let mut t = seed_four_cycles(ell).unwrap();
    println!("seed: {} red, {} blue cycles", t.red_cycle_count(), t.blue_cycle_count());
    for k in indices {
        let s = RecolorSquare::new(k, ell).unwrap();
        t.try_combine(s.square()).unwrap();
        println!("S_{k:<3} at {}: {} red, {} blue", s.corners(ell)[0], t.red_cycle_count(), t.blue_cycle_count());
    }
    for color in [Color::Red, Color::Blue] {
        for c in t.cycles(color) {
            let path: Vec<String> = c.iter().map(ToString::to_string).collect();
            println!("{color:?} ({}): {}", c.len(), path.join(" "));
        }
    }
    print!("torus check: {}", t.decomposition().check());
}
