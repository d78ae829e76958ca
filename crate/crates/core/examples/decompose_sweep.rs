//! Builds and checks every decomposition of `Q_n` into `2^i`-cycles for even
//! `n` up to a bound (default 12).

use std::time::Instant;

use hypercube_cycles::drivers::{decompose, DecompositionRequest};
use hypercube_cycles::verify::check_certificate;

fn main() {
    let max_n: u32 = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(12);
    let start = Instant::now();
    let mut failures = 0;
    for n in (2..=max_n).step_by(2) {
        for i in 2..=n {
            let t = Instant::now();
            let req = DecompositionRequest::new(n, i).expect("valid request");
            let d = decompose(req).expect("construction");
            let report = check_certificate(&d);
            let counts_ok = d.num_cycles() == req.expected_cycles()
                && d.num_sets() == req.expected_sets()
                && d.sets().values().all(|s| s.len() == 1 << (n - i));
            if !report.ok() || !counts_ok {
                failures += 1;
            }
            println!(
                "n={n:2} i={i:2}  cycles={:5} sets={} {}  {:.1?}",
                d.num_cycles(),
                d.num_sets(),
                if report.ok() && counts_ok { "ok" } else { "FAIL" },
                t.elapsed()
            );
        }
    }
    println!("{failures} failures, total {:.1?}", start.elapsed());
    if failures > 0 {
        std::process::exit(1);
    }
}
