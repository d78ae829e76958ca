//! Acceptance checks, one line per criterion. Runs without the libtest
//! harness so the lines are always printed.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use hypercube_cycles::certfile::{to_json, LabelStyle};
use hypercube_cycles::certificates::{q4_certificate, q6_certificate};
use hypercube_cycles::cli::cmd_verify;
use hypercube_cycles::combinators::{as_product, HamPair};
use hypercube_cycles::drivers::{decompose, DecompositionRequest};
use hypercube_cycles::oracle::{brute_force_decompose, is_exact_cover};
use hypercube_cycles::torus::{kotzig_torus, lemma_8ell_coloring, recolor_indices, RecolorSquare};
use hypercube_cycles::verify::{check_certificate, check_cycle, check_decomposition, check_partitionable};
use hypercube_cycles::{CycleSeq, HypercubeDim, PartitionedDecomposition, ProductEmbedding};

const R0: &str = "0000 0100 0101 1101 1100 1000 1001 0001";
const R1: &str = "0011 0111 0110 1110 1111 1011 1010 0010";
const B0: &str = "0000 0010 0110 0100 1100 1110 1010 1000";
const B1: &str = "0011 0001 0101 0111 1111 1101 1001 1011";

const C1: &str = "011000 011010 011110 001110 001010 101010 101110 111110 111010 111011 111111 101111 101011 001011 001111 011111 011011 011001 011101 001101 001001 101001 101101 111101 111001 111000 111100 101100 101000 001000 001100 011100";
const C2: &str = "010100 010110 010010 000010 000110 100110 100010 110010 110110 110111 110011 100011 100111 000111 000011 010011 010111 010101 010001 000001 000101 100101 100001 110001 110101 110100 110000 100000 100100 000100 000000 010000";
const Q6B1: &str = "010110 010111 011111 011101 011100 111100 111101 111111 110111 110101 010101 000101 000111 001111 001101 001100 101100 101101 101111 100111 100101 100100 110100 010100 000100 000110 001110 101110 100110 110110 111110 011110";
const Q6B2: &str = "010110 110110 110100 111100 111110 111111 011111 011110 011100 010100 010101 011101 111101 110101 100101 101101 001101 000101 000100 001100 001110 001111 101111 101110 101100 100100 100110 100111 110111 010111 000111 000110";
const Y1: &str = "011010 011011 010011 010001 010000 110000 110001 110011 111011 111001 011001 001001 001011 000011 000001 000000 100000 100001 100011 101011 101001 101000 111000 011000 001000 001010 000010 100010 101010 111010 110010 010010";
const Y2: &str = "011010 111010 111000 110000 110010 110011 010011 010010 010000 011000 011001 010001 110001 111001 101001 100001 000001 001001 001000 000000 000010 000011 100011 100010 100000 101000 101010 101011 111011 011011 001011 001010";

/// Leftmost character is the lowest bit.
fn parse_listing(s: &str) -> Vec<u64> {
    s.split_whitespace()
        .map(|w| w.chars().enumerate().map(|(k, ch)| if ch == '1' { 1u64 << k } else { 0 }).sum())
        .collect()
}

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome { ok: true, detail: detail.into() }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome { ok: false, detail: detail.into() }
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let t = Instant::now();
    let mut o = f();
    let el = t.elapsed();
    if el > limit {
        o.ok = false;
        o.detail = format!("{} (took {el:.2?}, limit {limit:.2?})", o.detail);
    } else {
        o.detail = format!("{} [{el:.2?}]", o.detail);
    }
    o
}

fn base_certificates() -> Outcome {
    let q4 = q4_certificate();
    let want4: Vec<Vec<u64>> = [R0, R1, B0, B1].iter().map(|s| parse_listing(s)).collect();
    let got4: Vec<Vec<u64>> = q4.cycles().iter().map(|c| c.vertices().to_vec()).collect();
    if got4 != want4 || q4.set_of() != [0, 0, 1, 1] || q4.cycle_length() != 8 {
        return fail("q4 certificate differs from the listing");
    }
    let q6 = q6_certificate();
    let want6: Vec<Vec<u64>> = [C1, C2, Q6B1, Q6B2, Y1, Y2].iter().map(|s| parse_listing(s)).collect();
    let got6: Vec<Vec<u64>> = q6.cycles().iter().map(|c| c.vertices().to_vec()).collect();
    if got6 != want6 || q6.cycle_length() != 32 {
        return fail("q6 certificate differs from the listing");
    }
    // Sets {C1, C2}, {B1, Y1}, {B2, Y2}.
    let groups: BTreeSet<BTreeSet<usize>> = q6.sets().values().map(|cs| {
        cs.iter().map(|c| q6.cycles().iter().position(|d| std::ptr::eq(*c, d)).unwrap()).collect()
    }).collect();
    let want_groups: BTreeSet<BTreeSet<usize>> =
        [[0, 1], [2, 4], [3, 5]].iter().map(|g| g.iter().copied().collect()).collect();
    if groups != want_groups {
        return fail(format!("q6 partition sets {groups:?}"));
    }
    for d in [&q4, &q6] {
        let r = check_certificate(d);
        if !r.ok() {
            return fail(format!("certificate rejected:\n{r}"));
        }
    }
    pass("q4: 4 cycles x 8, q6: 6 cycles x 32, listings and sets match")
}

fn recolor_regression() -> Vec<Outcome> {
    let cases: [(usize, usize, Vec<usize>); 4] = [
        (2, 2, vec![1, 3, 5, 7]),
        (2, 8, (1..=7).collect()),
        (6, 6, (1..=24).filter(|i| ![6, 12, 18, 24].contains(i)).collect()),
        (6, 24, (1..=23).collect()),
    ];
    cases
        .into_iter()
        .map(|(ell, n, want)| {
            timed(Duration::from_millis(100), || {
                let got = recolor_indices(ell, n).unwrap();
                if got != want {
                    return fail(format!("l={ell} n={n}: recolor set {got:?}"));
                }
                let state = lemma_8ell_coloring(ell, n).unwrap();
                let applied: Vec<_> = state.applied().to_vec();
                let expect: Vec<_> = want.iter().map(|&k| RecolorSquare::new(k, ell).unwrap().square()).collect();
                if applied != expect {
                    return fail(format!("l={ell} n={n}: applied squares differ"));
                }
                let d = state.decomposition();
                let r = d.check();
                let per_set = 4 * ell / n;
                if !r.ok() || d.cycles.len() != 2 * per_set || d.cycles.iter().any(|c| c.len() != 4 * n) {
                    return fail(format!("l={ell} n={n}: torus check failed\n{r}"));
                }
                pass(format!("l={ell} n={n}: {} squares recoloured, {} cycles of length {}", want.len(), 2 * per_set, 4 * n))
            })
        })
        .collect()
}

fn peak_rss_kb() -> Option<u64> {
    let status = std::fs::read_to_string("/proc/self/status").ok()?;
    let line = status.lines().find(|l| l.starts_with("VmHWM:"))?;
    line.split_whitespace().nth(1)?.parse().ok()
}

fn sweep() -> Outcome {
    let mut cases = 0;
    let mut bad = Vec::new();
    for n in (2..=12u32).step_by(2) {
        for i in 2..=n {
            cases += 1;
            let req = DecompositionRequest::new(n, i).unwrap();
            let d = match decompose(req) {
                Ok(d) => d,
                Err(e) => {
                    bad.push(format!("n={n} i={i}: {e}"));
                    continue;
                }
            };
            let dim = HypercubeDim::new(n).unwrap();
            let cycles_ok = d.cycles().iter().all(|c| check_cycle(c, dim).ok());
            let dec_ok = check_decomposition(&d).ok();
            let part_ok = check_partitionable(&d).ok();
            let count = (n as usize) << (n - 1) >> i;
            let counts_ok = d.num_cycles() == count
                && d.num_sets() == n as usize / 2
                && d.sets().values().all(|s| s.len() == 1 << (n - i))
                && d.cycle_length() == 1 << i;
            if !(cycles_ok && dec_ok && part_ok && counts_ok) {
                bad.push(format!("n={n} i={i}: cycles={cycles_ok} decomposition={dec_ok} partitionable={part_ok} counts={counts_ok}"));
            }
        }
    }
    let rss = peak_rss_kb();
    if let Some(kb) = rss.filter(|&kb| kb > 1024 * 1024) {
        bad.push(format!("peak memory {kb} kB"));
    }
    // Even n in 2..=12 with 2 <= i <= n: 1 + 3 + 5 + 7 + 9 + 11.
    if cases != 36 {
        bad.push(format!("{cases} cases instead of 36"));
    }
    if bad.is_empty() {
        pass(format!("{cases} cases verified, peak memory {} kB", rss.map_or("?".into(), |k| k.to_string())))
    } else {
        fail(bad.join("; "))
    }
}

fn subroutines() -> Vec<Outcome> {
    let mut out = Vec::new();
    for a in [4, 8, 16, 32] {
        for b in [4, 8, 16, 32] {
            out.push(timed(Duration::from_secs(1), || match kotzig_torus(a, b) {
                Ok(d) if d.check().ok() && d.cycles.len() == 2 && d.cycles.iter().all(|c| c.len() == a * b) => {
                    pass(format!("C_{a} x C_{b}: two Hamiltonian cycles"))
                }
                Ok(_) => fail(format!("C_{a} x C_{b}: output rejected")),
                Err(e) => fail(format!("C_{a} x C_{b}: {e}")),
            }));
        }
    }
    out.push(timed(Duration::from_secs(1), || {
        let g = [0u64, 2, 3, 1];
        let t = kotzig_torus(4, 4).unwrap();
        let e = ProductEmbedding::new(2, 2).unwrap();
        let ham = t.map_to_labels(&g, &g, e);
        let pair = HamPair::new(&ham[0], &ham[1]).unwrap();
        let three = match as_product(&pair, 4) {
            Ok(t) => t,
            Err(err) => return fail(format!("three-cycle product: {err}")),
        };
        let d = PartitionedDecomposition::from_sets(
            HypercubeDim::new(6).unwrap(),
            64,
            three.iter().map(|c| vec![CycleSeq::new(c.iter().map(|&(u, z)| u | g[z] << 4).collect())]).collect(),
        );
        let r = check_certificate(&d);
        if r.ok() {
            pass("Q4 pair x C_4: three Hamiltonian 64-cycles of Q6")
        } else {
            fail(format!("three-cycle product rejected:\n{r}"))
        }
    }));
    out
}

fn oracle_cross_check() -> Outcome {
    let mut notes = Vec::new();
    for i in [2, 3] {
        let found = match brute_force_decompose(4, i) {
            Ok(Some(d)) => d,
            Ok(None) => return fail(format!("oracle found nothing for n=4 i={i}")),
            Err(e) => return fail(format!("oracle n=4 i={i}: {e}")),
        };
        let built = decompose(DecompositionRequest::new(4, i).unwrap()).unwrap();
        if !is_exact_cover(&found) || !is_exact_cover(&built) {
            return fail(format!("exact-cover predicate rejected n=4 i={i}"));
        }
        notes.push(format!("i={i}: oracle {} cycles, construction {} cycles", found.num_cycles(), built.num_cycles()));
    }
    pass(notes.join(", "))
}

fn determinism() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let mut files = Vec::new();
    for k in 0..2 {
        let p = dir.path().join(format!("run{k}.json"));
        let status = Command::new(env!("CARGO_BIN_EXE_hqd"))
            .args(["build", "--n", "10", "--i", "6", "--out"])
            .arg(&p)
            .status()
            .expect("spawn hqd");
        if !status.success() {
            return fail(format!("build run {k} exited with {status}"));
        }
        files.push(std::fs::read(&p).unwrap());
    }
    if files[0] == files[1] {
        pass(format!("two runs of build --n 10 --i 6 are byte-identical ({} bytes)", files[0].len()))
    } else {
        fail("outputs differ")
    }
}

fn negative_tests() -> Outcome {
    let dir = tempfile::tempdir().unwrap();
    let (host, len, cycles, sets) = q6_certificate().into_parts();
    let mutate = |cs: Vec<CycleSeq>, ss: Vec<usize>| PartitionedDecomposition::new(host, len, cs, ss).unwrap();

    let mut dropped = (cycles.clone(), sets.clone());
    dropped.0.pop();
    dropped.1.pop();
    let mut duplicated = (cycles.clone(), sets.clone());
    duplicated.0.push(cycles[5].clone());
    duplicated.1.push(sets[5]);
    let mut swapped = (cycles.clone(), sets.clone());
    let mut vs = swapped.0[0].clone().into_vertices();
    vs.swap(2, 4);
    swapped.0[0] = CycleSeq::new(vs);
    let mut wrong_set = (cycles.clone(), sets.clone());
    wrong_set.1[1] = 1;

    let cases = [
        ("dropped cycle", dropped, vec!["coverage"]),
        ("duplicated cycle", duplicated, vec!["disjointness"]),
        ("swapped vertices", swapped, vec!["adjacency"]),
        ("wrong partition set", wrong_set, vec!["vertex-overlap", "vertex-undercoverage"]),
    ];
    let mut notes = Vec::new();
    for (name, (cs, ss), want) in cases {
        let p = dir.path().join(format!("{}.json", name.replace(' ', "_")));
        std::fs::write(&p, to_json(&mutate(cs, ss), LabelStyle::Integer).unwrap()).unwrap();
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = cmd_verify(&p, None, None, &mut out, &mut err);
        let report = String::from_utf8(out).unwrap();
        let missing: Vec<_> = want.iter().filter(|w| !report.contains(&format!("[{w}]"))).collect();
        if code != 1 || !missing.is_empty() {
            return fail(format!("{name}: exit {code}, missing {missing:?}\n{report}"));
        }
        notes.push(format!("{name} -> {}", want.join("+")));
    }
    let clean = dir.path().join("clean.json");
    std::fs::write(&clean, to_json(&q6_certificate(), LabelStyle::Integer).unwrap()).unwrap();
    if cmd_verify(&clean, Some(6), Some(32), &mut Vec::new(), &mut Vec::new()) != 0 {
        return fail("unmodified certificate rejected");
    }
    pass(notes.join(", "))
}

fn main() {
    let mut results: Vec<(String, Outcome)> = Vec::new();
    results.push(("1 base certificates".into(), timed(Duration::from_millis(100), base_certificates)));
    for o in recolor_regression() {
        results.push(("2 recolouring regression".into(), o));
    }
    results.push(("3 decomposition sweep".into(), timed(Duration::from_secs(60), sweep)));
    for o in subroutines() {
        results.push(("4 subroutine validity".into(), o));
    }
    results.push(("5 oracle cross-check".into(), timed(Duration::from_secs(30), oracle_cross_check)));
    results.push(("6 determinism".into(), determinism()));
    results.push(("7 negative tests".into(), negative_tests()));

    let mut failed = 0;
    for (name, o) in &results {
        println!("{} criterion {name}: {}", if o.ok { "PASS" } else { "FAIL" }, o.detail);
        failed += usize::from(!o.ok);
    }
    println!("acceptance: {} checks, {failed} failed", results.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
