//! Runs every acceptance criterion and prints one line each.

use std::process::ExitCode;
use std::time::Instant;

use schreier::suite::{self, DEFAULT_SEED};

fn main() -> ExitCode {
    // `cargo test --test acceptance -- 2 8` runs only those criteria
    let picked: Vec<u32> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    let mut ran = 0;
    for &(id, _, _) in suite::CRITERIA.iter() {
        if !picked.is_empty() && !picked.contains(&id) {
            continue;
        }
        ran += 1;
        let start = Instant::now();
        let r = suite::run(id, DEFAULT_SEED).expect("known criterion");
        let mark = if r.passed { "PASS" } else { "FAIL" };
        println!("criterion {:>2} {mark} [{:.1}s] {}: {}", r.id, start.elapsed().as_secs_f64(), r.title, r.detail);
        failed += usize::from(!r.passed);
    }
    println!("acceptance: {} passed, {failed} failed", ran - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
