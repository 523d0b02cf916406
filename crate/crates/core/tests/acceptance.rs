//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

use std::process::ExitCode;
use std::time::Instant;

use pezzo::surface::Catalog;
use pezzo::verify::verify_criterion;

fn main() -> ExitCode {
    let catalog = Catalog::builtin();
    let mut failed = 0;
    for n in 1..=7 {
        let start = Instant::now();
        let result = verify_criterion(catalog, n).expect("criterion numbers 1 to 7 exist");
        println!("{result} [{:.1}s]", start.elapsed().as_secs_f64());
        for f in result.failures.iter().take(20) {
            println!("    {f}");
        }
        if result.failures.len() > 20 {
            println!("    ... {} more", result.failures.len() - 20);
        }
        if !result.passed() {
            failed += 1;
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
