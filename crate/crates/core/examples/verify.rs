//! Runs every verify suite and prints the report with timings.

use sigma2_k0::verify::{run_verify, Suite, VerifyBounds};

fn main() -> sigma2_k0::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let report = run_verify(&Suite::ALL, seed, &VerifyBounds::default())?;
    println!("{report}");
    if !report.passed() {
        std::process::exit(1);
    }
    Ok(())
}
