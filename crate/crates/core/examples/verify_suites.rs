//! Runs every randomized identity suite in dimensions 2 and 3 and prints a summary.

use tropint::verify::{run_suite, Suite};

fn main() -> tropint::Result<()> {
    let seed = std::env::args()
        .nth(1)
        .and_then(|s| s.parse().ok())
        .unwrap_or(0);
    for dim in [2, 3] {
        for suite in Suite::ALL {
            let report = run_suite(suite, 10, seed, dim)?;
            println!(
                "{suite:>15} dim {dim}: {} passed, {} failed",
                report.passed, report.failed
            );
        }
    }
    Ok(())
}
