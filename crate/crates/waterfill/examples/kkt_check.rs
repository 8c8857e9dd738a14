//! Certify a candidate allocation with the KKT residuals.
//!
//! An optimal allocation zeroes all four residuals; moving any time between
//! activities breaks at least one of them.
//!
//! ```bash
//! cargo run --example kkt_check
//! ```

use waterfill::{solve_exact, verify_kkt, AptitudeProfile, TimeBudget};

fn print_report(label: &str, report: &waterfill::KktReport) {
    println!("{label}");
    for (name, value) in report.residuals() {
        println!("  {name:<20}{value:.3e}");
    }
    println!("  -> {}", if report.passed { "PASS" } else { "FAIL" });
    println!();
}

fn main() -> waterfill::Result<()> {
    let profile = AptitudeProfile::from_pairs([("piano", 2.0), ("math", 1.0)])?;
    let budget = TimeBudget::new(1.0)?;

    // the solver's own output certifies cleanly
    let solution = solve_exact(&profile, budget);
    let report = verify_kkt(&profile, budget, solution.times(), 1e-9)?;
    print_report("solver output:", &report);

    // dumping everything on the strongest activity leaves its marginal
    // result below what the idle activity still offers
    let lopsided = verify_kkt(&profile, budget, &[1.0, 0.0], 1e-9)?;
    print_report("all-in on the best activity:", &lopsided);

    // overspending the budget fails primal feasibility
    let overspent = verify_kkt(&profile, budget, &[0.8, 0.4], 1e-9)?;
    print_report("overspent budget:", &overspent);
    Ok(())
}
