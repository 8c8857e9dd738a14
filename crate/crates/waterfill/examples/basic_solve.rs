//! Solve one budget over a small activity profile and read the solution.
//!
//! ```bash
//! cargo run --example basic_solve
//! ```

use waterfill::report::{emit_report, ReportFormat};
use waterfill::{marginal_value, solve_exact, AptitudeProfile, TimeBudget};

fn main() -> waterfill::Result<()> {
    // aptitudes: how fast each activity turns time into result
    let profile = AptitudeProfile::from_pairs([
        ("piano", 0.8),
        ("horses", 1.6),
        ("motorbike", 0.4),
        ("math", 2.5),
    ])?;

    let budget = TimeBudget::new(2.0)?;
    let solution = solve_exact(&profile, budget);

    println!("{}", emit_report(&solution, &profile, ReportFormat::Table)?);
    println!();
    println!(
        "every active column reaches the same level: time + 1/aptitude = {}",
        solution.water_level()
    );
    println!(
        "one extra unit of budget would add about {:.6} to the total result",
        marginal_value(&solution)
    );

    // activities below the dual threshold are abandoned entirely
    let dropped: Vec<&str> = profile
        .iter()
        .zip(solution.active())
        .filter(|(_, &active)| !active)
        .map(|(a, _)| a.name())
        .collect();
    println!("abandoned at this budget: {dropped:?}");
    Ok(())
}
