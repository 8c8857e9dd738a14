//! The dual value is the derivative of the total result in the budget.
//!
//! Away from activation breakpoints, nudging the budget by `h` changes the
//! optimal total result by `dual * h` to first order. This example measures
//! that with finite differences.
//!
//! ```bash
//! cargo run --example marginal_value
//! ```

use waterfill::{marginal_value, solve_exact, AptitudeProfile, TimeBudget};

fn main() -> waterfill::Result<()> {
    let profile = AptitudeProfile::from_pairs([
        ("piano", 0.8),
        ("horses", 1.6),
        ("math", 2.5),
    ])?;

    let h = 1e-6;
    println!(
        "{:>8} {:>14} {:>14} {:>12}",
        "budget", "dual", "finite diff", "rel. error"
    );
    for total in [0.5, 1.0, 2.0, 4.0, 8.0] {
        let here = solve_exact(&profile, TimeBudget::new(total)?);
        let nudged = solve_exact(&profile, TimeBudget::new(total + h)?);
        let finite_diff = (nudged.total_result() - here.total_result()) / h;
        let dual = marginal_value(&here);
        println!(
            "{:>8.2} {:>14.8} {:>14.8} {:>12.2e}",
            total,
            dual,
            finite_diff,
            ((finite_diff - dual) / dual).abs()
        );
    }
    Ok(())
}
