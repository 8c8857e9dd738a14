//! Draw the container picture at a small and a large budget.
//!
//! With little time, only the deepest floor (best aptitude) is under water;
//! with plenty, the level rises above every floor and all activities run.
//!
//! ```bash
//! cargo run --example water_chart
//! ```

use waterfill::chart::render_chart;
use waterfill::{solve_exact, AptitudeProfile, TimeBudget};

fn main() -> waterfill::Result<()> {
    let profile = AptitudeProfile::from_pairs([
        ("piano", 0.8),
        ("horses", 1.6),
        ("motorbike", 0.4),
        ("math", 2.5),
    ])?;

    for total in [0.25, 8.0] {
        let budget = TimeBudget::new(total)?;
        let solution = solve_exact(&profile, budget);
        println!("budget = {total}");
        println!("{}", render_chart(&profile, &solution, 60, 16)?);
        println!();
    }
    Ok(())
}
