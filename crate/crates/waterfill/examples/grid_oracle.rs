//! Pit the closed-form solver against an exhaustive grid search.
//!
//! The oracle enumerates every composition of the budget on a uniform grid
//! and knows nothing about water levels, so agreement is real evidence the
//! solver maximizes the total result.
//!
//! ```bash
//! cargo run --release --example grid_oracle
//! ```

use waterfill::{brute_force_oracle, solve_exact, AptitudeProfile, TimeBudget};

fn main() -> waterfill::Result<()> {
    let profile =
        AptitudeProfile::from_pairs([("piano", 1.8), ("chess", 0.6), ("math", 3.0)])?;

    for total in [0.2, 1.0, 5.0] {
        let budget = TimeBudget::new(total)?;
        let solved = solve_exact(&profile, budget);
        let gridded = brute_force_oracle(&profile, budget, 201)?;

        println!("budget {total}");
        println!("  solver total result: {:.9}", solved.total_result());
        println!("  grid   total result: {:.9}", gridded.total_result());
        println!(
            "  solver advantage:    {:.3e}",
            solved.total_result() - gridded.total_result()
        );
        let gap = solved
            .times()
            .iter()
            .zip(gridded.times())
            .map(|(s, g)| (s - g).abs())
            .fold(0.0_f64, f64::max);
        println!("  largest time gap:    {gap:.3e}  (grid step {:.3e})", total / 200.0);

        assert!(solved.total_result() >= gridded.total_result() - 1e-9);
        println!();
    }
    Ok(())
}
