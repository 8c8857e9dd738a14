//! Watch the solution change as the budget grows.
//!
//! Activities enter the active set one at a time, cheapest floor first, at
//! analytically known budgets; the dual value falls monotonically and the
//! total result climbs concavely.
//!
//! ```bash
//! cargo run --example sweep_budgets
//! ```

use waterfill::{budget_sweep, AptitudeProfile};

fn main() -> waterfill::Result<()> {
    let profile = AptitudeProfile::from_pairs([
        ("piano", 0.8),
        ("horses", 1.6),
        ("motorbike", 0.4),
        ("math", 2.5),
    ])?;

    let curve = budget_sweep(&profile, 0.0, 6.0, 13)?;

    println!("activation breakpoints:");
    for bp in curve.breakpoints() {
        let name = profile.get(bp.activity).unwrap().name();
        println!("  {name:<10} enters at budget {:.4}", bp.entry_budget);
    }
    println!();

    println!(
        "{:>8} {:>10} {:>14} {:>8}",
        "budget", "dual", "total result", "active"
    );
    for (i, solution) in curve.solutions().iter().enumerate() {
        println!(
            "{:>8.2} {:>10.5} {:>14.6} {:>8}",
            curve.budgets()[i],
            solution.dual(),
            solution.total_result(),
            solution.active_count()
        );
    }

    // the dual never rises along the curve
    let duals: Vec<f64> = curve.duals().collect();
    assert!(duals.windows(2).all(|w| w[0] >= w[1] - 1e-12));
    Ok(())
}
