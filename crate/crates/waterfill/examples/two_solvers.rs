//! Cross-check the closed-form solver against the dual-bisection solver.
//!
//! The two take entirely different routes: one sorts and scans active-set
//! sizes, the other brackets the dual value and bisects. They must land on
//! the same allocation.
//!
//! ```bash
//! cargo run --example two_solvers
//! ```

use waterfill::{solve_bisection, solve_exact, AptitudeProfile, TimeBudget};

fn main() -> waterfill::Result<()> {
    let profile = AptitudeProfile::from_pairs([
        ("sketching", 0.3),
        ("chess", 2.0),
        ("cooking", 1.2),
        ("running", 0.7),
        ("writing", 3.1),
    ])?;
    let budget = TimeBudget::new(3.0)?;

    let exact = solve_exact(&profile, budget);
    let bisected = solve_bisection(&profile, budget, 1e-12)?;

    println!("{:<10} {:>14} {:>14} {:>12}", "activity", "exact", "bisection", "difference");
    for (i, activity) in profile.iter().enumerate() {
        let a = exact.times()[i];
        let b = bisected.times()[i];
        println!(
            "{:<10} {:>14.10} {:>14.10} {:>12.2e}",
            activity.name(),
            a,
            b,
            (a - b).abs()
        );
    }
    println!();
    println!(
        "dual:  exact {:.12}  bisection {:.12}  difference {:.2e}",
        exact.dual(),
        bisected.dual(),
        (exact.dual() - bisected.dual()).abs()
    );

    let worst = exact
        .times()
        .iter()
        .zip(bisected.times())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0_f64, f64::max);
    assert!(worst < 1e-8, "solvers disagree by {worst}");
    println!("largest per-activity disagreement: {worst:.2e}");
    Ok(())
}
