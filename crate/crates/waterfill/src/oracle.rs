//! Brute-force grid search over budget splits.
//!
//! The independent check on the water-filling solvers: enumerate every way to
//! compose the budget on a uniform grid, evaluate the total result of each,
//! and keep the best. Nothing here knows about water levels or duals.

use crate::allocation::Allocation;
use crate::error::{Error, Result};
use crate::profile::{AptitudeProfile, TimeBudget};

/// Dimension cap keeping the enumeration affordable.
pub const MAX_ORACLE_ACTIVITIES: usize = 4;

/// Exhaustively searches compositions of the budget into per-activity times.
///
/// Every coordinate except the last ranges over `grid_points` uniform levels
/// from zero to the budget; the last coordinate takes the remainder. Returns
/// the best allocation found, breaking ties toward the earliest enumerated
/// point.
pub fn brute_force_oracle(
    profile: &AptitudeProfile,
    budget: TimeBudget,
    grid_points: usize,
) -> Result<Allocation> {
    let n = profile.len();
    if n > MAX_ORACLE_ACTIVITIES {
        return Err(Error::TooManyActivities {
            max: MAX_ORACLE_ACTIVITIES,
            actual: n,
        });
    }
    if grid_points < 2 {
        return Err(Error::InvalidGridPoints(grid_points));
    }

    let budget = budget.total();
    if n == 1 || budget == 0.0 {
        let mut times = vec![0.0; n];
        times[n - 1] = budget;
        if n == 1 {
            times[0] = budget;
        }
        return Allocation::new(profile, times);
    }

    let aptitudes: Vec<f64> = profile.aptitudes().collect();
    let step = budget / (grid_points - 1) as f64;
    // partial grid sums can overshoot the remainder by a few ulps
    let slack = 1e-12 * budget.max(1.0);

    let mut best_value = f64::NEG_INFINITY;
    let mut best_times = vec![0.0; n];
    let mut times = vec![0.0; n];
    search(
        &aptitudes,
        step,
        grid_points,
        slack,
        0,
        budget,
        0.0,
        &mut times,
        &mut best_value,
        &mut best_times,
    );
    Allocation::new(profile, best_times)
}

#[allow(clippy::too_many_arguments)]
fn search(
    aptitudes: &[f64],
    step: f64,
    grid_points: usize,
    slack: f64,
    depth: usize,
    remaining: f64,
    value: f64,
    times: &mut [f64],
    best_value: &mut f64,
    best_times: &mut [f64],
) {
    if depth == aptitudes.len() - 1 {
        times[depth] = remaining;
        let total = value + (aptitudes[depth] * remaining).ln_1p();
        if total > *best_value {
            *best_value = total;
            best_times.copy_from_slice(times);
        }
        return;
    }
    for level in 0..grid_points {
        let t = (level as f64 * step).min(remaining);
        if level as f64 * step > remaining + slack {
            break;
        }
        times[depth] = t;
        search(
            aptitudes,
            step,
            grid_points,
            slack,
            depth + 1,
            remaining - t,
            value + (aptitudes[depth] * t).ln_1p(),
            times,
            best_value,
            best_times,
        );
    }
}
