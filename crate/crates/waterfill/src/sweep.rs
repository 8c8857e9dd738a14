//! Budget sweeps: how the solution changes as the budget grows.
//!
//! As the budget increases the water level rises, the dual falls, and
//! activities enter the active set one by one at analytically computable
//! budgets. A [`SweepCurve`] samples solutions across a budget range and
//! carries those entry breakpoints.

use rayon::prelude::*;

use crate::accum::CompensatedSum;
use crate::error::{Error, Result};
use crate::profile::{AptitudeProfile, TimeBudget};
use crate::solver::{solve_exact, WaterLevelSolution};

/// The smallest budget at which an activity first receives positive time.
#[derive(Debug, Clone, PartialEq)]
pub struct Breakpoint {
    /// Index of the activity in the input profile.
    pub activity: usize,
    /// Budget at which it enters the active set.
    pub entry_budget: f64,
}

/// Solutions sampled across a budget range plus the activation breakpoints.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepCurve {
    budgets: Vec<f64>,
    solutions: Vec<WaterLevelSolution>,
    breakpoints: Vec<Breakpoint>,
}

impl SweepCurve {
    pub fn budgets(&self) -> &[f64] {
        &self.budgets
    }

    pub fn solutions(&self) -> &[WaterLevelSolution] {
        &self.solutions
    }

    /// Sorted by entry budget; the highest-aptitude activity enters at zero.
    pub fn breakpoints(&self) -> &[Breakpoint] {
        &self.breakpoints
    }

    pub fn duals(&self) -> impl Iterator<Item = f64> + '_ {
        self.solutions.iter().map(WaterLevelSolution::dual)
    }

    pub fn total_results(&self) -> impl Iterator<Item = f64> + '_ {
        self.solutions.iter().map(WaterLevelSolution::total_result)
    }

    pub fn len(&self) -> usize {
        self.budgets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.budgets.is_empty()
    }
}

/// Entry budgets for every activity, cheapest first.
///
/// With activities sorted by descending aptitude, the `k`-th activity enters
/// once the first `k - 1` floors are flooded up to its own floor height:
/// `(k - 1) / a_(k) - sum_{i<k} 1/a_(i)`. Equal aptitudes enter together.
pub fn activation_breakpoints(profile: &AptitudeProfile) -> Vec<Breakpoint> {
    let activities = profile.activities();
    let mut order: Vec<usize> = (0..profile.len()).collect();
    order.sort_by(|&i, &j| {
        activities[j]
            .aptitude()
            .partial_cmp(&activities[i].aptitude())
            .expect("aptitudes are finite")
    });

    let mut prefix = CompensatedSum::default();
    let mut breakpoints = Vec::with_capacity(order.len());
    for (rank, &idx) in order.iter().enumerate() {
        let inaptitude = activities[idx].inaptitude();
        let entry = (rank as f64 * inaptitude - prefix.value()).max(0.0);
        breakpoints.push(Breakpoint {
            activity: idx,
            entry_budget: entry,
        });
        prefix.add(inaptitude);
    }
    breakpoints
}

/// Solves at `steps` budgets spaced uniformly over `[budget_min, budget_max]`
/// and pairs the samples with the analytic activation breakpoints.
///
/// Sample points solve independently and may run in parallel; the curve is
/// assembled in budget order regardless.
pub fn budget_sweep(
    profile: &AptitudeProfile,
    budget_min: f64,
    budget_max: f64,
    steps: usize,
) -> Result<SweepCurve> {
    if !(budget_min.is_finite() && budget_max.is_finite())
        || budget_min < 0.0
        || budget_max <= budget_min
    {
        return Err(Error::InvalidSweepRange {
            min: budget_min,
            max: budget_max,
        });
    }
    if steps < 2 {
        return Err(Error::InvalidSteps(steps));
    }

    let span = budget_max - budget_min;
    let budgets: Vec<f64> = (0..steps)
        .map(|k| budget_min + span * k as f64 / (steps - 1) as f64)
        .collect();
    let solutions: Vec<WaterLevelSolution> = budgets
        .par_iter()
        .map(|&b| {
            let budget = TimeBudget::new(b).expect("sampled budgets are finite and non-negative");
            solve_exact(profile, budget)
        })
        .collect();

    Ok(SweepCurve {
        budgets,
        solutions,
        breakpoints: activation_breakpoints(profile),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn profile(aptitudes: &[f64]) -> AptitudeProfile {
        AptitudeProfile::from_pairs(
            aptitudes
                .iter()
                .enumerate()
                .map(|(i, &a)| (format!("activity-{i}"), a)),
        )
        .unwrap()
    }

    #[test]
    fn weak_activity_enters_at_half() {
        // flooding the strong floor up to the weak one costs 1/1 - 1/2 = 0.5
        let bps = activation_breakpoints(&profile(&[2.0, 1.0]));
        assert_eq!(bps[0].activity, 0);
        assert_eq!(bps[0].entry_budget, 0.0);
        assert_eq!(bps[1].activity, 1);
        assert_eq!(bps[1].entry_budget, 0.5);

        // the entry really is where the time crosses zero
        let before = solve_exact(&profile(&[2.0, 1.0]), TimeBudget::new(0.49).unwrap());
        let after = solve_exact(&profile(&[2.0, 1.0]), TimeBudget::new(0.51).unwrap());
        assert_eq!(before.times()[1], 0.0);
        assert!(after.times()[1] > 0.0);
    }

    #[test]
    fn equal_aptitudes_enter_together_at_zero() {
        let bps = activation_breakpoints(&profile(&[3.0, 3.0, 3.0]));
        for bp in &bps {
            assert_eq!(bp.entry_budget, 0.0);
        }
    }

    #[test]
    fn breakpoints_sorted_and_anchored_at_zero() {
        let p = profile(&[0.5, 4.0, 2.0, 1.0]);
        let bps = activation_breakpoints(&p);
        assert_eq!(bps[0].activity, 1, "highest aptitude enters first");
        assert_eq!(bps[0].entry_budget, 0.0);
        for pair in bps.windows(2) {
            assert!(pair[0].entry_budget <= pair[1].entry_budget);
        }
    }

    #[test]
    fn sweep_duals_fall_and_results_rise() {
        let curve = budget_sweep(&profile(&[2.0, 1.0, 0.5]), 0.0, 4.0, 33).unwrap();
        assert_eq!(curve.len(), 33);
        let duals: Vec<f64> = curve.duals().collect();
        for pair in duals.windows(2) {
            assert!(pair[0] >= pair[1] - 1e-12);
        }
        let totals: Vec<f64> = curve.total_results().collect();
        for pair in totals.windows(2) {
            assert!(pair[1] >= pair[0] - 1e-12);
        }
        let budgets = curve.budgets();
        for pair in budgets.windows(2) {
            assert!(pair[0] < pair[1]);
        }
    }

    #[test]
    fn sweep_rejects_bad_ranges() {
        let p = profile(&[1.0]);
        assert!(matches!(
            budget_sweep(&p, -1.0, 2.0, 10),
            Err(Error::InvalidSweepRange { .. })
        ));
        assert!(matches!(
            budget_sweep(&p, 2.0, 2.0, 10),
            Err(Error::InvalidSweepRange { .. })
        ));
        assert!(matches!(
            budget_sweep(&p, 0.0, 2.0, 1),
            Err(Error::InvalidSteps(1))
        ));
    }

    #[test]
    fn sweep_endpoints_are_inclusive() {
        let curve = budget_sweep(&profile(&[1.0, 2.0]), 0.5, 2.5, 5).unwrap();
        assert_eq!(curve.budgets()[0], 0.5);
        assert_eq!(curve.budgets()[4], 2.5);
    }
}
