//! The two water-filling solvers and the solution type they share.
//!
//! Both solvers find the allocation maximizing the total result
//! `sum_i log(1 + a_i t_i)` under `sum_i t_i = budget`, `t_i >= 0`. The
//! optimum has a hydraulic shape: a common water level `1/a_min` is poured
//! over the floor of inaptitudes `1/a_i`, each activity's time is the water
//! depth above its floor, and activities whose floor emerges above the level
//! get nothing.
//!
//! [`solve_exact`] finds the active set in closed form after sorting by
//! aptitude; [`solve_bisection`] brackets the dual value and bisects. Neither
//! evaluates a logarithm, so the returned times and dual do not depend on any
//! result-reporting convention.

use crate::accum::{compensated_total, CompensatedSum};
use crate::allocation::Allocation;
use crate::error::{Error, Result};
use crate::profile::{AptitudeProfile, TimeBudget};

/// A solved allocation together with the dual value and water level that
/// certify it.
#[derive(Debug, Clone, PartialEq)]
pub struct WaterLevelSolution {
    budget: f64,
    allocation: Allocation,
    dual: f64,
    water_level: f64,
    active: Vec<bool>,
}

impl WaterLevelSolution {
    fn new(
        profile: &AptitudeProfile,
        budget: f64,
        times: Vec<f64>,
        dual: f64,
        water_level: f64,
    ) -> Self {
        let active = times.iter().map(|&t| t > 0.0).collect();
        let allocation = Allocation::new(profile, times)
            .expect("solver times are non-negative and aligned with the profile");
        Self {
            budget,
            allocation,
            dual,
            water_level,
            active,
        }
    }

    /// The budget this solution was requested for.
    pub fn budget(&self) -> f64 {
        self.budget
    }

    pub fn allocation(&self) -> &Allocation {
        &self.allocation
    }

    pub fn times(&self) -> &[f64] {
        self.allocation.times()
    }

    pub fn results(&self) -> &[f64] {
        self.allocation.results()
    }

    pub fn total_result(&self) -> f64 {
        self.allocation.total_result()
    }

    /// The Lagrange multiplier: the threshold aptitude below which activities
    /// are abandoned.
    pub fn dual(&self) -> f64 {
        self.dual
    }

    /// `1 / dual`: the common value of `time + inaptitude` over the active set.
    pub fn water_level(&self) -> f64 {
        self.water_level
    }

    /// Per-activity activity flags: true exactly when the time is positive.
    pub fn active(&self) -> &[bool] {
        &self.active
    }

    pub fn active_count(&self) -> usize {
        self.active.iter().filter(|&&a| a).count()
    }
}

/// The dual value, read as the marginal total-result gain per unit of
/// additional budget.
pub fn marginal_value(solution: &WaterLevelSolution) -> f64 {
    solution.dual()
}

fn single_activity_solution(profile: &AptitudeProfile, budget: f64) -> WaterLevelSolution {
    let aptitude = profile.activities()[0].aptitude();
    // stationarity: dual = a / (1 + a t) with the whole budget spent
    let dual = aptitude / (1.0 + aptitude * budget);
    WaterLevelSolution::new(profile, budget, vec![budget], dual, 1.0 / dual)
}

/// Indices sorted by descending aptitude, stable on the original index so
/// ties break deterministically.
fn descending_aptitude_order(profile: &AptitudeProfile) -> Vec<usize> {
    let mut order: Vec<usize> = (0..profile.len()).collect();
    let activities = profile.activities();
    order.sort_by(|&i, &j| {
        activities[j]
            .aptitude()
            .partial_cmp(&activities[i].aptitude())
            .expect("aptitudes are finite")
    });
    order
}

/// Closed-form water-filling solver.
///
/// Sorts activities by descending aptitude and scans candidate active-set
/// sizes `m`: with `S_m` the prefix sum of inaptitudes, the candidate level is
/// `(budget + S_m) / m`, valid while it strictly clears the `m`-th floor. The
/// largest valid `m` wins; active activities get the water depth above their
/// floor and everyone else gets zero. An activity whose aptitude exactly
/// equals the threshold stays inactive.
///
/// A zero budget returns the all-zero allocation with the level resting on
/// the highest-aptitude floor, keeping the solution path continuous as the
/// budget shrinks.
pub fn solve_exact(profile: &AptitudeProfile, budget: TimeBudget) -> WaterLevelSolution {
    let budget = budget.total();
    let n = profile.len();
    if n == 1 {
        return single_activity_solution(profile, budget);
    }

    let activities = profile.activities();
    let order = descending_aptitude_order(profile);

    let mut prefix = CompensatedSum::default();
    let mut chosen: Option<(usize, f64)> = None;
    for (rank, &idx) in order.iter().enumerate() {
        let inaptitude = activities[idx].inaptitude();
        prefix.add(inaptitude);
        let level = (budget + prefix.value()) / (rank + 1) as f64;
        if level > inaptitude {
            chosen = Some((rank + 1, level));
        }
    }

    // No strict winner means the budget is zero: rest the level on the
    // highest-aptitude floor.
    let (active_count, water_level) =
        chosen.unwrap_or((1, activities[order[0]].inaptitude()));
    let dual = 1.0 / water_level;

    let mut times = vec![0.0; n];
    for &idx in &order[..active_count] {
        let depth = water_level - activities[idx].inaptitude();
        if depth > 0.0 {
            times[idx] = depth;
        }
    }
    WaterLevelSolution::new(profile, budget, times, dual, water_level)
}

const MAX_BISECTION_ITERATIONS: usize = 200;

/// Time spent if the dual were `lambda`: `sum_i max(0, 1/lambda - 1/a_i)`.
/// Continuous and non-increasing in `lambda`.
fn spent_at(profile: &AptitudeProfile, lambda: f64) -> f64 {
    let water = 1.0 / lambda;
    compensated_total(
        profile
            .iter()
            .map(|a| (water - a.inaptitude()).max(0.0)),
    )
}

/// Dual-bisection water-filling solver.
///
/// Brackets the dual between `1 / (budget + max_i 1/a_i)` (which overspends)
/// and `max_i a_i` (which spends nothing) and bisects until the spend matches
/// the budget within `tolerance * max(1, budget)`. The resulting times are
/// rescaled multiplicatively so they sum to the budget exactly up to
/// rounding; the rescale moves each coordinate by at most the bisection
/// tolerance.
///
/// Rejects a zero budget; [`solve_exact`] owns that edge case.
pub fn solve_bisection(
    profile: &AptitudeProfile,
    budget: TimeBudget,
    tolerance: f64,
) -> Result<WaterLevelSolution> {
    if !(tolerance.is_finite() && tolerance > 0.0) {
        return Err(Error::InvalidTolerance(tolerance));
    }
    let budget = budget.total();
    if budget == 0.0 {
        return Err(Error::ZeroBudget);
    }
    if profile.len() == 1 {
        return Ok(single_activity_solution(profile, budget));
    }

    let mut lo = 1.0 / (budget + profile.max_inaptitude());
    let mut hi = profile.max_aptitude();
    let goal = tolerance * budget.max(1.0);

    let mut lambda = 0.5 * (lo + hi);
    for _ in 0..MAX_BISECTION_ITERATIONS {
        lambda = 0.5 * (lo + hi);
        let spent = spent_at(profile, lambda);
        if spent > 0.0 && (spent - budget).abs() <= goal {
            break;
        }
        if spent > budget {
            lo = lambda;
        } else {
            hi = lambda;
        }
        if hi - lo <= f64::EPSILON * hi {
            // bracket exhausted at floating-point resolution
            lambda = 0.5 * (lo + hi);
            break;
        }
    }

    let water_level = 1.0 / lambda;
    let mut times: Vec<f64> = profile
        .iter()
        .map(|a| (water_level - a.inaptitude()).max(0.0))
        .collect();
    // lambda sits strictly below max a_i, so the top activity spends > 0
    let spent = compensated_total(times.iter().copied());
    let scale = budget / spent;
    for t in &mut times {
        *t *= scale;
    }
    Ok(WaterLevelSolution::new(
        profile,
        budget,
        times,
        lambda,
        water_level,
    ))
}
