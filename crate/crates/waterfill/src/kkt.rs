//! Optimality certification for candidate allocations.
//!
//! A candidate is optimal exactly when it satisfies the four
//! Karush-Kuhn-Tucker conditions of the budgeted log-utility problem:
//! primal feasibility, non-negativity, stationarity of the marginal result
//! on the supported activities, and dual feasibility off them.

use crate::accum::compensated_total;
use crate::error::{Error, Result};
use crate::profile::{AptitudeProfile, TimeBudget};

/// Residuals certifying (or refuting) optimality of a candidate allocation.
///
/// Each residual is a violation magnitude: zero for a perfect certificate,
/// and the candidate passes when every residual is within tolerance.
#[derive(Debug, Clone, PartialEq)]
pub struct KktReport {
    /// Multiplier recovered from the candidate: the largest marginal result
    /// `a_i / (1 + a_i t_i)` over the supported activities.
    pub multiplier: f64,
    /// `|sum of times - budget|`.
    pub primal: f64,
    /// Magnitude of the most negative time, or zero if none is negative.
    pub non_negativity: f64,
    /// Largest deviation of a supported activity's marginal result from the
    /// multiplier.
    pub stationarity: f64,
    /// Largest amount by which an unsupported activity's aptitude exceeds
    /// the multiplier.
    pub dual_feasibility: f64,
    /// The tolerance the verdict was taken at.
    pub tolerance: f64,
    /// True iff every residual is within tolerance.
    pub passed: bool,
}

impl KktReport {
    /// The four residuals as `(label, value)` pairs, in report order.
    pub fn residuals(&self) -> [(&'static str, f64); 4] {
        [
            ("primal feasibility", self.primal),
            ("non-negativity", self.non_negativity),
            ("stationarity", self.stationarity),
            ("dual feasibility", self.dual_feasibility),
        ]
    }
}

/// Checks a candidate time vector against the KKT conditions at `tolerance`.
///
/// Activities with `time > tolerance` count as supported. The multiplier is
/// recovered from the supported activities' marginal results; when nothing is
/// supported (a zero candidate) it falls back to the largest aptitude, which
/// is the correct dual at zero budget.
pub fn verify_kkt(
    profile: &AptitudeProfile,
    budget: TimeBudget,
    times: &[f64],
    tolerance: f64,
) -> Result<KktReport> {
    if !(tolerance.is_finite() && tolerance > 0.0) {
        return Err(Error::InvalidTolerance(tolerance));
    }
    if times.len() != profile.len() {
        return Err(Error::LengthMismatch {
            expected: profile.len(),
            actual: times.len(),
        });
    }
    if let Some(&bad) = times.iter().find(|t| !t.is_finite()) {
        return Err(Error::NonFiniteTime(bad));
    }

    let marginal = |aptitude: f64, time: f64| aptitude / (1.0 + aptitude * time);
    let supported = |time: f64| time > tolerance;

    let multiplier = profile
        .iter()
        .zip(times)
        .filter(|(_, &t)| supported(t))
        .map(|(a, &t)| marginal(a.aptitude(), t))
        .fold(f64::NEG_INFINITY, f64::max);
    let multiplier = if multiplier.is_finite() {
        multiplier
    } else {
        profile.max_aptitude()
    };

    let primal = (compensated_total(times.iter().copied()) - budget.total()).abs();
    let min_time = times.iter().fold(f64::INFINITY, |acc, &t| acc.min(t));
    let non_negativity = if min_time < 0.0 { -min_time } else { 0.0 };
    let stationarity = profile
        .iter()
        .zip(times)
        .filter(|(_, &t)| supported(t))
        .map(|(a, &t)| (marginal(a.aptitude(), t) - multiplier).abs())
        .fold(0.0_f64, f64::max);
    let dual_feasibility = profile
        .iter()
        .zip(times)
        .filter(|(_, &t)| !supported(t))
        .map(|(a, _)| (a.aptitude() - multiplier).max(0.0))
        .fold(0.0_f64, f64::max);

    let passed = [primal, non_negativity, stationarity, dual_feasibility]
        .iter()
        .all(|&r| r <= tolerance);

    Ok(KktReport {
        multiplier,
        primal,
        non_negativity,
        stationarity,
        dual_feasibility,
        tolerance,
        passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::solve_exact;

    fn profile(aptitudes: &[f64]) -> AptitudeProfile {
        AptitudeProfile::from_pairs(
            aptitudes
                .iter()
                .enumerate()
                .map(|(i, &a)| (format!("activity-{i}"), a)),
        )
        .unwrap()
    }

    fn budget(total: f64) -> TimeBudget {
        TimeBudget::new(total).unwrap()
    }

    #[test]
    fn optimal_candidate_passes() {
        let p = profile(&[2.0, 1.0]);
        let report = verify_kkt(&p, budget(1.0), &[0.75, 0.25], 1e-9).unwrap();
        assert!(report.passed, "residuals: {report:?}");
        assert!((report.multiplier - 0.8).abs() < 1e-15);
    }

    #[test]
    fn lopsided_candidate_fails_dual_feasibility() {
        // everything on the strong activity: its marginal drops to
        // 2 / (1 + 2) = 2/3 while the idle activity could still earn at
        // rate 1, so dual feasibility is violated by 1/3
        let p = profile(&[2.0, 1.0]);
        let report = verify_kkt(&p, budget(1.0), &[1.0, 0.0], 1e-9).unwrap();
        assert!(!report.passed);
        assert!((report.multiplier - 2.0 / 3.0).abs() < 1e-15);
        assert!((report.dual_feasibility - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(report.stationarity, 0.0);
        assert_eq!(report.primal, 0.0);
    }

    #[test]
    fn single_activity_always_passes() {
        let p = profile(&[3.0]);
        let report = verify_kkt(&p, budget(2.0), &[2.0], 1e-9).unwrap();
        assert!(report.passed);
    }

    #[test]
    fn zero_candidate_for_zero_budget_passes() {
        let p = profile(&[2.0, 1.0]);
        let report = verify_kkt(&p, budget(0.0), &[0.0, 0.0], 1e-9).unwrap();
        assert!(report.passed);
        assert_eq!(report.multiplier, 2.0);
    }

    #[test]
    fn infeasible_candidate_fails_primal() {
        let p = profile(&[2.0, 1.0]);
        let report = verify_kkt(&p, budget(1.0), &[0.75, 0.75], 1e-9).unwrap();
        assert!(!report.passed);
        assert!((report.primal - 0.5).abs() < 1e-15);
    }

    #[test]
    fn negative_time_fails_non_negativity() {
        let p = profile(&[2.0, 1.0]);
        let report = verify_kkt(&p, budget(1.0), &[1.5, -0.5], 1e-9).unwrap();
        assert!(!report.passed);
        assert_eq!(report.non_negativity, 0.5);
    }

    #[test]
    fn rejects_bad_inputs() {
        let p = profile(&[2.0, 1.0]);
        assert!(matches!(
            verify_kkt(&p, budget(1.0), &[1.0], 1e-9),
            Err(Error::LengthMismatch { .. })
        ));
        assert!(matches!(
            verify_kkt(&p, budget(1.0), &[f64::NAN, 0.0], 1e-9),
            Err(Error::NonFiniteTime(_))
        ));
        assert!(matches!(
            verify_kkt(&p, budget(1.0), &[0.5, 0.5], -1.0),
            Err(Error::InvalidTolerance(_))
        ));
    }

    #[test]
    fn exact_solver_output_always_verifies() {
        for (aptitudes, b) in [
            (vec![2.0, 1.0], 1.0),
            (vec![4.0, 1.0], 0.1),
            (vec![3.0, 3.0, 3.0], 2.0),
            (vec![0.2, 5.0, 1.0, 2.5], 7.0),
        ] {
            let p = profile(&aptitudes);
            let s = solve_exact(&p, budget(b));
            let report = verify_kkt(&p, budget(b), s.times(), 1e-9).unwrap();
            assert!(report.passed, "a={aptitudes:?} b={b}: {report:?}");
        }
    }
}
