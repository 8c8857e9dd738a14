//! The diminishing-returns law and allocations evaluated under it.

use crate::accum::CompensatedSum;
use crate::error::{Error, Result};
use crate::profile::AptitudeProfile;

/// Result earned by spending `time` on an activity with the given `aptitude`:
/// the natural logarithm of `1 + aptitude * time`.
///
/// Zero time earns exactly zero result.
pub fn result_of(aptitude: f64, time: f64) -> Result<f64> {
    if !(aptitude.is_finite() && aptitude > 0.0) {
        return Err(Error::InvalidAptitude(aptitude));
    }
    if !(time.is_finite() && time >= 0.0) {
        return Err(Error::InvalidTime(time));
    }
    Ok((aptitude * time).ln_1p())
}

/// Total result of spending `times` across the profile's activities.
pub fn total_result(profile: &AptitudeProfile, times: &[f64]) -> Result<f64> {
    if times.len() != profile.len() {
        return Err(Error::LengthMismatch {
            expected: profile.len(),
            actual: times.len(),
        });
    }
    let mut acc = CompensatedSum::default();
    for (activity, &time) in profile.iter().zip(times) {
        acc.add(result_of(activity.aptitude(), time)?);
    }
    Ok(acc.value())
}

/// Per-activity times together with the results they earn.
///
/// Times align index-for-index with the profile the allocation was built for.
#[derive(Debug, Clone, PartialEq)]
pub struct Allocation {
    times: Vec<f64>,
    results: Vec<f64>,
    total_result: f64,
}

impl Allocation {
    /// Validates the times against the profile and evaluates the results.
    pub fn new(profile: &AptitudeProfile, times: Vec<f64>) -> Result<Self> {
        if times.len() != profile.len() {
            return Err(Error::LengthMismatch {
                expected: profile.len(),
                actual: times.len(),
            });
        }
        let mut results = Vec::with_capacity(times.len());
        let mut acc = CompensatedSum::default();
        for (activity, &time) in profile.iter().zip(&times) {
            let r = result_of(activity.aptitude(), time)?;
            results.push(r);
            acc.add(r);
        }
        Ok(Self {
            times,
            results,
            total_result: acc.value(),
        })
    }

    pub fn times(&self) -> &[f64] {
        &self.times
    }

    pub fn results(&self) -> &[f64] {
        &self.results
    }

    pub fn total_result(&self) -> f64 {
        self.total_result
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// Sum of the allocated times.
    pub fn spent(&self) -> f64 {
        crate::accum::compensated_total(self.times.iter().copied())
    }
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
    fn zero_time_earns_zero() {
        assert_eq!(result_of(1.0, 0.0).unwrap(), 0.0);
    }

    #[test]
    fn unit_result_at_e_minus_one() {
        // log(1 + (e - 1)) = 1 by definition of the natural log
        let r = result_of(1.0, std::f64::consts::E - 1.0).unwrap();
        assert!((r - 1.0).abs() < 1e-15, "got {r}");
    }

    #[test]
    fn matches_independent_log_evaluation() {
        // log(1 + 2 * 0.75) = log 2.5 = 0.916290731874155... (external evaluator)
        let r = result_of(2.0, 0.75).unwrap();
        assert!((r - 0.916_290_731_874_155_1).abs() < 1e-15, "got {r}");
    }

    #[test]
    fn result_rejects_bad_inputs() {
        assert!(matches!(
            result_of(0.0, 1.0),
            Err(Error::InvalidAptitude(_))
        ));
        assert!(matches!(result_of(1.0, -0.5), Err(Error::InvalidTime(_))));
        assert!(matches!(
            result_of(1.0, f64::NAN),
            Err(Error::InvalidTime(_))
        ));
    }

    #[test]
    fn total_result_sums_independent_logs() {
        let p = profile(&[2.0, 1.0]);
        // log 2.5 + log 1.25 = 1.13943428318836... (external evaluator)
        let total = total_result(&p, &[0.75, 0.25]).unwrap();
        assert!((total - 1.139_434_283_188_364_8).abs() < 1e-15, "got {total}");
    }

    #[test]
    fn total_result_zero_allocation() {
        let p = profile(&[1.0, 1.0]);
        assert_eq!(total_result(&p, &[0.0, 0.0]).unwrap(), 0.0);
    }

    #[test]
    fn total_result_single_activity() {
        let p = profile(&[3.0]);
        let total = total_result(&p, &[1.0]).unwrap();
        assert!((total - 4.0_f64.ln()).abs() < 1e-15);
    }

    #[test]
    fn total_result_checks_length_and_domain() {
        let p = profile(&[2.0, 1.0]);
        assert_eq!(
            total_result(&p, &[1.0]),
            Err(Error::LengthMismatch {
                expected: 2,
                actual: 1
            })
        );
        assert!(matches!(
            total_result(&p, &[0.5, -0.5]),
            Err(Error::InvalidTime(_))
        ));
    }

    #[test]
    fn allocation_evaluates_rows() {
        let p = profile(&[2.0, 1.0]);
        let alloc = Allocation::new(&p, vec![0.75, 0.25]).unwrap();
        assert_eq!(alloc.times(), &[0.75, 0.25]);
        assert_eq!(alloc.results().len(), 2);
        assert_eq!(alloc.results()[0], 2.5_f64.ln());
        assert!((alloc.total_result() - 1.139_434_283_188_364_8).abs() < 1e-15);
        assert!((alloc.spent() - 1.0).abs() < 1e-15);
    }
}
