//! Domain types: activities, aptitude profiles, and time budgets.

use std::collections::HashSet;

use crate::error::{Error, Result};

/// A named activity with a strictly positive aptitude.
///
/// The aptitude is the rate at which spent time turns into result inside the
/// logarithm; its reciprocal (the [`inaptitude`](Activity::inaptitude)) is the
/// floor height of the activity's column in the hydraulic picture.
#[derive(Debug, Clone, PartialEq)]
pub struct Activity {
    name: String,
    aptitude: f64,
}

impl Activity {
    pub fn new(name: impl Into<String>, aptitude: f64) -> Result<Self> {
        let name = name.into();
        if name.is_empty() {
            return Err(Error::EmptyName);
        }
        if !(aptitude.is_finite() && aptitude > 0.0) {
            return Err(Error::InvalidAptitude(aptitude));
        }
        Ok(Self { name, aptitude })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn aptitude(&self) -> f64 {
        self.aptitude
    }

    /// Reciprocal of the aptitude.
    pub fn inaptitude(&self) -> f64 {
        1.0 / self.aptitude
    }
}

/// An ordered, non-empty list of activities with pairwise-distinct names.
///
/// Input order is preserved everywhere; solvers sort internally but report
/// times in the order the profile was built.
#[derive(Debug, Clone, PartialEq)]
pub struct AptitudeProfile {
    activities: Vec<Activity>,
}

impl AptitudeProfile {
    pub fn new(activities: Vec<Activity>) -> Result<Self> {
        if activities.is_empty() {
            return Err(Error::EmptyProfile);
        }
        let mut seen = HashSet::new();
        for activity in &activities {
            if !seen.insert(activity.name()) {
                return Err(Error::DuplicateName(activity.name().to_string()));
            }
        }
        Ok(Self { activities })
    }

    /// Convenience constructor from `(name, aptitude)` pairs.
    pub fn from_pairs<I, S>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (S, f64)>,
        S: Into<String>,
    {
        let activities = pairs
            .into_iter()
            .map(|(name, aptitude)| Activity::new(name, aptitude))
            .collect::<Result<Vec<_>>>()?;
        Self::new(activities)
    }

    pub fn len(&self) -> usize {
        self.activities.len()
    }

    /// Always false: profiles hold at least one activity.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn activities(&self) -> &[Activity] {
        &self.activities
    }

    pub fn get(&self, index: usize) -> Option<&Activity> {
        self.activities.get(index)
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Activity> {
        self.activities.iter()
    }

    pub fn aptitudes(&self) -> impl Iterator<Item = f64> + '_ {
        self.activities.iter().map(Activity::aptitude)
    }

    pub fn max_aptitude(&self) -> f64 {
        self.aptitudes().fold(f64::NEG_INFINITY, f64::max)
    }

    pub fn max_inaptitude(&self) -> f64 {
        self.iter()
            .map(Activity::inaptitude)
            .fold(f64::NEG_INFINITY, f64::max)
    }
}

impl<'a> IntoIterator for &'a AptitudeProfile {
    type Item = &'a Activity;
    type IntoIter = std::slice::Iter<'a, Activity>;

    fn into_iter(self) -> Self::IntoIter {
        self.activities.iter()
    }
}

/// The total divisible budget to split across activities.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct TimeBudget(f64);

impl TimeBudget {
    pub fn new(total: f64) -> Result<Self> {
        if !(total.is_finite() && total >= 0.0) {
            return Err(Error::InvalidBudget(total));
        }
        Ok(Self(total))
    }

    pub fn total(self) -> f64 {
        self.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn activity_rejects_empty_name() {
        assert_eq!(Activity::new("", 1.0), Err(Error::EmptyName));
    }

    #[test]
    fn activity_rejects_bad_aptitudes() {
        for bad in [0.0, -1.0, f64::NAN, f64::INFINITY, f64::NEG_INFINITY] {
            assert!(matches!(
                Activity::new("piano", bad),
                Err(Error::InvalidAptitude(_))
            ));
        }
    }

    #[test]
    fn inaptitude_is_reciprocal() {
        let a = Activity::new("math", 4.0).unwrap();
        assert_eq!(a.inaptitude(), 0.25);
    }

    #[test]
    fn profile_rejects_duplicates_and_empty() {
        assert_eq!(AptitudeProfile::new(vec![]), Err(Error::EmptyProfile));
        let result = AptitudeProfile::from_pairs([("math", 2.0), ("math", 1.0)]);
        assert_eq!(result, Err(Error::DuplicateName("math".to_string())));
    }

    #[test]
    fn profile_preserves_order() {
        let p = AptitudeProfile::from_pairs([("piano", 0.5), ("math", 2.0)]).unwrap();
        assert_eq!(p.len(), 2);
        assert_eq!(p.get(0).unwrap().name(), "piano");
        assert_eq!(p.get(1).unwrap().name(), "math");
        assert_eq!(p.max_aptitude(), 2.0);
        assert_eq!(p.max_inaptitude(), 2.0);
    }

    #[test]
    fn budget_rejects_negative_and_non_finite() {
        assert!(TimeBudget::new(0.0).is_ok());
        assert!(TimeBudget::new(3.5).is_ok());
        for bad in [-1.0, f64::NAN, f64::INFINITY] {
            assert!(matches!(
                TimeBudget::new(bad),
                Err(Error::InvalidBudget(_))
            ));
        }
    }
}
