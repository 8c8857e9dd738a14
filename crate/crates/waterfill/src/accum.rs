/// Neumaier-compensated accumulator.
///
/// Budget-conservation checks run at 1e-12 relative tolerance on profiles with
/// up to a thousand activities; naive summation of the inaptitude prefix sums
/// would eat most of that allowance.
#[derive(Debug, Clone, Copy, Default)]
pub(crate) struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

pub(crate) fn compensated_total(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut acc = CompensatedSum::default();
    for v in values {
        acc.add(v);
    }
    acc.value()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recovers_cancellation_naive_summation_loses() {
        let acc = [1.0, 1e100, 1.0, -1e100]
            .into_iter()
            .fold(CompensatedSum::default(), |mut acc, x| {
                acc.add(x);
                acc
            });
        assert_eq!(acc.value(), 2.0);
    }

    #[test]
    fn matches_exact_sum_on_small_inputs() {
        assert_eq!(compensated_total([0.25, 0.5, 1.0]), 1.75);
    }
}
