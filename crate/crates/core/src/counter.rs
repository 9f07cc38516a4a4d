use std::iter::Sum;
use std::ops::{Add, AddAssign};

/// Number of oracle evaluations performed.
///
/// Each concurrent task keeps its own counter; totals are combined with
/// [`EvalCounter::merge`] (or `+`/`Sum`), which is associative and
/// commutative, so the final count does not depend on scheduling.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EvalCounter {
    count: u64,
}

impl EvalCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub(crate) fn tick(&mut self) {
        self.count += 1;
    }

    pub fn merge(&mut self, other: EvalCounter) {
        self.count += other.count;
    }
}

impl Add for EvalCounter {
    type Output = EvalCounter;

    fn add(mut self, rhs: EvalCounter) -> EvalCounter {
        self.merge(rhs);
        self
    }
}

impl AddAssign for EvalCounter {
    fn add_assign(&mut self, rhs: EvalCounter) {
        self.merge(rhs);
    }
}

impl Sum for EvalCounter {
    fn sum<I: Iterator<Item = EvalCounter>>(iter: I) -> Self {
        iter.fold(EvalCounter::new(), Add::add)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merge_is_order_independent() {
        let parts: Vec<EvalCounter> = [3u64, 0, 11, 5]
            .iter()
            .map(|&c| EvalCounter { count: c })
            .collect();
        let forward: EvalCounter = parts.iter().copied().sum();
        let backward: EvalCounter = parts.iter().rev().copied().sum();
        assert_eq!(forward.count(), 19);
        assert_eq!(forward, backward);
    }
}
