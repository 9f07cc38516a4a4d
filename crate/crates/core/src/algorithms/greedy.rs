use crate::counter::EvalCounter;
use crate::error::Result;
use crate::lattice::{Assignment, Dim, ItemId};
use crate::oracle::Oracle;
use crate::report::{Algorithm, SolveReport};
use crate::scalar::Scalar;

/// Greedy without constraint: visit items `1..=n` in order and put each one
/// in the dimension with the largest marginal gain (lowest dimension on ties).
///
/// Since `f(S)` is fixed while an item is considered, maximizing the gain is
/// maximizing `f(S ∪ {(a,i)})`, so each item costs exactly `k` evaluations.
pub fn unconstrained_greedy<T, O>(oracle: &O, counter: &mut EvalCounter) -> Result<SolveReport<T>>
where
    T: Scalar,
    O: Oracle<T> + ?Sized,
{
    let start = counter.count();
    let mut solution = Assignment::empty();
    // f(∅) = 0 for normalized oracles.
    let mut value = T::zero();
    for a in (0..oracle.n()).map(ItemId::from_index) {
        let mut best: Option<(Assignment, T)> = None;
        for i in Dim::all(oracle.k()) {
            let candidate = solution.with(a, i)?;
            let v = oracle.evaluate(&candidate, counter)?;
            if best.as_ref().is_none_or(|(_, b)| v > *b) {
                best = Some((candidate, v));
            }
        }
        let (next, v) = best.expect("k >= 1");
        solution = next;
        value = v;
    }
    Ok(SolveReport::new(Algorithm::UnconstrainedGreedy, solution, value, counter.count() - start))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::fixtures::coverage_w;
    use crate::oracle::CoverageOracle;

    #[test]
    fn coverage_w_example() {
        let mut c = EvalCounter::new();
        let r = unconstrained_greedy(&coverage_w::<f64>(), &mut c).unwrap();
        assert_eq!(r.solution, Assignment::from_raw(&[(1, 1), (2, 2)]).unwrap());
        assert_eq!(r.value, 3.0);
        assert_eq!(r.evaluations, 4);
        assert!(r.evaluations <= 2 * 2 * 2);
    }

    #[test]
    fn empty_ground_set() {
        let o = CoverageOracle::<f64>::empty(0, 2).unwrap();
        let r = unconstrained_greedy(&o, &mut EvalCounter::new()).unwrap();
        assert!(r.solution.is_empty());
        assert_eq!(r.value, 0.0);
        assert_eq!(r.evaluations, 0);
    }

    #[test]
    fn ties_go_to_dimension_one() {
        let o = CoverageOracle::<f64>::empty(4, 3).unwrap();
        let r = unconstrained_greedy(&o, &mut EvalCounter::new()).unwrap();
        assert_eq!(r.solution, Assignment::from_raw(&[(1, 1), (2, 1), (3, 1), (4, 1)]).unwrap());
        assert_eq!(r.evaluations, 12);
    }
}
