use crate::algorithms::check_compatible;
use crate::counter::EvalCounter;
use crate::error::Result;
use crate::instance::Instance;
use crate::lattice::Assignment;
use crate::oracle::Oracle;
use crate::report::{Algorithm, SolveReport};
use crate::scalar::Scalar;
use crate::space::Space;

/// Ground-truth optimum by enumerating every assignment with `c(S) <= B`.
///
/// Ties go to the lexicographically smallest assignment. Subject to the
/// enumeration cap on `(k+1)^n`.
pub fn exact_bruteforce<T, O>(oracle: &O, inst: &Instance, counter: &mut EvalCounter) -> Result<SolveReport<T>>
where
    T: Scalar,
    O: Oracle<T> + ?Sized,
{
    check_compatible(oracle, inst)?;
    let space = Space::new(inst.n(), inst.k())?;
    let start = counter.count();
    let mut best: Option<(Assignment, T)> = None;
    for idx in 0..space.len() {
        let cost: u64 = (0..inst.n())
            .filter(|&a| space.digit(idx, a) != 0)
            .map(|a| inst.costs()[a])
            .sum();
        if cost > inst.budget() {
            continue;
        }
        let s = space.assignment_at(idx);
        let v = oracle.evaluate(&s, counter)?;
        let better = match &best {
            None => true,
            Some((bs, bv)) => v > *bv || (v == *bv && s < *bs),
        };
        if better {
            best = Some((s, v));
        }
    }
    let (solution, value) = best.expect("the empty assignment is always feasible");
    Ok(SolveReport::new(Algorithm::Exact, solution, value, counter.count() - start))
}

/// Exact optimum with no budget constraint.
pub fn exact_unconstrained<T, O>(oracle: &O, counter: &mut EvalCounter) -> Result<SolveReport<T>>
where
    T: Scalar,
    O: Oracle<T> + ?Sized,
{
    let inst = Instance::unconstrained(oracle.k(), vec![1; oracle.n()])?;
    exact_bruteforce(oracle, &inst, counter)
}
