//! Greedy for monotone k-submodular maximization under a knapsack
//! constraint.
//!
//! Phase 1 evaluates every feasible assignment of size one or two and keeps
//! the best. Phase 2 takes every feasible size-three assignment as a seed
//! and completes it by density: repeatedly pick the remaining `(a, i)` with
//! the largest `Δ_{a,i}(S) / c_a`, add it if it still fits, and drop item
//! `a` from the candidates either way. A completed seed replaces the
//! incumbent only if it is strictly better.
//!
//! Seeds are completed in parallel; the incumbent is then updated in seed
//! enumeration order, so the result does not depend on scheduling.

use rayon::prelude::*;

use crate::algorithms::check_compatible;
use crate::counter::EvalCounter;
use crate::error::Result;
use crate::instance::Instance;
use crate::lattice::{Assignment, Dim, ItemId};
use crate::oracle::Oracle;
use crate::report::{Algorithm, SolveReport};
use crate::scalar::Scalar;

/// One step of a density completion.
#[derive(Clone, Debug, PartialEq)]
pub struct StepRecord<T> {
    pub step: usize,
    pub item: ItemId,
    pub dim: Dim,
    pub density: T,
    pub gain: T,
    pub accepted: bool,
    /// `c(S^t)` after this step.
    pub cost: u64,
}

/// Per-step log of one completion. Densities are recorded, not asserted to
/// be monotone.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct GreedyTrace<T> {
    pub steps: Vec<StepRecord<T>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Completion<T> {
    pub solution: Assignment,
    pub value: T,
    pub trace: GreedyTrace<T>,
}

/// Runs the density completion from `seed`, which must be feasible.
/// Costs one evaluation for `f(seed)` plus `k` per remaining candidate per step.
pub fn density_completion<T, O>(
    oracle: &O,
    inst: &Instance,
    seed: &Assignment,
    counter: &mut EvalCounter,
) -> Result<Completion<T>>
where
    T: Scalar,
    O: Oracle<T> + ?Sized,
{
    check_compatible(oracle, inst)?;
    let value = oracle.evaluate(seed, counter)?;
    complete(oracle, inst, seed.clone(), value, counter, true)
}

fn complete<T, O>(
    oracle: &O,
    inst: &Instance,
    seed: Assignment,
    seed_value: T,
    counter: &mut EvalCounter,
    record: bool,
) -> Result<Completion<T>>
where
    T: Scalar,
    O: Oracle<T> + ?Sized,
{
    let mut solution = seed;
    let mut value = seed_value;
    let mut cost = inst.cost(&solution)?;
    let mut candidates: Vec<ItemId> = inst.items().filter(|&a| !solution.contains_item(a)).collect();
    let mut trace = GreedyTrace { steps: Vec::new() };
    let mut step = 0;

    while !candidates.is_empty() {
        step += 1;
        // (position in candidates, dim, density, gain, f(S ∪ {(a,i)}))
        let mut best: Option<(usize, Dim, T, T, T)> = None;
        for (pos, &a) in candidates.iter().enumerate() {
            let c_a = T::from_cost(inst.item_cost(a));
            for i in Dim::all(oracle.k()) {
                let v = oracle.evaluate(&solution.with(a, i)?, counter)?;
                let gain = v.clone() - value.clone();
                let density = gain.clone() / c_a.clone();
                if best.as_ref().is_none_or(|b| density > b.2) {
                    best = Some((pos, i, density, gain, v));
                }
            }
        }
        let (pos, dim, density, gain, extended) = best.expect("candidates nonempty and k >= 1");
        let item = candidates.remove(pos);
        let accepted = cost + inst.item_cost(item) <= inst.budget();
        if accepted {
            solution.insert(item, dim)?;
            cost += inst.item_cost(item);
            value = extended;
        }
        if record {
            trace.steps.push(StepRecord { step, item, dim, density, gain, accepted, cost });
        }
    }
    Ok(Completion { solution, value, trace })
}

/// All assignments of exactly `size` items in canonical (lexicographic) order.
fn assignments_of_size(n: usize, k: usize, size: usize) -> Vec<Assignment> {
    fn rec(n: usize, k: usize, size: usize, from: usize, prefix: &mut Vec<(ItemId, Dim)>, out: &mut Vec<Assignment>) {
        if prefix.len() == size {
            out.push(Assignment::from_pairs(prefix.iter().copied()).expect("distinct items"));
            return;
        }
        for a in from..n {
            for i in Dim::all(k) {
                prefix.push((ItemId::from_index(a), i));
                rec(n, k, size, a + 1, prefix, out);
                prefix.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(n, k, size, 0, &mut Vec::with_capacity(size), &mut out);
    out
}

pub fn knapsack_greedy<T, O>(oracle: &O, inst: &Instance, counter: &mut EvalCounter) -> Result<SolveReport<T>>
where
    T: Scalar,
    O: Oracle<T> + ?Sized,
{
    check_compatible(oracle, inst)?;
    let (n, k) = (inst.n(), inst.k());
    let start = counter.count();

    // Phase 1: best feasible assignment of size 1 or 2.
    let mut incumbent: Option<(Assignment, T)> = None;
    for size in [1, 2] {
        for s in assignments_of_size(n, k, size) {
            if !inst.is_feasible(&s)? {
                continue;
            }
            let v = oracle.evaluate(&s, counter)?;
            let better = match &incumbent {
                None => true,
                Some((best_s, best_v)) => v > *best_v || (v == *best_v && s < *best_s),
            };
            if better {
                incumbent = Some((s, v));
            }
        }
    }

    // Phase 2: density completion of every feasible size-3 seed.
    let seeds: Vec<Assignment> = assignments_of_size(n, k, 3)
        .into_iter()
        .filter(|s| inst.cost(s).map(|c| c <= inst.budget()).unwrap_or(false))
        .collect();
    let completions: Vec<Result<(Completion<T>, EvalCounter)>> = seeds
        .into_par_iter()
        .map(|seed| {
            let mut local = EvalCounter::new();
            let value = oracle.evaluate(&seed, &mut local)?;
            let done = complete(oracle, inst, seed, value, &mut local, false)?;
            Ok((done, local))
        })
        .collect();
    for result in completions {
        let (done, local) = result?;
        counter.merge(local);
        let improves = match &incumbent {
            None => true,
            Some((_, best_v)) => done.value > *best_v,
        };
        if improves {
            incumbent = Some((done.solution, done.value));
        }
    }

    let (solution, value) = incumbent.unwrap_or_else(|| (Assignment::empty(), T::zero()));
    Ok(SolveReport::new(Algorithm::KnapsackGreedy, solution, value, counter.count() - start))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algorithms::count_bound;
    use crate::oracle::fixtures::coverage_w;
    use crate::oracle::{CoverageOracle, SeparableSumOracle};

    fn s(pairs: &[(u32, u16)]) -> Assignment {
        Assignment::from_raw(pairs).unwrap()
    }

    #[test]
    fn coverage_w_examples() {
        let w = coverage_w::<f64>();
        let inst = Instance::new(2, vec![1, 2], 3).unwrap();
        let r = knapsack_greedy(&w, &inst, &mut EvalCounter::new()).unwrap();
        assert_eq!(r.solution, s(&[(1, 1), (2, 2)]));
        assert_eq!(r.value, 3.0);

        let inst = Instance::new(2, vec![1, 2], 1).unwrap();
        let r = knapsack_greedy(&w, &inst, &mut EvalCounter::new()).unwrap();
        assert_eq!(r.solution, s(&[(1, 1)]));
        assert_eq!(r.value, 2.0);
    }

    #[test]
    fn zero_oracle_returns_first_feasible_singleton() {
        let o = CoverageOracle::<f64>::empty(2, 2).unwrap();
        let inst = Instance::new(2, vec![1, 2], 3).unwrap();
        let r = knapsack_greedy(&o, &inst, &mut EvalCounter::new()).unwrap();
        assert_eq!(r.solution, s(&[(1, 1)]));
        assert_eq!(r.value, 0.0);

        let inst = Instance::new(2, vec![5, 2], 3).unwrap();
        let r = knapsack_greedy(&o, &inst, &mut EvalCounter::new()).unwrap();
        assert_eq!(r.solution, s(&[(2, 1)]));
    }

    #[test]
    fn nothing_fits() {
        let o = CoverageOracle::<f64>::empty(3, 1).unwrap();
        let inst = Instance::new(1, vec![5, 6, 7], 4).unwrap();
        let r = knapsack_greedy(&o, &inst, &mut EvalCounter::new()).unwrap();
        assert!(r.solution.is_empty());
        assert_eq!(r.value, 0.0);
        assert_eq!(r.evaluations, 0);
    }

    #[test]
    fn mismatched_oracle_is_malformed() {
        let inst = Instance::new(2, vec![1, 2, 3], 3).unwrap();
        let err = knapsack_greedy(&coverage_w::<f64>(), &inst, &mut EvalCounter::new());
        assert!(matches!(err, Err(crate::Error::Malformed(_))));
    }

    #[test]
    fn worst_case_count_is_exact_for_n3_k1() {
        let o = CoverageOracle::<f64>::empty(3, 1).unwrap();
        let inst = Instance::new(1, vec![1, 1, 1], 3).unwrap();
        let r = knapsack_greedy(&o, &inst, &mut EvalCounter::new()).unwrap();
        assert_eq!(r.evaluations, 7);
        assert_eq!(count_bound(3, 1), 7);
    }

    #[test]
    fn worst_case_count_is_tight_when_everything_fits() {
        for (n, k) in [(4, 2), (5, 3), (6, 2)] {
            let o = CoverageOracle::<f64>::empty(n, k).unwrap();
            let inst = Instance::new(k, vec![1; n], n as u64).unwrap();
            let r = knapsack_greedy(&o, &inst, &mut EvalCounter::new()).unwrap();
            assert_eq!(r.evaluations, count_bound(n, k), "n={n} k={k}");
        }
    }

    #[test]
    fn completion_rejects_and_drops_items_that_do_not_fit() {
        // Item 4 has the best density but costs too much after the seed.
        let masses = vec![vec![1.0, 1.0, 1.0, 10.0, 1.0]];
        let o = SeparableSumOracle::new(5, masses, vec![100.0]).unwrap();
        let inst = Instance::new(1, vec![1, 1, 1, 3, 2], 5).unwrap();
        let seed = s(&[(1, 1), (2, 1), (3, 1)]);
        let mut c = EvalCounter::new();
        let done = density_completion(&o, &inst, &seed, &mut c).unwrap();
        assert_eq!(done.trace.steps.len(), 2);
        let first = &done.trace.steps[0];
        assert_eq!((first.item, first.accepted), (ItemId(4), false));
        assert_eq!(first.density, 10.0 / 3.0);
        let second = &done.trace.steps[1];
        assert_eq!((second.item, second.accepted, second.cost), (ItemId(5), true, 5));
        assert_eq!(done.value, 4.0);
        assert_eq!(c.count(), 1 + 2 + 1);
    }

    #[test]
    fn size_enumeration_is_canonical() {
        let all = assignments_of_size(4, 2, 2);
        assert_eq!(all.len(), 6 * 4);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(assignments_of_size(2, 3, 3).len(), 0);
    }
}
