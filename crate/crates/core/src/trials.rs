//! Seeded randomized drivers for the checkers in [`crate::properties`].

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algorithms::exact_bruteforce;
use crate::counter::EvalCounter;
use crate::error::{Error, Result};
use crate::generate::{random_coverage, random_separable};
use crate::instance::Instance;
use crate::lattice::{Assignment, Dim, ItemId, Pair};
use crate::oracle::{Oracle, OracleSpec};
use crate::properties::{eq2_sides, lemma1_sides, wolsey_bound, Eq2Scenario, WolseyInput};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "checker", rename_all = "snake_case")]
pub enum FailureWitness {
    Lemma1 { trial: usize, s: Assignment, s_prime: Assignment, lhs: f64, rhs: f64 },
    Wolsey { trial: usize, d: u32, rho: Vec<f64>, ratio: f64, power_bound: f64, exp_bound: f64 },
    Eq2 { trial: usize, order: Vec<Pair>, j: usize, z: Assignment, lhs: f64, rhs: f64 },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TrialSummary {
    pub checker: String,
    pub trials: usize,
    pub passed: usize,
    pub first_failure: Option<FailureWitness>,
}

impl TrialSummary {
    fn new(checker: &str) -> Self {
        Self { checker: checker.into(), trials: 0, passed: 0, first_failure: None }
    }

    fn record(&mut self, ok: bool, failure: impl FnOnce(usize) -> FailureWitness) {
        if ok {
            self.passed += 1;
        } else if self.first_failure.is_none() {
            self.first_failure = Some(failure(self.trials));
        }
        self.trials += 1;
    }

    pub fn all_passed(&self) -> bool {
        self.passed == self.trials
    }
}

/// Each item assigned with probability `p` to a uniform dimension.
pub fn random_assignment<R: Rng>(rng: &mut R, items: &[ItemId], k: usize, p: f64) -> Assignment {
    let mut pairs = Vec::new();
    for &a in items {
        if rng.gen_bool(p) {
            pairs.push((a, Dim(rng.gen_range(1..=k as u16))));
        }
    }
    Assignment::from_pairs(pairs).expect("distinct items")
}

fn random_subset<R: Rng>(rng: &mut R, s: &Assignment) -> Assignment {
    Assignment::from_pairs(s.iter().filter(|_| rng.gen_bool(0.5))).expect("subset of valid assignment")
}

fn random_family_oracle<R: Rng>(rng: &mut R, n: usize, k: usize) -> OracleSpec<f64> {
    if rng.gen_bool(0.5) {
        random_coverage(rng, n, k).into()
    } else {
        random_separable(rng, n, k).into()
    }
}

fn all_items(n: usize) -> Vec<ItemId> {
    (0..n).map(ItemId::from_index).collect()
}

/// Marginal-gain upper bound on `trials` random pairs `S ⊆ S'`, each over a fresh coverage or
/// separable-sum oracle with `n <= 8`, `k <= 3`.
pub fn lemma1_trials(seed: u64, trials: usize) -> Result<TrialSummary> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut summary = TrialSummary::new("lemma1");
    for _ in 0..trials {
        let (n, k) = (rng.gen_range(1..=8), rng.gen_range(1..=3));
        let oracle = random_family_oracle(&mut rng, n, k);
        lemma1_trial(&oracle, &mut rng, &mut summary)?;
    }
    Ok(summary)
}

/// Marginal-gain upper bound on `trials` random pairs `S ⊆ S'` over a fixed oracle.
pub fn lemma1_trials_on<T, O>(oracle: &O, seed: u64, trials: usize) -> Result<TrialSummary>
where
    T: Scalar,
    O: Oracle<T> + ?Sized,
{
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut summary = TrialSummary::new("lemma1");
    for _ in 0..trials {
        lemma1_trial(oracle, &mut rng, &mut summary)?;
    }
    Ok(summary)
}

fn lemma1_trial<T, O, R>(oracle: &O, rng: &mut R, summary: &mut TrialSummary) -> Result<()>
where
    T: Scalar,
    O: Oracle<T> + ?Sized,
    R: Rng,
{
    let s_prime = random_assignment(rng, &all_items(oracle.n()), oracle.k(), 0.6);
    let s = random_subset(rng, &s_prime);
    let sides = lemma1_sides(oracle, &s, &s_prime, &mut EvalCounter::new())?;
    summary.record(sides.holds(), |trial| FailureWitness::Lemma1 {
        trial,
        s,
        s_prime,
        lhs: sides.lhs.as_f64(),
        rhs: sides.rhs.as_f64(),
    });
    Ok(())
}

/// Wolsey's bound on random inputs with `P, D ∈ [1, 20]`, `ρ ~ U[0, 1]`,
/// `ρ_1` redrawn until positive.
pub fn wolsey_trials(seed: u64, trials: usize) -> Result<TrialSummary> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut summary = TrialSummary::new("wolsey");
    for _ in 0..trials {
        let p = rng.gen_range(1..=20usize);
        let d = rng.gen_range(1..=20u32);
        let mut rho: Vec<f64> = (0..p).map(|_| rng.gen::<f64>()).collect();
        while rho[0] <= 0.0 {
            rho[0] = rng.gen();
        }
        let input = WolseyInput::new(d, rho)?;
        let b = wolsey_bound(&input)?;
        summary.record(b.holds(f64::tolerance()), |trial| FailureWitness::Wolsey {
            trial,
            d,
            rho: input.rho().to_vec(),
            ratio: b.ratio,
            power_bound: b.power_bound,
            exp_bound: b.exp_bound,
        });
    }
    Ok(summary)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Eq2Summary {
    /// Scenarios whose `T` is an exact constrained optimum.
    pub optimal: TrialSummary,
    /// Scenarios whose `T` is an arbitrary random assignment.
    pub arbitrary: TrialSummary,
    /// Instances drawn and discarded because their optimum had fewer than 4 pairs.
    pub skipped: usize,
}

impl Eq2Summary {
    pub fn all_passed(&self) -> bool {
        self.optimal.all_passed() && self.arbitrary.all_passed()
    }
}

/// Prefix-gain bound on `trials` scenarios built from exact optima with
/// `|T| >= 4`, and on `trials` scenarios built from random sets with
/// `|T| >= 4`. Instances have `n ∈ [5, 8]`, `k ∈ [1, 3]`.
pub fn eq2_trials(seed: u64, trials: usize) -> Result<Eq2Summary> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut optimal = TrialSummary::new("eq2");
    let mut arbitrary = TrialSummary::new("eq2");
    let mut skipped = 0usize;
    let max_attempts = trials.saturating_mul(100).max(100);

    while optimal.trials < trials {
        if optimal.trials + skipped >= max_attempts {
            return Err(Error::Degenerate(format!(
                "only {} of {trials} instances had an optimum with at least 4 pairs",
                optimal.trials
            )));
        }
        let (n, k) = (rng.gen_range(5..=8), rng.gen_range(1..=3));
        let oracle = random_family_oracle(&mut rng, n, k);
        let costs: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=10)).collect();
        let fraction = *[0.5, 0.8, 1.0].choose(&mut rng).expect("nonempty");
        let budget = ((fraction * costs.iter().sum::<u64>() as f64).floor() as u64).max(1);
        let inst = Instance::new(k, costs, budget)?;
        let opt = exact_bruteforce(&oracle, &inst, &mut EvalCounter::new())?;
        if opt.solution.len() < 4 {
            skipped += 1;
            continue;
        }
        eq2_trial(&oracle, &opt.solution, &mut rng, &mut optimal)?;
    }

    while arbitrary.trials < trials {
        let (n, k) = (rng.gen_range(5..=8), rng.gen_range(1..=3));
        let oracle = random_family_oracle(&mut rng, n, k);
        let mut items = all_items(n);
        items.shuffle(&mut rng);
        let size = rng.gen_range(4..=n);
        let t = Assignment::from_pairs(items[..size].iter().map(|&a| (a, Dim(rng.gen_range(1..=k as u16)))))?;
        eq2_trial(&oracle, &t, &mut rng, &mut arbitrary)?;
    }

    Ok(Eq2Summary { optimal, arbitrary, skipped })
}

fn eq2_trial<R: Rng>(oracle: &OracleSpec<f64>, t: &Assignment, rng: &mut R, summary: &mut TrialSummary) -> Result<()> {
    let mut counter = EvalCounter::new();
    let order = crate::properties::greedy_reorder(oracle, t, &mut counter)?;
    let j = rng.gen_range(4..=order.len());
    let forbidden = [order[0].0, order[1].0, order[2].0, order[j - 1].0];
    let free: Vec<ItemId> = all_items(oracle.n()).into_iter().filter(|a| !forbidden.contains(a)).collect();
    let z = random_assignment(rng, &free, oracle.k(), 0.5);
    let scenario = Eq2Scenario::from_order(order, j, z)?;
    let sides = eq2_sides(oracle, &scenario, &mut counter)?;
    summary.record(sides.holds(), |trial| FailureWitness::Eq2 {
        trial,
        order: scenario.order().to_vec(),
        j,
        z: scenario.z().clone(),
        lhs: sides.lhs,
        rhs: sides.rhs,
    });
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::fixtures::supermodular;

    #[test]
    fn short_runs_pass_and_are_deterministic() {
        let a = lemma1_trials(5, 200).unwrap();
        assert!(a.all_passed());
        assert_eq!(a, lemma1_trials(5, 200).unwrap());
        assert!(wolsey_trials(5, 500).unwrap().all_passed());
        let e = eq2_trials(5, 10).unwrap();
        assert!(e.all_passed());
        assert_eq!(e.optimal.trials, 10);
    }

    #[test]
    fn lemma1_on_supermodular_fixture_reports_witness() {
        let s = lemma1_trials_on(&supermodular::<f64>(), 1, 200).unwrap();
        assert!(!s.all_passed());
        match s.first_failure.unwrap() {
            FailureWitness::Lemma1 { s_prime, lhs, rhs, .. } => {
                assert_eq!(s_prime.len(), 2);
                assert!(lhs > rhs);
            }
            other => panic!("unexpected witness {other:?}"),
        }
    }
}
