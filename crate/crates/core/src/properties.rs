//! Executable checkers for the inequalities the knapsack guarantee rests on.
//!
//! Each checker evaluates both sides of one inequality on concrete inputs
//! and reports whether it holds within the scalar tolerance. They are meant
//! to be driven by randomized trials (see [`crate::trials`]) and to fail
//! loudly on functions that are not k-submodular.

use std::cmp::Ordering;

use num_traits::Float;
use serde::{Deserialize, Serialize};

use crate::counter::EvalCounter;
use crate::error::{precondition, Error, Result};
use crate::lattice::{Assignment, Pair};
use crate::oracle::Oracle;
use crate::scalar::Scalar;

/// Both sides of a checked inequality `lhs <= rhs`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Sides<T> {
    pub lhs: T,
    pub rhs: T,
}

impl<T: Scalar> Sides<T> {
    pub fn holds(&self) -> bool {
        self.rhs.ge_tol(&self.lhs)
    }
}

/// `f(S') - f(S) <= Σ_{(a,i) ∈ S' \ S} Δ_{a,i}(S)` for `S ⊆ S'`.
pub fn lemma1_sides<T, O>(oracle: &O, s: &Assignment, s_prime: &Assignment, counter: &mut EvalCounter) -> Result<Sides<T>>
where
    T: Scalar,
    O: Oracle<T> + ?Sized,
{
    if !s.is_subset(s_prime) {
        return Err(precondition(format!("{s} is not a subset of {s_prime}")));
    }
    let base = oracle.evaluate(s, counter)?;
    let lhs = oracle.evaluate(s_prime, counter)? - base.clone();
    let mut rhs = T::zero();
    for (a, i) in s_prime.iter().filter(|p| !s.contains(*p)) {
        rhs += oracle.evaluate(&s.with(a, i)?, counter)? - base.clone();
    }
    Ok(Sides { lhs, rhs })
}

pub fn check_lemma1<T, O>(oracle: &O, s: &Assignment, s_prime: &Assignment, counter: &mut EvalCounter) -> Result<bool>
where
    T: Scalar,
    O: Oracle<T> + ?Sized,
{
    Ok(lemma1_sides(oracle, s, s_prime, counter)?.holds())
}

/// Input to Wolsey's ratio bound: `P` nonnegative reals with a positive
/// first entry and a positive integer `D`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WolseyInput<F> {
    d: u32,
    rho: Vec<F>,
}

impl<F: Float> WolseyInput<F> {
    pub fn new(d: u32, rho: Vec<F>) -> Result<Self> {
        if d == 0 {
            return Err(precondition("D must be a positive integer"));
        }
        match rho.first() {
            None => return Err(precondition("P must be a positive integer")),
            Some(first) if first.partial_cmp(&F::zero()) != Some(Ordering::Greater) => return Err(precondition("rho_1 must be positive")),
            _ => {}
        }
        if rho.iter().any(|r| !r.is_finite() || *r < F::zero()) {
            return Err(precondition("rho entries must be finite and nonnegative"));
        }
        Ok(Self { d, rho })
    }

    pub fn p(&self) -> usize {
        self.rho.len()
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn rho(&self) -> &[F] {
        &self.rho
    }
}

/// The three quantities in Wolsey's chain
/// `ratio >= 1 - (1 - 1/D)^P >= 1 - e^(-P/D)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct WolseyBound<F> {
    /// `Σρ_i / min_t (Σ_{i<t} ρ_i + D·ρ_t)`.
    pub ratio: F,
    /// `1 - (1 - 1/D)^P`.
    pub power_bound: F,
    /// `1 - e^(-P/D)`.
    pub exp_bound: F,
}

impl<F: Float> WolseyBound<F> {
    pub fn holds(&self, tolerance: F) -> bool {
        self.ratio + tolerance >= self.power_bound && self.power_bound + tolerance >= self.exp_bound
    }
}

pub fn wolsey_bound<F: Float>(input: &WolseyInput<F>) -> Result<WolseyBound<F>> {
    let d = F::from(input.d).expect("D fits in float");
    let p = input.p();
    let mut prefix = F::zero();
    let mut denom = F::infinity();
    for &r in &input.rho {
        denom = denom.min(prefix + d * r);
        prefix = prefix + r;
    }
    if denom.partial_cmp(&F::zero()) != Some(Ordering::Greater) {
        return Err(Error::Degenerate("min_t(Σ_{i<t} ρ_i + D·ρ_t) is not positive".into()));
    }
    let power_bound = F::one() - (F::one() - F::one() / d).powi(i32::try_from(p).unwrap_or(i32::MAX));
    let exp_bound = F::one() - (-F::from(p).expect("P fits in float") / d).exp();
    Ok(WolseyBound { ratio: prefix / denom, power_bound, exp_bound })
}

/// True iff both displayed inequalities hold within `F64_TOLERANCE`-style slack
/// (`1e-9` for `f64`, `1e-5` for `f32`).
pub fn check_wolsey<F: Float + Scalar>(input: &WolseyInput<F>) -> Result<bool> {
    Ok(wolsey_bound(input)?.holds(F::tolerance()))
}

/// Orders `t` so that every prefix extends the previous one by the pair
/// with the largest value: `f(T^j) = max_{p ∈ T \ T^{j-1}} f(T^{j-1} ∪ {p})`.
/// Ties keep canonical order.
pub fn greedy_reorder<T, O>(oracle: &O, t: &Assignment, counter: &mut EvalCounter) -> Result<Vec<Pair>>
where
    T: Scalar,
    O: Oracle<T> + ?Sized,
{
    let mut remaining: Vec<Pair> = t.iter().collect();
    if remaining.len() <= 1 {
        return Ok(remaining);
    }
    let mut prefix = Assignment::empty();
    let mut order = Vec::with_capacity(remaining.len());
    while !remaining.is_empty() {
        let mut best: Option<(usize, T)> = None;
        for (pos, &(a, i)) in remaining.iter().enumerate() {
            let v = oracle.evaluate(&prefix.with(a, i)?, counter)?;
            if best.as_ref().is_none_or(|(_, b)| v > *b) {
                best = Some((pos, v));
            }
        }
        let (pos, _) = best.expect("remaining nonempty");
        let (a, i) = remaining.remove(pos);
        prefix.insert(a, i)?;
        order.push((a, i));
    }
    Ok(order)
}

/// Inputs of the prefix-gain bound `f(Y ∪ Z ∪ {p_j}) - f(Y ∪ Z) <= f(Y) / 3`:
/// a greedily reordered set `T` with
/// `|T| >= 4`, its first three pairs `Y`, a later pair `(a_j, i_j)` and a
/// set `Z` avoiding the items of `Y` and `a_j`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Eq2Scenario {
    order: Vec<Pair>,
    j: usize,
    z: Assignment,
}

impl Eq2Scenario {
    /// Reorders `t` greedily and validates the remaining inputs. `j` is
    /// 1-based into the reordered sequence and must be at least 4.
    pub fn new<T, O>(oracle: &O, t: &Assignment, j: usize, z: Assignment, counter: &mut EvalCounter) -> Result<Self>
    where
        T: Scalar,
        O: Oracle<T> + ?Sized,
    {
        if t.len() < 4 {
            return Err(precondition(format!("|T| = {} but at least 4 pairs are needed", t.len())));
        }
        let order = greedy_reorder(oracle, t, counter)?;
        Self::from_order(order, j, z)
    }

    /// Builds a scenario from an order the caller has already established.
    pub fn from_order(order: Vec<Pair>, j: usize, z: Assignment) -> Result<Self> {
        Assignment::from_pairs(order.iter().copied())?;
        if order.len() < 4 {
            return Err(precondition(format!("|T| = {} but at least 4 pairs are needed", order.len())));
        }
        if j < 4 || j > order.len() {
            return Err(precondition(format!("j = {j} outside 4..={}", order.len())));
        }
        let forbidden = [order[0].0, order[1].0, order[2].0, order[j - 1].0];
        if let Some(a) = z.items().find(|a| forbidden.contains(a)) {
            return Err(precondition(format!("Z assigns item {a}, which belongs to Y or is a_j")));
        }
        Ok(Self { order, j, z })
    }

    pub fn order(&self) -> &[Pair] {
        &self.order
    }

    pub fn y(&self) -> Assignment {
        Assignment::from_pairs(self.order[..3].iter().copied()).expect("distinct items")
    }

    pub fn pivot(&self) -> Pair {
        self.order[self.j - 1]
    }

    pub fn z(&self) -> &Assignment {
        &self.z
    }
}

/// `f(Y ∪ Z ∪ {(a_j,i_j)}) - f(Y ∪ Z) <= f(Y)/3`.
pub fn eq2_sides<T, O>(oracle: &O, scenario: &Eq2Scenario, counter: &mut EvalCounter) -> Result<Sides<T>>
where
    T: Scalar,
    O: Oracle<T> + ?Sized,
{
    let y = scenario.y();
    let yz = y.disjoint_union(scenario.z())?;
    let (a, i) = scenario.pivot();
    let lhs = oracle.evaluate(&yz.with(a, i)?, counter)? - oracle.evaluate(&yz, counter)?;
    let rhs = oracle.evaluate(&y, counter)? / T::from_cost(3);
    Ok(Sides { lhs, rhs })
}

pub fn check_eq2<T, O>(oracle: &O, scenario: &Eq2Scenario, counter: &mut EvalCounter) -> Result<bool>
where
    T: Scalar,
    O: Oracle<T> + ?Sized,
{
    Ok(eq2_sides(oracle, scenario, counter)?.holds())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{Dim, ItemId};
    use crate::oracle::fixtures::{coverage_w, supermodular};
    use crate::oracle::CoverageOracle;
    use num_rational::Ratio;

    fn s(pairs: &[(u32, u16)]) -> Assignment {
        Assignment::from_raw(pairs).unwrap()
    }

    #[test]
    fn lemma1_examples() {
        let w = coverage_w::<f64>();
        let mut c = EvalCounter::new();
        let x = s(&[(1, 1)]);
        assert!(check_lemma1(&w, &x, &x, &mut c).unwrap());
        let sides = lemma1_sides(&w, &s(&[]), &s(&[(1, 1), (2, 2)]), &mut c).unwrap();
        assert_eq!((sides.lhs, sides.rhs), (3.0, 4.0));
        assert!(sides.holds());

        let t = supermodular::<f64>();
        let sides = lemma1_sides(&t, &s(&[]), &s(&[(1, 1), (2, 1)]), &mut c).unwrap();
        assert_eq!((sides.lhs, sides.rhs), (3.0, 2.0));
        assert!(!sides.holds());
    }

    #[test]
    fn lemma1_requires_subset() {
        let w = coverage_w::<f64>();
        let err = check_lemma1(&w, &s(&[(1, 1)]), &s(&[(1, 2)]), &mut EvalCounter::new());
        assert!(matches!(err, Err(Error::Precondition(_))));
    }

    #[test]
    fn wolsey_examples() {
        let one = WolseyInput::new(1, vec![5.0f64]).unwrap();
        let b = wolsey_bound(&one).unwrap();
        assert_eq!((b.ratio, b.power_bound), (1.0, 1.0));
        assert!(check_wolsey(&one).unwrap());

        let two = WolseyInput::new(2, vec![1.0f64, 1.0]).unwrap();
        let b = wolsey_bound(&two).unwrap();
        assert_eq!(b.ratio, 1.0);
        assert_eq!(b.power_bound, 0.75);
        assert!((b.exp_bound - (1.0 - (-1.0f64).exp())).abs() < 1e-15);
        assert!(check_wolsey(&two).unwrap());
    }

    #[test]
    fn wolsey_input_validation() {
        assert!(WolseyInput::new(0, vec![1.0f64]).is_err());
        assert!(WolseyInput::<f64>::new(1, vec![]).is_err());
        assert!(WolseyInput::new(1, vec![0.0f64, 1.0]).is_err());
        assert!(WolseyInput::new(1, vec![1.0f64, -1.0]).is_err());
        assert!(WolseyInput::new(1, vec![1.0f64, f64::NAN]).is_err());
    }

    #[test]
    fn wolsey_detects_a_false_claim() {
        // A ratio deliberately below the power bound fails `holds`.
        let fake = WolseyBound { ratio: 0.5f64, power_bound: 0.75, exp_bound: 0.6 };
        assert!(!fake.holds(1e-9));
    }

    #[test]
    fn reorder_examples() {
        let w = coverage_w::<f64>();
        let mut c = EvalCounter::new();
        let single = s(&[(2, 1)]);
        assert_eq!(greedy_reorder(&w, &single, &mut c).unwrap(), single.pairs().to_vec());
        assert_eq!(c.count(), 0);
        let order = greedy_reorder(&w, &s(&[(1, 1), (2, 2)]), &mut c).unwrap();
        assert_eq!(order, vec![(ItemId(1), Dim(1)), (ItemId(2), Dim(2))]);
    }

    fn four_item_coverage() -> CoverageOracle<f64> {
        let elements = (0..6).map(|e| (format!("e{e}"), 1.0 + e as f64)).collect();
        let covers = vec![
            ((ItemId(1), Dim(1)), vec![0, 1]),
            ((ItemId(2), Dim(1)), vec![1, 2, 3]),
            ((ItemId(3), Dim(1)), vec![5]),
            ((ItemId(4), Dim(1)), vec![0, 4]),
        ];
        CoverageOracle::from_indices(4, 1, elements, covers).unwrap()
    }

    #[test]
    fn reorder_prefixes_are_maximal_by_exhaustion() {
        let o = four_item_coverage();
        let t = s(&[(1, 1), (2, 1), (3, 1), (4, 1)]);
        let order = greedy_reorder(&o, &t, &mut EvalCounter::new()).unwrap();
        let mut prefix = Assignment::empty();
        for (j, &(a, i)) in order.iter().enumerate() {
            let chosen = o.value_of(&prefix.with(a, i).unwrap());
            for &(b, d) in &order[j..] {
                assert!(chosen >= o.value_of(&prefix.with(b, d).unwrap()));
            }
            prefix.insert(a, i).unwrap();
        }
        // Values: item 2 covers {e1,e2,e3} weight 2+3+4 = 9, the largest single.
        assert_eq!(order[0], (ItemId(2), Dim(1)));
    }

    #[test]
    fn eq2_holds_on_coverage_and_zero() {
        let o = four_item_coverage();
        let t = s(&[(1, 1), (2, 1), (3, 1), (4, 1)]);
        let mut c = EvalCounter::new();
        let sc = Eq2Scenario::new(&o, &t, 4, Assignment::empty(), &mut c).unwrap();
        let sides = eq2_sides(&o, &sc, &mut c).unwrap();
        assert!(sides.holds(), "{sides:?}");

        let zero = CoverageOracle::<Ratio<i64>>::empty(4, 1).unwrap();
        let sc = Eq2Scenario::new(&zero, &t, 4, Assignment::empty(), &mut c).unwrap();
        let sides = eq2_sides(&zero, &sc, &mut c).unwrap();
        assert_eq!(sides.lhs, Ratio::from_integer(0));
        assert!(sides.holds());
    }

    #[test]
    fn eq2_scenario_preconditions() {
        let o = four_item_coverage();
        let t = s(&[(1, 1), (2, 1), (3, 1), (4, 1)]);
        let mut c = EvalCounter::new();
        assert!(Eq2Scenario::new(&o, &s(&[(1, 1), (2, 1), (3, 1)]), 4, Assignment::empty(), &mut c).is_err());
        assert!(Eq2Scenario::new(&o, &t, 3, Assignment::empty(), &mut c).is_err());
        assert!(Eq2Scenario::new(&o, &t, 5, Assignment::empty(), &mut c).is_err());
        // Z may not touch Y or the pivot.
        let sc = Eq2Scenario::new(&o, &t, 4, Assignment::empty(), &mut c).unwrap();
        let pivot_item = sc.pivot().0;
        let err = Eq2Scenario::from_order(sc.order().to_vec(), 4, s(&[(pivot_item.0, 1)]));
        assert!(matches!(err, Err(Error::Precondition(_))));
    }

    #[test]
    fn eq2_detects_supermodular_growth() {
        // f = (number of assigned items)^2 over 5 items: marginals grow.
        let space = crate::space::Space::new(5, 1).unwrap();
        let values = space.iter().map(|x| (x.len() * x.len()) as f64).collect();
        let t_oracle = crate::oracle::TabularOracle::from_values(5, 1, values).unwrap();
        let t = s(&[(1, 1), (2, 1), (3, 1), (4, 1)]);
        let mut c = EvalCounter::new();
        let sc = Eq2Scenario::new(&t_oracle, &t, 4, s(&[(5, 1)]), &mut c).unwrap();
        // f(Y∪Z∪{a_j}) - f(Y∪Z) = 25 - 16 = 9 > f(Y)/3 = 3.
        let sides = eq2_sides(&t_oracle, &sc, &mut c).unwrap();
        assert_eq!((sides.lhs, sides.rhs), (9.0, 3.0));
        assert!(!check_eq2(&t_oracle, &sc, &mut c).unwrap());
    }
}
