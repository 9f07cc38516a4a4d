//! Seeded random instances.
//!
//! All randomness comes from `ChaCha8Rng::seed_from_u64(seed)`, drawn in a
//! fixed order: item costs first, then the oracle payload. The same seed and
//! configuration always produce the same instance.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{malformed, Result};
use crate::instance::Instance;
use crate::lattice::{Dim, ItemId};
use crate::oracle::{CoverageOracle, OracleSpec, SeparableSumOracle, TabularOracle};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Coverage,
    SeparableSum,
    /// A coverage draw stored as an explicit table.
    Tabular,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Coverage => "coverage",
            Family::SeparableSum => "separable_sum",
            Family::Tabular => "tabular",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = crate::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "coverage" => Ok(Family::Coverage),
            "separable_sum" | "separable-sum" => Ok(Family::SeparableSum),
            "tabular" => Ok(Family::Tabular),
            other => Err(malformed(format!("unknown family {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct GeneratorConfig {
    pub n: usize,
    pub k: usize,
    pub family: Family,
    pub cost_max: u64,
    pub budget_fraction: f64,
}

impl GeneratorConfig {
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.k == 0 {
            return Err(malformed("n and k must be at least 1"));
        }
        if self.cost_max == 0 {
            return Err(malformed("cost-max must be at least 1"));
        }
        if !(self.budget_fraction > 0.0 && self.budget_fraction <= 1.0) {
            return Err(malformed("budget-fraction must lie in (0, 1]"));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Generated {
    pub instance: Instance,
    pub oracle: OracleSpec<f64>,
}

pub fn generate(seed: u64, config: &GeneratorConfig) -> Result<Generated> {
    config.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let costs: Vec<u64> = (0..config.n).map(|_| rng.gen_range(1..=config.cost_max)).collect();
    let total: u64 = costs.iter().sum();
    let budget = ((config.budget_fraction * total as f64).floor() as u64).max(1);
    let instance = Instance::new(config.k, costs, budget)?;
    let oracle = match config.family {
        Family::Coverage => random_coverage(&mut rng, config.n, config.k).into(),
        Family::SeparableSum => random_separable(&mut rng, config.n, config.k).into(),
        Family::Tabular => TabularOracle::tabulate(&random_coverage(&mut rng, config.n, config.k))?.into(),
    };
    Ok(Generated { instance, oracle })
}

/// Universe of `2n` unit-weight elements; each `(item, dim)` covers each
/// element independently with probability 1/2.
pub fn random_coverage<R: Rng>(rng: &mut R, n: usize, k: usize) -> CoverageOracle<f64> {
    let universe = 2 * n;
    let elements = (1..=universe).map(|e| (format!("e{e}"), 1.0)).collect();
    let mut covers = Vec::with_capacity(n * k);
    for a in 0..n {
        for i in Dim::all(k) {
            let set = (0..universe).filter(|_| rng.gen_bool(0.5)).collect();
            covers.push(((ItemId::from_index(a), i), set));
        }
    }
    CoverageOracle::from_indices(n, k, elements, covers).expect("generated coverage is well-formed")
}

/// Masses in `{0, 0.001, ..., 1}`; each cap is 25-75% of its dimension's total mass.
pub fn random_separable<R: Rng>(rng: &mut R, n: usize, k: usize) -> SeparableSumOracle<f64> {
    let mut masses = Vec::with_capacity(k);
    let mut caps = Vec::with_capacity(k);
    for _ in 0..k {
        let row: Vec<f64> = (0..n).map(|_| f64::from(rng.gen_range(0..=1000u32)) / 1000.0).collect();
        let share = f64::from(rng.gen_range(250..=750u32)) / 1000.0;
        caps.push((row.iter().sum::<f64>() * share * 1000.0).round() / 1000.0);
        masses.push(row);
    }
    SeparableSumOracle::new(n, masses, caps).expect("generated separable sum is well-formed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::validate::{validate_lattice_ksubmodular, validate_monotone, validate_orthant_submodular};

    fn config(family: Family) -> GeneratorConfig {
        GeneratorConfig { n: 5, k: 2, family, cost_max: 10, budget_fraction: 0.5 }
    }

    #[test]
    fn same_seed_same_instance() {
        for family in [Family::Coverage, Family::SeparableSum, Family::Tabular] {
            assert_eq!(generate(7, &config(family)).unwrap(), generate(7, &config(family)).unwrap());
        }
        assert_ne!(generate(7, &config(Family::Coverage)).unwrap(), generate(8, &config(Family::Coverage)).unwrap());
    }

    #[test]
    fn budget_and_costs() {
        let g = generate(3, &config(Family::Coverage)).unwrap();
        assert!(g.instance.costs().iter().all(|&c| (1..=10).contains(&c)));
        let expected = ((0.5 * g.instance.total_cost() as f64).floor() as u64).max(1);
        assert_eq!(g.instance.budget(), expected);
        let tiny = GeneratorConfig { n: 1, k: 1, family: Family::Coverage, cost_max: 1, budget_fraction: 0.1 };
        assert_eq!(generate(0, &tiny).unwrap().instance.budget(), 1);
    }

    #[test]
    fn invalid_parameters() {
        let mut c = config(Family::Coverage);
        c.budget_fraction = 0.0;
        assert!(generate(1, &c).is_err());
        c.budget_fraction = 1.5;
        assert!(generate(1, &c).is_err());
        let c = GeneratorConfig { cost_max: 0, ..config(Family::Coverage) };
        assert!(generate(1, &c).is_err());
        assert!("bogus".parse::<Family>().is_err());
    }

    #[test]
    fn generated_families_are_monotone_k_submodular() {
        for seed in 0..6 {
            for family in [Family::Coverage, Family::SeparableSum, Family::Tabular] {
                let cfg = GeneratorConfig { n: 4, k: 3, ..config(family) };
                let g = generate(seed, &cfg).unwrap();
                assert!(validate_monotone(&g.oracle).unwrap().passed);
                assert!(validate_orthant_submodular(&g.oracle).unwrap().passed);
                assert!(validate_lattice_ksubmodular(&g.oracle).unwrap().passed);
            }
        }
    }
}
