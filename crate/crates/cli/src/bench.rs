//! Seeded batches of generated instances solved by the knapsack greedy and
//! by exhaustive search.
//!
//! A master `ChaCha8Rng` seeded with the batch seed draws, for each instance
//! in order, its `n`, its `k` and its own generator seed. Budget fractions
//! cycle through the configured list by instance index, and the `mixed`
//! family alternates coverage and separable-sum instances. Instances are
//! solved in parallel and reported in index order.

use std::str::FromStr;
use std::time::Instant;

use ksub_core::generate::{generate, Family, GeneratorConfig};
use ksub_core::{count_bound, exact_bruteforce, knapsack_greedy, EvalCounter, Report, Space};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{CliError, Result};
use crate::io::Problem;
use crate::report::ReportRow;

/// `½(1 − 1/e)`.
pub const KNAPSACK_RATIO: f64 = 0.5 * (1.0 - 0.367_879_441_171_442_33);

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BenchFamily {
    Single(Family),
    /// Even indices coverage, odd indices separable sum.
    Mixed,
}

impl FromStr for BenchFamily {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "mixed" => Ok(BenchFamily::Mixed),
            other => Ok(BenchFamily::Single(other.parse()?)),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchConfig {
    pub seed: u64,
    pub count: usize,
    pub n_range: (usize, usize),
    pub k_range: (usize, usize),
    pub family: BenchFamily,
    pub cost_max: u64,
    pub budget_fractions: Vec<f64>,
}

impl BenchConfig {
    pub fn validate(&self) -> Result<()> {
        let (n_min, n_max) = self.n_range;
        let (k_min, k_max) = self.k_range;
        if n_min == 0 || k_min == 0 || n_min > n_max || k_min > k_max {
            return Err(CliError::Input(format!(
                "invalid ranges n {n_min}..={n_max}, k {k_min}..={k_max}"
            )));
        }
        if self.budget_fractions.is_empty() {
            return Err(CliError::Input("at least one budget fraction is required".into()));
        }
        // The exact solver must fit for the largest instance.
        Space::new(n_max, k_max)?;
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchCase {
    pub index: usize,
    pub seed: u64,
    pub config: GeneratorConfig,
}

impl BenchCase {
    pub fn problem(&self) -> Result<Problem> {
        Ok(generate(self.seed, &self.config)?.into())
    }
}

pub fn cases(cfg: &BenchConfig) -> Result<Vec<BenchCase>> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    (0..cfg.count)
        .map(|index| {
            let n = rng.gen_range(cfg.n_range.0..=cfg.n_range.1);
            let k = rng.gen_range(cfg.k_range.0..=cfg.k_range.1);
            let seed = rng.gen::<u64>();
            let family = match cfg.family {
                BenchFamily::Single(f) => f,
                BenchFamily::Mixed if index % 2 == 0 => Family::Coverage,
                BenchFamily::Mixed => Family::SeparableSum,
            };
            let budget_fraction = cfg.budget_fractions[index % cfg.budget_fractions.len()];
            let config = GeneratorConfig { n, k, family, cost_max: cfg.cost_max, budget_fraction };
            config.validate()?;
            Ok(BenchCase { index, seed, config })
        })
        .collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchResult {
    pub case: BenchCase,
    pub budget: u64,
    /// Knapsack greedy, with the optimum filled in.
    pub greedy: Report,
    pub exact: Report,
    pub greedy_millis: u64,
    pub exact_millis: u64,
}

pub fn run(cfg: &BenchConfig) -> Result<Vec<BenchResult>> {
    let cases = cases(cfg)?;
    cases
        .into_par_iter()
        .map(|case| {
            let p = case.problem()?;
            let start = Instant::now();
            let greedy = knapsack_greedy(&p.oracle, &p.instance, &mut EvalCounter::new())?;
            let greedy_millis = start.elapsed().as_millis() as u64;
            let start = Instant::now();
            let exact = exact_bruteforce(&p.oracle, &p.instance, &mut EvalCounter::new())?;
            let exact_millis = start.elapsed().as_millis() as u64;
            let greedy = greedy.with_optimum(exact.value);
            let exact = exact.clone().with_optimum(exact.value);
            Ok(BenchResult { budget: p.instance.budget(), case, greedy, exact, greedy_millis, exact_millis })
        })
        .collect()
}

/// Two rows per instance: the greedy run, then the exact run.
pub fn rows(results: &[BenchResult], timing: bool) -> Vec<ReportRow> {
    let mut out = Vec::with_capacity(2 * results.len());
    for r in results {
        let (n, k) = (r.case.config.n, r.case.config.k);
        let id = r.case.index.to_string();
        for (report, ms) in [(&r.greedy, r.greedy_millis), (&r.exact, r.exact_millis)] {
            let mut row = ReportRow::new(id.clone(), n, k, r.budget, report);
            row.millis = timing.then_some(ms);
            out.push(row);
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BenchSummary {
    pub instances: usize,
    /// Instances with a positive optimum, for which the ratio is defined.
    pub rated: usize,
    pub min_ratio: Option<f64>,
    pub mean_ratio: Option<f64>,
    pub max_evaluations: u64,
    /// Largest `evaluations / count_bound(n, k)` over greedy runs.
    pub max_bound_fraction: f64,
    pub ratio_violations: usize,
    pub bound_violations: usize,
}

impl BenchSummary {
    pub fn of(results: &[BenchResult]) -> Self {
        let ratios: Vec<f64> = results.iter().filter_map(|r| r.greedy.ratio).collect();
        let rated = ratios.len();
        let min_ratio = ratios.iter().copied().reduce(f64::min);
        let mean_ratio = (rated > 0).then(|| ratios.iter().sum::<f64>() / rated as f64);
        let mut max_evaluations = 0;
        let mut max_bound_fraction = 0.0f64;
        let mut ratio_violations = 0;
        let mut bound_violations = 0;
        for r in results {
            let bound = count_bound(r.case.config.n, r.case.config.k);
            max_evaluations = max_evaluations.max(r.greedy.evaluations);
            max_bound_fraction = max_bound_fraction.max(r.greedy.evaluations as f64 / bound as f64);
            if r.greedy.evaluations > bound {
                bound_violations += 1;
            }
            let opt = r.exact.value;
            if r.greedy.value < KNAPSACK_RATIO * opt - 1e-9 {
                ratio_violations += 1;
            }
        }
        Self {
            instances: results.len(),
            rated,
            min_ratio,
            mean_ratio,
            max_evaluations,
            max_bound_fraction,
            ratio_violations,
            bound_violations,
        }
    }

    pub fn passed(&self) -> bool {
        self.ratio_violations == 0 && self.bound_violations == 0
    }

    pub fn line(&self) -> String {
        let opt = |v: Option<f64>| v.map_or_else(|| "-".to_string(), |x| format!("{x:.7}"));
        format!(
            "instances={} rated={} min_ratio={} mean_ratio={} max_evaluations={} max_evaluations_over_count_bound={:.4} ratio_violations={} bound_violations={}",
            self.instances,
            self.rated,
            opt(self.min_ratio),
            opt(self.mean_ratio),
            self.max_evaluations,
            self.max_bound_fraction,
            self.ratio_violations,
            self.bound_violations,
        )
    }
}
