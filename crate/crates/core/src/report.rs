use std::fmt;

use serde::{Deserialize, Serialize};

use crate::lattice::Assignment;
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Algorithm {
    UnconstrainedGreedy,
    KnapsackGreedy,
    Exact,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::UnconstrainedGreedy => "unconstrained_greedy",
            Algorithm::KnapsackGreedy => "knapsack_greedy",
            Algorithm::Exact => "exact",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of one solver run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolveReport<T> {
    pub algorithm: Algorithm,
    pub solution: Assignment,
    pub value: T,
    pub evaluations: u64,
    pub optimum: Option<T>,
    pub ratio: Option<T>,
}

impl<T: Scalar> SolveReport<T> {
    pub fn new(algorithm: Algorithm, solution: Assignment, value: T, evaluations: u64) -> Self {
        Self { algorithm, solution, value, evaluations, optimum: None, ratio: None }
    }

    /// Records the optimum; the ratio is only defined for a positive optimum.
    pub fn with_optimum(mut self, optimum: T) -> Self {
        self.ratio = (optimum > T::zero()).then(|| self.value.clone() / optimum.clone());
        self.optimum = Some(optimum);
        self
    }
}
