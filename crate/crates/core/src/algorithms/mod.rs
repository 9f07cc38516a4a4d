//! Solvers for `max f(S)` over assignments, with or without a knapsack
//! constraint `c(U(S)) <= B`.
//!
//! Tie-breaking is fixed everywhere so runs are reproducible: among equal
//! values the lowest item, then the lowest dimension, then the earliest
//! candidate in canonical enumeration order wins.

mod bound;
mod exact;
mod greedy;
mod knapsack;

pub use bound::{count_bound, unconstrained_count_bound, COUNT_BOUND_CONSTANT};
pub use exact::{exact_bruteforce, exact_unconstrained};
pub use greedy::unconstrained_greedy;
pub use knapsack::{density_completion, knapsack_greedy, Completion, GreedyTrace, StepRecord};

use crate::error::{malformed, Result};
use crate::instance::Instance;
use crate::oracle::Oracle;
use crate::scalar::Scalar;

fn check_compatible<T: Scalar, O: Oracle<T> + ?Sized>(oracle: &O, inst: &Instance) -> Result<()> {
    if oracle.n() != inst.n() || oracle.k() != inst.k() {
        return Err(malformed(format!(
            "oracle is over {} items x {} dims but the instance has {} x {}",
            oracle.n(),
            oracle.k(),
            inst.n(),
            inst.k()
        )));
    }
    Ok(())
}
