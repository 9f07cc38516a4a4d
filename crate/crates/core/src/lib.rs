//! Maximizing monotone k-submodular functions in the value-oracle model.
//!
//! A k-submodular function assigns a value to every way of placing a subset
//! of `n` items into `k` disjoint bins. This crate provides
//!
//! - [`Assignment`] and the lattice operations [`join`], [`meet`], [`precedes`];
//! - counted [`Oracle`] evaluation with three concrete families
//!   ([`CoverageOracle`], [`SeparableSumOracle`], [`TabularOracle`]);
//! - exhaustive validators for monotonicity, orthant submodularity and
//!   k-submodularity ([`validate`]);
//! - the unconstrained greedy (a ½-approximation), the knapsack greedy with
//!   size-1/2 enumeration plus density completion from every size-3 seed
//!   (a (½ − 1/(2e))-approximation using `O(n⁵k⁴)` evaluations), and an
//!   exhaustive exact solver ([`algorithms`]);
//! - checkers for the inequalities behind those guarantees ([`properties`])
//!   and seeded drivers for them ([`trials`]).
//!
//! Everything numeric is generic over [`Scalar`]: `f64`, `f32`, or the exact
//! rational [`Exact`]. The aliases below fix the common choices.

pub mod algorithms;
pub mod counter;
pub mod error;
pub mod generate;
pub mod instance;
pub mod lattice;
pub mod oracle;
pub mod properties;
pub mod report;
pub mod scalar;
pub mod space;
pub mod trials;
pub mod validate;

pub use algorithms::{
    count_bound, density_completion, exact_bruteforce, exact_unconstrained, knapsack_greedy, unconstrained_greedy,
    COUNT_BOUND_CONSTANT,
};
pub use counter::EvalCounter;
pub use error::{Error, Result};
pub use instance::Instance;
pub use lattice::{join, meet, precedes, Assignment, Dim, ItemId, Pair};
pub use oracle::{marginal_gain, CoverageOracle, Oracle, OracleSpec, SeparableSumOracle, TabularOracle};
pub use report::{Algorithm, SolveReport};
pub use scalar::Scalar;
pub use space::{enumeration_cap, Space, CAP_ENV_VAR, DEFAULT_ENUMERATION_CAP};
pub use validate::{
    validate_lattice_ksubmodular, validate_monotone, validate_orthant_submodular, ValidationVerdict, Witness,
};

/// Exact rational scalar.
pub type Exact = num_rational::Ratio<i64>;

pub type Coverage = CoverageOracle<f64>;
pub type SeparableSum = SeparableSumOracle<f64>;
pub type Tabular = TabularOracle<f64>;
pub type AnyOracle = OracleSpec<f64>;
pub type Report = SolveReport<f64>;
pub type Verdict = ValidationVerdict<f64>;

pub type ExactCoverage = CoverageOracle<Exact>;
pub type ExactSeparableSum = SeparableSumOracle<Exact>;
pub type ExactTabular = TabularOracle<Exact>;
pub type ExactOracle = OracleSpec<Exact>;
pub type ExactReport = SolveReport<Exact>;
