//! Value oracles: the only access algorithms have to the objective `f`.
//!
//! Every counted evaluation goes through [`Oracle::evaluate`], which checks
//! the assignment against the oracle's ground set and ticks the caller's
//! [`EvalCounter`] exactly once.

mod coverage;
mod separable;
mod tabular;

pub use coverage::CoverageOracle;
pub use separable::SeparableSumOracle;
pub use tabular::TabularOracle;

use crate::counter::EvalCounter;
use crate::error::{precondition, Result};
use crate::lattice::{Assignment, Dim, ItemId};
use crate::scalar::Scalar;

pub trait Oracle<T: Scalar>: Sync {
    /// Number of items `n`.
    fn n(&self) -> usize;

    /// Number of dimensions `k`.
    fn k(&self) -> usize;

    /// `f(S)` with no bounds check and no accounting. Callers outside oracle
    /// implementations should use [`Oracle::evaluate`].
    fn value_of(&self, s: &Assignment) -> T;

    /// Counted evaluation of `f(S)`.
    fn evaluate(&self, s: &Assignment, counter: &mut EvalCounter) -> Result<T> {
        s.check_bounds(self.n(), self.k())?;
        counter.tick();
        Ok(self.value_of(s))
    }
}

impl<T: Scalar, O: Oracle<T> + ?Sized> Oracle<T> for &O {
    fn n(&self) -> usize {
        (**self).n()
    }

    fn k(&self) -> usize {
        (**self).k()
    }

    fn value_of(&self, s: &Assignment) -> T {
        (**self).value_of(s)
    }
}

/// `Δ_{a,i}(S) = f(S ∪ {(a,i)}) - f(S)`. Costs two counted evaluations.
pub fn marginal_gain<T, O>(
    oracle: &O,
    s: &Assignment,
    item: ItemId,
    dim: Dim,
    counter: &mut EvalCounter,
) -> Result<T>
where
    T: Scalar,
    O: Oracle<T> + ?Sized,
{
    if s.contains_item(item) {
        return Err(precondition(format!("item {item} is already assigned in {s}")));
    }
    let extended = s.with(item, dim)?;
    let base = oracle.evaluate(s, counter)?;
    let next = oracle.evaluate(&extended, counter)?;
    Ok(next - base)
}

/// One of the shipped oracle families.
#[derive(Clone, Debug, PartialEq)]
pub enum OracleSpec<T> {
    Coverage(CoverageOracle<T>),
    SeparableSum(SeparableSumOracle<T>),
    Tabular(TabularOracle<T>),
}

impl<T: Scalar> OracleSpec<T> {
    pub fn family(&self) -> &'static str {
        match self {
            OracleSpec::Coverage(_) => "coverage",
            OracleSpec::SeparableSum(_) => "separable_sum",
            OracleSpec::Tabular(_) => "tabular",
        }
    }
}

impl<T: Scalar> Oracle<T> for OracleSpec<T> {
    fn n(&self) -> usize {
        match self {
            OracleSpec::Coverage(o) => o.n(),
            OracleSpec::SeparableSum(o) => o.n(),
            OracleSpec::Tabular(o) => o.n(),
        }
    }

    fn k(&self) -> usize {
        match self {
            OracleSpec::Coverage(o) => o.k(),
            OracleSpec::SeparableSum(o) => o.k(),
            OracleSpec::Tabular(o) => o.k(),
        }
    }

    fn value_of(&self, s: &Assignment) -> T {
        match self {
            OracleSpec::Coverage(o) => o.value_of(s),
            OracleSpec::SeparableSum(o) => o.value_of(s),
            OracleSpec::Tabular(o) => o.value_of(s),
        }
    }
}

impl<T> From<CoverageOracle<T>> for OracleSpec<T> {
    fn from(o: CoverageOracle<T>) -> Self {
        OracleSpec::Coverage(o)
    }
}

impl<T> From<SeparableSumOracle<T>> for OracleSpec<T> {
    fn from(o: SeparableSumOracle<T>) -> Self {
        OracleSpec::SeparableSum(o)
    }
}

impl<T> From<TabularOracle<T>> for OracleSpec<T> {
    fn from(o: TabularOracle<T>) -> Self {
        OracleSpec::Tabular(o)
    }
}
